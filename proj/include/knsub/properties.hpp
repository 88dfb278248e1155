#pragma once

// Property registry for the theorem harness. Verified-tier entries are
// statements that must hold on every catalog instance; scrutiny-tier entries
// are claims under suspicion whose empirical outcome is recorded, never
// gating. Each property enumerates its instances deterministically.

#include "knsub/harness.hpp"

namespace knsub::harness::detail {

using Ctxs = std::vector<ModuleCtx>;

inline bool ideal_kn(const ZModRing& R, long long divisor, int k, int n) {
    return is_kn_closed_ideal(RingIdeal(R, divisor == R.modulus ? 0 : divisor), k, n).holds;
}

inline std::string ideal_kn_witness(const ZModRing& R, long long divisor, int k, int n) {
    auto v = is_kn_closed_ideal(RingIdeal(R, divisor == R.modulus ? 0 : divisor), k, n);
    return v.holds ? "holds" : "x=" + std::to_string(*v.witness);
}

inline RingIdeal divisor_ideal(const ZModRing& R, long long d) {
    return RingIdeal(R, d == R.modulus ? 0 : d);
}

// All proper-submodule profile pairs (i < j).
template <typename F>
inline void for_pairs(const ModuleCtx& ctx, F&& f) {
    for (std::size_t i = 0; i < ctx.prof.size(); ++i)
        for (std::size_t j = i + 1; j < ctx.prof.size(); ++j) f(ctx.prof[i], ctx.prof[j]);
}

inline const std::vector<PropertyDef>& all_properties() {
    static const std::vector<PropertyDef> defs = [] {
        std::vector<PropertyDef> v;
        auto add = [&](std::string name, Tier tier, std::string note,
                       std::function<void(const Ctxs&, const Bounds&, Sink&)> run, bool whitelisted = false,
                       std::string vacuity_note = "") {
            v.push_back({std::move(name), tier, std::move(note), whitelisted, std::move(vacuity_note),
                         std::move(run)});
        };

        add("T-l1", Tier::verified,
            "(k,n)-closedness quantified over elements agrees with the form quantified over submodules L",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof) {
                        long long m = ctx.M->ring().modulus;
                        RingIdeal res = divisor_ideal(ctx.M->ring(), p.res);
                        for (int k = 1; k <= B.kmax; ++k)
                            for (int n = 1; n <= B.kmax; ++n) {
                                bool sub = true;
                                for (long long r = 0; r < m && sub; ++r) {
                                    if (res.contains(ctx.M->ring().pow(r, n))) continue;
                                    long long rk = ctx.M->ring().pow(r, k);
                                    long long rn1 = ctx.M->ring().pow(r, n - 1);
                                    for (const Submodule& L : ctx.lattice) {
                                        bool hyp = true, con = true;
                                        for (Index g : L.generators()) {
                                            if (!p.N.contains(ctx.M->scalar(rk, g))) hyp = false;
                                            if (!p.N.contains(ctx.M->scalar(rn1, g))) con = false;
                                        }
                                        if (hyp && !con) {
                                            sub = false;
                                            break;
                                        }
                                    }
                                }
                                s.check(sub == ctx.g(p, k, n),
                                        [&] { return ctx.sub_name(p.N) + "; " + cell_str(k, n); },
                                        [&] {
                                            return std::string("element form ") +
                                                   (ctx.g(p, k, n) ? "holds" : "fails") + ", submodule form " +
                                                   (sub ? "holds" : "fails");
                                        });
                            }
                    }
            });

        add("T-t0", Tier::verified, "a (k,n)-closed submodule has a (k,n)-closed residual ideal (N:M)",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof)
                        for (int k = 1; k <= B.kmax; ++k)
                            for (int n = 1; n <= B.kmax; ++n) {
                                if (!ctx.g(p, k, n)) {
                                    s.vacuous();
                                    continue;
                                }
                                s.check(ideal_kn(ctx.M->ring(), p.res, k, n),
                                        [&] { return ctx.sub_name(p.N) + "; " + cell_str(k, n); },
                                        [&] { return ideal_kn_witness(ctx.M->ring(), p.res, k, n); });
                            }
            });

        add("T-tsm1", Tier::verified, "(k,n)-closedness passes to every element residual (N:x), x outside N",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof)
                        for (int k = 1; k <= B.kmax; ++k)
                            for (int n = 1; n <= B.kmax; ++n) {
                                if (!ctx.g(p, k, n)) {
                                    s.vacuous();
                                    continue;
                                }
                                bool ok = true;
                                Index bad = 0;
                                for (Index x = 0; x < ctx.M->size(); ++x) {
                                    if (p.N.contains(x)) continue;
                                    if (!ideal_kn(ctx.M->ring(), p.res_elem[x], k, n)) {
                                        ok = false;
                                        bad = x;
                                        break;
                                    }
                                }
                                s.check(ok, [&] { return ctx.sub_name(p.N) + "; " + cell_str(k, n); },
                                        [&] {
                                            return "x=" + ctx.M->label(bad) + ": (N:x)=(" +
                                                   std::to_string(p.res_elem[bad]) + ") not (k,n)-closed, " +
                                                   ideal_kn_witness(ctx.M->ring(), p.res_elem[bad], k, n);
                                        });
                            }
            });

        add("T-tsm2", Tier::verified,
            "(k,n)-closed element residuals at every x outside N force N to be (k,n+1)-closed",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof)
                        for (int k = 1; k <= B.kmax; ++k)
                            for (int n = 1; n + 1 <= B.kmax; ++n) {
                                bool hyp = true;
                                for (Index x = 0; x < ctx.M->size() && hyp; ++x)
                                    if (!p.N.contains(x) && !ideal_kn(ctx.M->ring(), p.res_elem[x], k, n))
                                        hyp = false;
                                if (!hyp) {
                                    s.vacuous();
                                    continue;
                                }
                                s.check(ctx.g(p, k, n + 1),
                                        [&] { return ctx.sub_name(p.N) + "; " + cell_str(k, n); },
                                        [&] { return kn_witness(p.N, k, n + 1); });
                            }
            });

        add("T-lsm", Tier::verified,
            "closed generator residuals force a closed (N:M) when k>n; for cyclic M, (N:g) and (N:M) agree",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof)
                        for (int k = 2; k <= B.kmax; ++k)
                            for (int n = 1; n < k; ++n) {
                                bool hyp = true;
                                for (Index g : ctx.M->generators())
                                    if (!p.N.contains(g) && !ideal_kn(ctx.M->ring(), p.res_elem[g], k, n))
                                        hyp = false;
                                if (hyp)
                                    s.check(ideal_kn(ctx.M->ring(), p.res, k, n),
                                            [&] { return ctx.sub_name(p.N) + "; " + cell_str(k, n); },
                                            [&] { return ideal_kn_witness(ctx.M->ring(), p.res, k, n); });
                                else
                                    s.vacuous();
                                if (ctx.cyclic) {
                                    bool a = ideal_kn(ctx.M->ring(), p.res_elem[ctx.cyclic_gen], k, n);
                                    bool b = ideal_kn(ctx.M->ring(), p.res, k, n);
                                    s.check(a == b,
                                            [&] {
                                                return ctx.sub_name(p.N) + " (cyclic case); " + cell_str(k, n);
                                            },
                                            [&] {
                                                return std::string("(N:g) ") + (a ? "closed" : "not closed") +
                                                       " but (N:M) " + (b ? "closed" : "not closed");
                                            });
                                }
                            }
                // division ring + cyclic: the residual (N:m') is one and the
                // same ideal at every element m' outside N
                for (const auto& ctx : ctxs) {
                    if (!ctx.prime_field) continue;
                    for (int li : ctx.proper) {
                        const Submodule& L = ctx.lattice[li];
                        if (L.is_zero()) continue;
                        SubmoduleModule SM = submodule_as_module(L);
                        Submodule N0 = Submodule::zero(SM.module);
                        if (!N0.is_proper()) continue;
                        bool same = true;
                        long long first = -1;
                        for (Index x = 0; x < SM.module->size(); ++x) {
                            if (N0.contains(x)) continue;
                            long long r = residual_element(N0, x).gen;
                            if (first < 0) first = r;
                            if (r != first) same = false;
                        }
                        s.check(same,
                                [&] {
                                    return ctx.entry.origin + ": line <" + L.gens_label() +
                                           "> (division-ring residual equality)";
                                },
                                [] { return std::string("element residuals differ"); });
                    }
                }
            });

        add("T-c2", Tier::verified,
            "over a prime field, a cyclic module with (k,n)-closed generator residual is (k,n+1)-closed",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs) {
                    if (!ctx.prime_field) continue;
                    for (int li : ctx.proper) {
                        const Submodule& L = ctx.lattice[li];
                        if (L.is_zero()) continue;
                        SubmoduleModule SM = submodule_as_module(L);
                        Submodule N0 = Submodule::zero(SM.module);
                        if (!N0.is_proper()) continue;
                        Index g = SM.module->generators().empty() ? 0 : SM.module->generators()[0];
                        long long resg = residual_element(N0, g).gen;
                        for (int k = 1; k <= B.kmax; ++k)
                            for (int n = 1; n + 1 <= B.kmax; ++n) {
                                if (ideal_kn(SM.module->ring(), resg, k, n))
                                    s.check(is_kn_closed(N0, k, n + 1).holds,
                                            [&] {
                                                return ctx.entry.origin + ": line <" + L.gens_label() + ">; " +
                                                       cell_str(k, n);
                                            },
                                            [&] { return kn_witness(N0, k, n + 1); });
                                else
                                    s.vacuous();
                                if (is_kn_closed_ideal(divisor_ideal(SM.module->ring(), resg), n + 1, n).holds)
                                    s.check(is_semi_n_absorbing(N0, n + 1).holds,
                                            [&] {
                                                return ctx.entry.origin + ": line <" + L.gens_label() +
                                                       "> (semi case); n=" + std::to_string(n);
                                            },
                                            [&] { return kn_witness(N0, n + 1, n + 1); });
                                else
                                    s.vacuous();
                            }
                    }
                }
            },
            true, "prime-field instances arise from cyclic lines; conclusions are near-trivial there by design");

        add("T-prop-colon", Tier::verified,
            "colon characterization: (N:r^k x)=(N:r^{n-1}x) or r^n in (N:M), equivalent to (k,n)-closedness "
            "on its provable domain k >= n-1",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof)
                        for (int k = 1; k <= B.kmax; ++k)
                            for (int n = 1; n <= B.kmax; ++n) {
                                if (k < n - 1) continue;
                                bool ct = colon_test(p.N, k, n).holds;
                                s.check(ct == ctx.g(p, k, n),
                                        [&] { return ctx.sub_name(p.N) + "; " + cell_str(k, n); },
                                        [&] {
                                            return std::string("colon test ") + (ct ? "holds" : "fails") +
                                                   ", closedness " + (ctx.g(p, k, n) ? "holds" : "fails");
                                        });
                            }
            });

        add("T-prop-colon-full", Tier::scrutiny,
            "colon characterization probed on the remaining cells k < n-1, where the residual comparison can "
            "strictly refine closedness",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof)
                        for (int k = 1; k <= B.kmax; ++k)
                            for (int n = 1; n <= B.kmax; ++n) {
                                if (k >= n - 1) continue;
                                Verdict ct = colon_test(p.N, k, n);
                                s.check(ct.holds == ctx.g(p, k, n),
                                        [&] { return ctx.sub_name(p.N) + "; " + cell_str(k, n); },
                                        [&] {
                                            return std::string("colon test ") + (ct.holds ? "holds" : "fails") +
                                                   " (" + witness_str(ct) + "), closedness " +
                                                   (ctx.g(p, k, n) ? "holds" : "fails");
                                        });
                            }
            });

        add("T-t1-1", Tier::verified, "semiprime submodules are (k,n)-closed and semi n-absorbing for n >= 2",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof) {
                        if (!p.semiprime) {
                            s.vacuous();
                            continue;
                        }
                        bool ok = true;
                        int bk = 0, bn = 0;
                        for (int k = 1; k <= B.kmax && ok; ++k)
                            for (int n = 2; n <= B.kmax && ok; ++n)
                                if (!ctx.g(p, k, n)) {
                                    ok = false;
                                    bk = k;
                                    bn = n;
                                }
                        s.check(ok, [&] { return ctx.sub_name(p.N); },
                                [&] { return cell_str(bk, bn) + ": " + kn_witness(p.N, bk, bn); });
                    }
            });

        add("T-t1-1-n1", Tier::scrutiny,
            "the n=1 reading: a semiprime submodule would be (k,1)-closed for every k",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof) {
                        if (!p.semiprime) {
                            s.vacuous();
                            continue;
                        }
                        for (int k = 1; k <= B.kmax; ++k)
                            s.check(ctx.g(p, k, 1), [&] { return ctx.sub_name(p.N) + "; " + cell_str(k, 1); },
                                    [&] { return kn_witness(p.N, k, 1); });
                    }
            });

        add("T-t1-2", Tier::verified, "n-absorbing submodules are semi n-absorbing",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof)
                        for (int n = 1; n <= B.nabs_max && n <= B.kmax; ++n) {
                            if (!p.nabs[n]) {
                                s.vacuous();
                                continue;
                            }
                            s.check(ctx.g(p, n, n),
                                    [&] { return ctx.sub_name(p.N) + "; n=" + std::to_string(n); },
                                    [&] { return kn_witness(p.N, n, n); });
                        }
            });

        add("T-t1-3", Tier::verified, "n-absorbing submodules are (k,n)-closed for every k",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof)
                        for (int n = 1; n <= B.nabs_max && n <= B.kmax; ++n) {
                            if (!p.nabs[n]) {
                                s.vacuous();
                                continue;
                            }
                            for (int k = 1; k <= B.kmax; ++k)
                                s.check(ctx.g(p, k, n),
                                        [&] { return ctx.sub_name(p.N) + "; " + cell_str(k, n); },
                                        [&] { return kn_witness(p.N, k, n); });
                        }
            });

        add("T-t1-4", Tier::verified, "monotonicity: (k,n)-closed implies (k',n')-closed for k' <= k, n' >= n",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof) {
                        bool ok = true;
                        std::string why;
                        for (int k = 1; k <= B.kmax && ok; ++k)
                            for (int n = 1; n <= B.kmax && ok; ++n) {
                                if (!ctx.g(p, k, n)) continue;
                                for (int k1 = 1; k1 <= k && ok; ++k1)
                                    for (int n1 = n; n1 <= B.kmax && ok; ++n1)
                                        if (!ctx.g(p, k1, n1)) {
                                            ok = false;
                                            why = cell_str(k, n) + " holds but " + cell_str(k1, n1) + " fails";
                                        }
                            }
                        s.check(ok, [&] { return ctx.sub_name(p.N); }, [&] { return why; });
                    }
            });

        add("T-t1-5", Tier::verified, "semi n-absorbing implies semi n'-absorbing for all n' >= n",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof)
                        for (int n = 1; n <= B.kmax; ++n) {
                            if (!ctx.g(p, n, n)) {
                                s.vacuous();
                                continue;
                            }
                            for (int n1 = n; n1 <= B.kmax; ++n1)
                                s.check(ctx.g(p, n1, n1),
                                        [&] {
                                            return ctx.sub_name(p.N) + "; n=" + std::to_string(n) +
                                                   " n'=" + std::to_string(n1);
                                        },
                                        [&] { return kn_witness(p.N, n1, n1); });
                        }
            });

        add("T-t1-6", Tier::verified, "quasi-prime submodules are (k,n)-closed for k >= n >= 2",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof) {
                        if (!p.quasi) {
                            s.vacuous();
                            continue;
                        }
                        for (int n = 2; n <= B.kmax; ++n)
                            for (int k = n; k <= B.kmax; ++k)
                                s.check(ctx.g(p, k, n),
                                        [&] { return ctx.sub_name(p.N) + "; " + cell_str(k, n); },
                                        [&] { return kn_witness(p.N, k, n); });
                    }
            });

        add("T-ti", Tier::verified, "semi n-absorbing implies (k,n)-closed for every positive k",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof)
                        for (int n = 1; n <= B.kmax; ++n) {
                            if (!ctx.g(p, n, n)) {
                                s.vacuous();
                                continue;
                            }
                            for (int k = 1; k <= B.kmax; ++k)
                                s.check(ctx.g(p, k, n),
                                        [&] { return ctx.sub_name(p.N) + "; " + cell_str(k, n); },
                                        [&] { return kn_witness(p.N, k, n); });
                        }
            });

        add("T-ciff", Tier::verified, "for k > n, (k,n)-closed is equivalent to semi n-absorbing",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof)
                        for (int k = 2; k <= B.kmax; ++k)
                            for (int n = 1; n < k; ++n)
                                s.check(ctx.g(p, k, n) == ctx.g(p, n, n),
                                        [&] { return ctx.sub_name(p.N) + "; " + cell_str(k, n); },
                                        [&] {
                                            return std::string("(k,n) ") +
                                                   (ctx.g(p, k, n) ? "holds" : "fails") + ", (n,n) " +
                                                   (ctx.g(p, n, n) ? "holds" : "fails");
                                        });
            });

        add("T-t2", Tier::verified,
            "intersections of families of semiprime submodules are (k,n)-closed for n >= 2",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs) {
                    std::vector<const SubProfile*> sp;
                    for (const auto& p : ctx.prof)
                        if (p.semiprime) sp.push_back(&p);
                    std::vector<std::vector<const SubProfile*>> fams;
                    for (std::size_t i = 0; i < sp.size(); ++i)
                        for (std::size_t j = i + 1; j < sp.size(); ++j)
                            fams.push_back({sp[i], sp[j]});
                    if (sp.size() > 2) fams.push_back(sp);
                    for (const auto& fam : fams) {
                        Submodule I = fam[0]->N;
                        for (std::size_t i = 1; i < fam.size(); ++i) I = intersect(I, fam[i]->N);
                        const SubProfile* pI = ctx.profile(I);
                        for (int k = 1; k <= B.kmax; ++k)
                            for (int n = 2; n <= B.kmax; ++n)
                                s.check(ctx.g(*pI, k, n),
                                        [&] {
                                            return ctx.sub_name(I) + " (intersection of " +
                                                   std::to_string(fam.size()) + " semiprimes); " + cell_str(k, n);
                                        },
                                        [&] { return kn_witness(I, k, n); });
                    }
                }
            });

        add("T-t2-n1", Tier::scrutiny,
            "the n=1 reading: semiprime intersections would also be (k,1)-closed",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs) {
                    std::vector<const SubProfile*> sp;
                    for (const auto& p : ctx.prof)
                        if (p.semiprime) sp.push_back(&p);
                    for (std::size_t i = 0; i < sp.size(); ++i)
                        for (std::size_t j = i + 1; j < sp.size(); ++j) {
                            Submodule I = intersect(sp[i]->N, sp[j]->N);
                            const SubProfile* pI = ctx.profile(I);
                            for (int k = 1; k <= B.kmax; ++k)
                                s.check(ctx.g(*pI, k, 1),
                                        [&] { return ctx.sub_name(I) + "; " + cell_str(k, 1); },
                                        [&] { return kn_witness(I, k, 1); });
                        }
                }
            });

        add("T-rad", Tier::verified,
            "M-rad(N) and Rad(M) are (k,n)-closed for every k and every n >= 2",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs) {
                    auto check_all = [&](const Submodule& T, const std::string& what) {
                        if (!T.is_proper()) {
                            s.vacuous();
                            return;
                        }
                        const SubProfile* pT = ctx.profile(T);
                        for (int k = 1; k <= B.kmax; ++k)
                            for (int n = 2; n <= B.kmax; ++n)
                                s.check(ctx.g(*pT, k, n),
                                        [&] {
                                            return ctx.entry.origin + ": " + what + "=<" + T.gens_label() +
                                                   ">; " + cell_str(k, n);
                                        },
                                        [&] { return kn_witness(T, k, n); });
                    };
                    for (const auto& p : ctx.prof) check_all(m_radical(p.N, ctx.lattice), "M-rad(N)");
                    std::optional<Submodule> rad;
                    for (const auto& p : ctx.prof)
                        if (p.maximal) rad = rad ? intersect(*rad, p.N) : p.N;
                    if (rad) check_all(*rad, "Rad(M)");
                }
            });

        add("T-rad-n1", Tier::scrutiny, "the n=1 reading for M-rad(N) and Rad(M)",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof) {
                        Submodule T = m_radical(p.N, ctx.lattice);
                        if (!T.is_proper()) {
                            s.vacuous();
                            continue;
                        }
                        const SubProfile* pT = ctx.profile(T);
                        for (int k = 1; k <= B.kmax; ++k)
                            s.check(ctx.g(*pT, k, 1),
                                    [&] {
                                        return ctx.entry.origin + ": M-rad(<" + p.N.gens_label() + ">)=<" +
                                               T.gens_label() + ">; " + cell_str(k, 1);
                                    },
                                    [&] { return kn_witness(T, k, 1); });
                    }
            });

        add("T-l3", Tier::verified,
            "on finitely generated multiplication modules, pairwise comaximal products equal intersections",
            [](const Ctxs& ctxs, const Bounds&, Sink& s) {
                for (const auto& ctx : ctxs) {
                    if (!ctx.multiplication) continue;
                    for_pairs(ctx, [&](const SubProfile& a, const SubProfile& b) {
                        if (!are_comaximal(a.N, b.N)) {
                            s.vacuous();
                            return;
                        }
                        Submodule pr = product(a.N, b.N, true);
                        Submodule in = intersect(a.N, b.N);
                        s.check(pr.equals(in),
                                [&] { return ctx.sub_name(a.N) + " with <" + b.N.gens_label() + ">"; },
                                [&] {
                                    return "NK=<" + pr.gens_label() + "> vs intersection=<" + in.gens_label() +
                                           ">";
                                });
                    });
                    for (std::size_t i = 0; i < ctx.prof.size(); ++i)
                        for (std::size_t j = i + 1; j < ctx.prof.size(); ++j)
                            for (std::size_t l = j + 1; l < ctx.prof.size(); ++l) {
                                const Submodule &A = ctx.prof[i].N, &Bb = ctx.prof[j].N, &C = ctx.prof[l].N;
                                if (!are_comaximal(A, Bb) || !are_comaximal(A, C) || !are_comaximal(Bb, C)) {
                                    s.vacuous();
                                    continue;
                                }
                                bool com = are_comaximal(intersect(A, Bb), C);
                                Submodule pr = product(product(A, Bb, true), C, true);
                                Submodule in = intersect(intersect(A, Bb), C);
                                s.check(com && pr.equals(in),
                                        [&] {
                                            return ctx.entry.origin + ": triple <" + A.gens_label() + ">,<" +
                                                   Bb.gens_label() + ">,<" + C.gens_label() + ">";
                                        },
                                        [&] {
                                            return com ? ("product=<" + pr.gens_label() + "> vs intersection=<" +
                                                          in.gens_label() + ">")
                                                       : std::string("intersection not comaximal with third");
                                        });
                            }
                }
            });

        add("T-tf2", Tier::verified,
            "products of pairwise comaximal semiprime submodules of a multiplication module are (k,n)-closed "
            "for n >= 2",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs) {
                    if (!ctx.multiplication) continue;
                    for_pairs(ctx, [&](const SubProfile& a, const SubProfile& b) {
                        if (!a.semiprime || !b.semiprime || !are_comaximal(a.N, b.N)) {
                            s.vacuous();
                            return;
                        }
                        Submodule P = product(a.N, b.N, true);
                        const SubProfile* pP = ctx.profile(P);
                        if (!pP) {
                            s.vacuous();
                            return;
                        }
                        for (int k = 1; k <= B.kmax; ++k)
                            for (int n = 2; n <= B.kmax; ++n)
                                s.check(ctx.g(*pP, k, n),
                                        [&] {
                                            return ctx.sub_name(P) + " (product of comaximal semiprimes); " +
                                                   cell_str(k, n);
                                        },
                                        [&] { return kn_witness(P, k, n); });
                    });
                }
            });

        add("T-tf2-n1", Tier::scrutiny,
            "the n=1 reading for products of pairwise comaximal semiprime submodules",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs) {
                    if (!ctx.multiplication) continue;
                    for_pairs(ctx, [&](const SubProfile& a, const SubProfile& b) {
                        if (!a.semiprime || !b.semiprime || !are_comaximal(a.N, b.N)) {
                            s.vacuous();
                            return;
                        }
                        Submodule P = product(a.N, b.N, true);
                        const SubProfile* pP = ctx.profile(P);
                        if (!pP) {
                            s.vacuous();
                            return;
                        }
                        for (int k = 1; k <= B.kmax; ++k)
                            s.check(ctx.g(*pP, k, 1), [&] { return ctx.sub_name(P) + "; " + cell_str(k, 1); },
                                    [&] { return kn_witness(P, k, 1); });
                    });
                }
            });

        add("T-tf2-inpart", Tier::scrutiny,
            "the power clause: for semiprime N, the product power N^n would be (k,n)-closed",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs) {
                    if (!ctx.multiplication) continue;
                    for (const auto& p : ctx.prof) {
                        if (!p.semiprime) {
                            s.vacuous();
                            continue;
                        }
                        Submodule P = p.N;
                        for (int n = 1; n <= B.kmax; ++n) {
                            if (n > 1) P = product(P, p.N, true);
                            const SubProfile* pP = ctx.profile(P);
                            if (!pP) {
                                s.vacuous();
                                continue;
                            }
                            for (int k = 1; k <= B.kmax; ++k)
                                s.check(ctx.g(*pP, k, n),
                                        [&] {
                                            return ctx.sub_name(p.N) + "^" + std::to_string(n) + "=<" +
                                                   P.gens_label() + ">; " + cell_str(k, n);
                                        },
                                        [&] { return kn_witness(P, k, n); });
                        }
                    }
                }
            });

        add("T-chain", Tier::verified, "the intersection of a chain of (k,n)-closed submodules is (k,n)-closed",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for_pairs(ctx, [&](const SubProfile& a, const SubProfile& b) {
                        const SubProfile *lo = &a, *hi = &b;
                        if (!lo->N.subset_of(hi->N)) std::swap(lo, hi);
                        if (!lo->N.subset_of(hi->N)) {
                            s.vacuous();
                            return;
                        }
                        Submodule I = intersect(lo->N, hi->N);
                        const SubProfile* pI = ctx.profile(I);
                        bool any = false;
                        for (int k = 1; k <= B.kmax; ++k)
                            for (int n = 1; n <= B.kmax; ++n) {
                                if (!ctx.g(*lo, k, n) || !ctx.g(*hi, k, n)) continue;
                                any = true;
                                s.check(ctx.g(*pI, k, n),
                                        [&] {
                                            return ctx.sub_name(lo->N) + " in chain with <" +
                                                   hi->N.gens_label() + ">; " + cell_str(k, n);
                                        },
                                        [&] { return kn_witness(I, k, n); });
                            }
                        if (!any) s.vacuous();
                    });
            });

        add("T-int1", Tier::scrutiny,
            "claimed: semi n1- and semi n2-absorbing submodules intersect to a semi (max(n1,n2)+1)-absorbing one",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for_pairs(ctx, [&](const SubProfile& a, const SubProfile& b) {
                        for (int n1 = 1; n1 <= B.kmax; ++n1)
                            for (int n2 = 1; n2 <= B.kmax; ++n2) {
                                int n = std::max(n1, n2);
                                if (n + 1 > B.kmax) continue;
                                if (!ctx.g(a, n1, n1) || !ctx.g(b, n2, n2)) {
                                    s.vacuous();
                                    continue;
                                }
                                Submodule I = intersect(a.N, b.N);
                                const SubProfile* pI = ctx.profile(I);
                                s.check(ctx.g(*pI, n + 1, n + 1),
                                        [&] {
                                            return ctx.sub_name(I) + " (n1=" + std::to_string(n1) +
                                                   ", n2=" + std::to_string(n2) + ")";
                                        },
                                        [&] { return kn_witness(I, n + 1, n + 1); });
                            }
                    });
            });

        add("T-int2", Tier::scrutiny,
            "claimed: t submodules all semi n-absorbing intersect to a semi (n+t)-absorbing one",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs) {
                    for (std::size_t i = 0; i < ctx.prof.size(); ++i)
                        for (std::size_t j = i + 1; j < ctx.prof.size(); ++j)
                            for (std::size_t l = j + 1; l < ctx.prof.size(); ++l)
                                for (int n = 1; n + 3 <= B.kmax; ++n) {
                                    const SubProfile &a = ctx.prof[i], &b = ctx.prof[j], &c = ctx.prof[l];
                                    if (!ctx.g(a, n, n) || !ctx.g(b, n, n) || !ctx.g(c, n, n)) {
                                        s.vacuous();
                                        continue;
                                    }
                                    Submodule I = intersect(intersect(a.N, b.N), c.N);
                                    const SubProfile* pI = ctx.profile(I);
                                    s.check(ctx.g(*pI, n + 3, n + 3),
                                            [&] {
                                                return ctx.sub_name(I) + " (t=3, n=" + std::to_string(n) + ")";
                                            },
                                            [&] { return kn_witness(I, n + 3, n + 3); });
                                }
                }
            });

        add("T-int3", Tier::scrutiny,
            "claimed: semi n_i-absorbing submodules intersect to a semi (max n_i + 2)-absorbing one",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (std::size_t i = 0; i < ctx.prof.size(); ++i)
                        for (std::size_t j = i + 1; j < ctx.prof.size(); ++j)
                            for (std::size_t l = j + 1; l < ctx.prof.size(); ++l)
                                for (int n1 = 1; n1 <= B.kmax; ++n1)
                                    for (int n2 = n1; n2 <= B.kmax; ++n2)
                                        for (int n3 = n2; n3 <= B.kmax; ++n3) {
                                            int n = n3;
                                            if (n + 2 > B.kmax) continue;
                                            const SubProfile &a = ctx.prof[i], &b = ctx.prof[j],
                                                             &c = ctx.prof[l];
                                            if (!ctx.g(a, n1, n1) || !ctx.g(b, n2, n2) || !ctx.g(c, n3, n3)) {
                                                s.vacuous();
                                                continue;
                                            }
                                            Submodule I = intersect(intersect(a.N, b.N), c.N);
                                            const SubProfile* pI = ctx.profile(I);
                                            s.check(ctx.g(*pI, n + 2, n + 2),
                                                    [&] {
                                                        return ctx.sub_name(I) + " (n_i=" +
                                                               std::to_string(n1) + "," + std::to_string(n2) +
                                                               "," + std::to_string(n3) + ")";
                                                    },
                                                    [&] { return kn_witness(I, n + 2, n + 2); });
                                        }
            });

        add("T-divint", Tier::verified,
            "over a prime field, intersections of (k_j,n_j)-closed submodules of a cyclic module are "
            "(k,n+1)-closed in the stated range",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs) {
                    if (!ctx.prime_field) continue;
                    for (int li : ctx.proper) {
                        const Submodule& L = ctx.lattice[li];
                        if (L.is_zero()) continue;
                        SubmoduleModule SM = submodule_as_module(L);
                        Submodule N0 = Submodule::zero(SM.module);
                        if (!N0.is_proper()) continue;
                        for (int k1 = 1; k1 <= B.kmax; ++k1)
                            for (int n1 = 1; n1 <= B.kmax; ++n1) {
                                if (!is_kn_closed(N0, k1, n1).holds) {
                                    s.vacuous();
                                    continue;
                                }
                                int k = k1;
                                for (int n = std::min(k, n1); n + 1 <= B.kmax; ++n)
                                    s.check(is_kn_closed(N0, k, n + 1).holds,
                                            [&] {
                                                return ctx.entry.origin + ": line <" + L.gens_label() + ">; " +
                                                       cell_str(k, n + 1);
                                            },
                                            [&] { return kn_witness(N0, k, n + 1); });
                            }
                    }
                }
            },
            true, "prime-field instances arise from cyclic lines; conclusions are near-trivial there by design");

        add("T-tsec", Tier::verified,
            "a secondary submodule meets a semi n-absorbing one in a secondary submodule (when nonzero)",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (std::size_t i = 0; i < ctx.lattice.size(); ++i) {
                        const Submodule& N = ctx.lattice[i];
                        if (N.is_zero() || !ctx.secondary[i]) continue;
                        for (const auto& kp : ctx.prof)
                            for (int n = 1; n <= B.kmax; ++n) {
                                if (!ctx.g(kp, n, n)) {
                                    s.vacuous();
                                    continue;
                                }
                                Submodule I = intersect(N, kp.N);
                                if (I.is_zero()) {
                                    s.vacuous();
                                    continue;
                                }
                                int ii = ctx.by_mask.at(I.mask());
                                s.check(ctx.secondary[ii] != 0,
                                        [&] {
                                            return ctx.entry.origin + ": secondary <" + N.gens_label() +
                                                   "> intersect semi-" + std::to_string(n) + " <" +
                                                   kp.N.gens_label() + ">";
                                        },
                                        [&] {
                                            auto v = is_secondary(I);
                                            return "homothety r=" + std::to_string(v.witness ? *v.witness : -1) +
                                                   " neither surjective nor nilpotent on <" + I.gens_label() +
                                                   ">";
                                        });
                            }
                    }
            });

        add("T-csec", Tier::verified,
            "consequence of the secondary-intersection theorem: a nonzero semi n-absorbing K inside a "
            "secondary N is itself secondary",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (std::size_t i = 0; i < ctx.lattice.size(); ++i) {
                        const Submodule& N = ctx.lattice[i];
                        if (N.is_zero() || !ctx.secondary[i]) continue;
                        for (const auto& kp : ctx.prof) {
                            if (kp.N.is_zero() || !kp.N.subset_of(N)) continue;
                            for (int n = 1; n <= B.kmax; ++n) {
                                if (!ctx.g(kp, n, n)) {
                                    s.vacuous();
                                    continue;
                                }
                                int ki = ctx.by_mask.at(kp.N.mask());
                                s.check(ctx.secondary[ki] != 0,
                                        [&] {
                                            return ctx.entry.origin + ": K=<" + kp.N.gens_label() +
                                                   "> inside secondary <" + N.gens_label() + ">";
                                        },
                                        [&] { return "K not secondary"; });
                            }
                        }
                    }
            });

        add("T-csec-lit", Tier::scrutiny,
            "claimed: every proper K inside a secondary semi n-absorbing N is semi n-absorbing",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& np : ctx.prof) {
                        int ni = ctx.by_mask.at(np.N.mask());
                        if (np.N.is_zero() || !ctx.secondary[ni]) continue;
                        for (int n = 1; n <= B.kmax; ++n) {
                            if (!ctx.g(np, n, n)) continue;
                            for (const auto& kp : ctx.prof) {
                                if (!kp.N.subset_of(np.N) || kp.N.equals(np.N)) continue;
                                s.check(ctx.g(kp, n, n),
                                        [&] {
                                            return ctx.entry.origin + ": K=<" + kp.N.gens_label() +
                                                   "> inside secondary semi-" + std::to_string(n) + " <" +
                                                   np.N.gens_label() + ">";
                                        },
                                        [&] { return kn_witness(kp.N, n, n); });
                            }
                        }
                    }
            });

        add("T-l2", Tier::verified,
            "strongly-(k,n)-closed via single elements agrees with the form quantified over submodules L",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof) {
                        const ZModRing& R = ctx.M->ring();
                        for (int k = 1; k <= B.kmax; ++k)
                            for (int n = 1; n <= B.kmax; ++n) {
                                bool sub = true;
                                for (long long d = 1; d <= R.modulus && sub; ++d) {
                                    if (R.modulus % d) continue;
                                    RingIdeal I = divisor_ideal(R, d);
                                    long long ik = ideal_power(I, k).gen;
                                    long long in = ideal_power(I, n).gen;
                                    long long in1 = ideal_power(I, n - 1).gen;
                                    if (in % p.res == 0) continue;
                                    for (const Submodule& L : ctx.lattice) {
                                        bool hyp = true, con = true;
                                        for (Index g : L.generators()) {
                                            if (!p.N.contains(ctx.M->scalar(ik, g))) hyp = false;
                                            if (!p.N.contains(ctx.M->scalar(in1, g))) con = false;
                                        }
                                        if (hyp && !con) {
                                            sub = false;
                                            break;
                                        }
                                    }
                                }
                                s.check(sub == ctx.gs(p, k, n),
                                        [&] { return ctx.sub_name(p.N) + "; " + cell_str(k, n); },
                                        [&] {
                                            return std::string("element form ") +
                                                   (ctx.gs(p, k, n) ? "holds" : "fails") +
                                                   ", submodule form " + (sub ? "holds" : "fails");
                                        });
                            }
                    }
            });

        add("T-pid", Tier::verified,
            "over the principal ideal ring Z/mZ, strongly (k,n)-closed and (k,n)-closed coincide",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof)
                        for (int k = 1; k <= B.kmax; ++k)
                            for (int n = 1; n <= B.kmax; ++n)
                                s.check(ctx.g(p, k, n) == ctx.gs(p, k, n),
                                        [&] { return ctx.sub_name(p.N) + "; " + cell_str(k, n); },
                                        [&] {
                                            return std::string("plain ") +
                                                   (ctx.g(p, k, n) ? "holds" : "fails") + ", strong " +
                                                   (ctx.gs(p, k, n) ? "holds" : "fails");
                                        });
            });

        add("T-resmod", Tier::verified,
            "(N:_M I) inherits (k,n)-closedness from N for every ideal I",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof) {
                        const ZModRing& R = ctx.M->ring();
                        for (long long d = 1; d <= R.modulus; ++d) {
                            if (R.modulus % d) continue;
                            Submodule RM = residual_module(p.N, divisor_ideal(R, d));
                            const SubProfile* pR = ctx.profile(RM);
                            for (int k = 1; k <= B.kmax; ++k)
                                for (int n = 1; n <= B.kmax; ++n) {
                                    if (!ctx.g(p, k, n) || pR == nullptr) {
                                        s.vacuous();
                                        continue;
                                    }
                                    s.check(ctx.g(*pR, k, n),
                                            [&] {
                                                return ctx.sub_name(p.N) + "; I=(" + std::to_string(d) +
                                                       "); " + cell_str(k, n);
                                            },
                                            [&] { return kn_witness(RM, k, n); });
                                }
                        }
                    }
            });

        add("T-resmod2", Tier::verified,
            "for strongly (k,n)-closed N with k >= n-1: I^n lies in (N:M) or (N:_M I^k) = (N:_M I^{n-1})",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof) {
                        const ZModRing& R = ctx.M->ring();
                        for (long long d = 1; d <= R.modulus; ++d) {
                            if (R.modulus % d) continue;
                            RingIdeal I = divisor_ideal(R, d);
                            for (int k = 1; k <= B.kmax; ++k)
                                for (int n = 1; n <= B.kmax; ++n) {
                                    if (k < n - 1) continue;
                                    if (!ctx.gs(p, k, n)) {
                                        s.vacuous();
                                        continue;
                                    }
                                    bool saved = ideal_power(I, n).gen % p.res == 0;
                                    bool eq = saved || residual_module(p.N, ideal_power(I, k))
                                                           .equals(residual_module(p.N, ideal_power(I, n - 1)));
                                    s.check(eq,
                                            [&] {
                                                return ctx.sub_name(p.N) + "; I=(" + std::to_string(d) +
                                                       "); " + cell_str(k, n);
                                            },
                                            [&] { return "(N:_M I^k) differs from (N:_M I^{n-1})"; });
                                }
                        }
                    }
            });

        add("T-resmod2-lit", Tier::scrutiny,
            "claimed: strongly (k,n)-closed N gives (N:_M I^k) = (N:_M I^{n-1}) outright",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof) {
                        const ZModRing& R = ctx.M->ring();
                        for (long long d = 1; d <= R.modulus; ++d) {
                            if (R.modulus % d) continue;
                            RingIdeal I = divisor_ideal(R, d);
                            for (int k = 1; k <= B.kmax; ++k)
                                for (int n = 1; n <= B.kmax; ++n) {
                                    if (!ctx.gs(p, k, n)) {
                                        s.vacuous();
                                        continue;
                                    }
                                    Submodule a = residual_module(p.N, ideal_power(I, k));
                                    Submodule b = residual_module(p.N, ideal_power(I, n - 1));
                                    s.check(a.equals(b),
                                            [&] {
                                                return ctx.sub_name(p.N) + "; I=(" + std::to_string(d) +
                                                       "); " + cell_str(k, n);
                                            },
                                            [&] {
                                                return "(N:_M I^k)=<" + a.gens_label() + "> vs (N:_M I^{n-1})=<" +
                                                       b.gens_label() + ">";
                                            });
                                }
                        }
                    }
            });

        add("T-NL", Tier::verified,
            "the strongly-closed test may restrict its submodule quantifier to L containing N",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof) {
                        const ZModRing& R = ctx.M->ring();
                        for (int k = 1; k <= B.kmax; ++k)
                            for (int n = 1; n <= B.kmax; ++n) {
                                bool restricted = true;
                                for (long long d = 1; d <= R.modulus && restricted; ++d) {
                                    if (R.modulus % d) continue;
                                    RingIdeal I = divisor_ideal(R, d);
                                    long long ik = ideal_power(I, k).gen;
                                    long long in = ideal_power(I, n).gen;
                                    long long in1 = ideal_power(I, n - 1).gen;
                                    if (in % p.res == 0) continue;
                                    for (const Submodule& L : ctx.lattice) {
                                        if (!p.N.subset_of(L)) continue;
                                        bool hyp = true, con = true;
                                        for (Index g : L.generators()) {
                                            if (!p.N.contains(ctx.M->scalar(ik, g))) hyp = false;
                                            if (!p.N.contains(ctx.M->scalar(in1, g))) con = false;
                                        }
                                        if (hyp && !con) {
                                            restricted = false;
                                            break;
                                        }
                                    }
                                }
                                s.check(restricted == ctx.gs(p, k, n),
                                        [&] { return ctx.sub_name(p.N) + "; " + cell_str(k, n); },
                                        [&] {
                                            return std::string("restricted form ") +
                                                   (restricted ? "holds" : "fails") + ", strong form " +
                                                   (ctx.gs(p, k, n) ? "holds" : "fails");
                                        });
                            }
                    }
            });

        add("T-st1", Tier::verified,
            "for (k,2)-closed N of a multiplication module, L^k M inside N forces 2 L^2 M inside N",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                if (B.kmax < 2) return;
                for (const auto& ctx : ctxs) {
                    if (!ctx.multiplication) continue;
                    RingIdeal two(ctx.M->ring(), 2);
                    for (const auto& p : ctx.prof)
                        for (int k = 1; k <= B.kmax; ++k) {
                            if (!ctx.g(p, k, 2)) {
                                s.vacuous();
                                continue;
                            }
                            for (const auto& lp : ctx.prof) {
                                RingIdeal IL = divisor_ideal(ctx.M->ring(), lp.res);
                                if (!ideal_times_module(ideal_power(IL, k), ctx.M).subset_of(p.N)) {
                                    s.vacuous();
                                    continue;
                                }
                                Submodule target =
                                    ideal_times_module(ideal_product(two, ideal_power(IL, 2)), ctx.M);
                                s.check(target.subset_of(p.N),
                                        [&] {
                                            return ctx.sub_name(p.N) + "; L=<" + lp.N.gens_label() +
                                                   ">; k=" + std::to_string(k);
                                        },
                                        [&] { return "2 L^2 M=<" + target.gens_label() + "> escapes N"; });
                            }
                        }
                }
            });

        add("T-st2", Tier::verified, "when 2 is a unit, (k,2)-closed submodules are strongly (k,2)-closed",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                if (B.kmax < 2) return;
                for (const auto& ctx : ctxs) {
                    if (std::gcd(2ll, ctx.M->ring().modulus) != 1) continue;
                    for (const auto& p : ctx.prof)
                        for (int k = 1; k <= B.kmax; ++k) {
                            if (!ctx.g(p, k, 2)) {
                                s.vacuous();
                                continue;
                            }
                            s.check(ctx.gs(p, k, 2),
                                    [&] { return ctx.sub_name(p.N) + "; k=" + std::to_string(k); },
                                    [&] {
                                        auto v = is_strongly_kn_closed(p.N, k, 2);
                                        return witness_str(v);
                                    });
                        }
                }
            });

        add("T-s1", Tier::verified,
            "localization at S disjoint from (N:M) preserves (k,n)-closedness",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& S : ctx.mult_sets) {
                        Localization loc = localize(ctx.M, S);
                        for (const auto& p : ctx.prof) {
                            bool disjoint = true;
                            for (long long e : S.elements)
                                if (e % p.res == 0) disjoint = false;
                            if (!disjoint) {
                                s.vacuous();
                                continue;
                            }
                            Submodule NL = loc.image(p.N);
                            for (int k = 1; k <= B.kmax; ++k)
                                for (int n = 1; n <= B.kmax; ++n) {
                                    if (!ctx.g(p, k, n) || !NL.is_proper()) {
                                        s.vacuous();
                                        continue;
                                    }
                                    s.check(is_kn_closed(NL, k, n).holds,
                                            [&] {
                                                return ctx.sub_name(p.N) + "; S={" +
                                                       std::to_string(S.elements.size()) + " elts, min " +
                                                       std::to_string(S.elements.front()) + "}; " +
                                                       cell_str(k, n);
                                            },
                                            [&] { return kn_witness(NL, k, n); });
                                }
                        }
                    }
            });

        add("T-sloc", Tier::scrutiny,
            "corollary with 2 in S: strongly (k,2)-closed N localizes to a strongly (k,2)-closed S^-1 N",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                if (B.kmax < 2) return;
                for (const auto& ctx : ctxs)
                    for (const auto& S : ctx.mult_sets) {
                        if (!S.contains(2)) continue;
                        Localization loc = localize(ctx.M, S);
                        for (const auto& p : ctx.prof) {
                            bool disjoint = true;
                            for (long long e : S.elements)
                                if (e % p.res == 0) disjoint = false;
                            if (!disjoint) {
                                s.vacuous();
                                continue;
                            }
                            Submodule NL = loc.image(p.N);
                            for (int k = 1; k <= B.kmax; ++k) {
                                if (!ctx.gs(p, k, 2) || !NL.is_proper()) {
                                    s.vacuous();
                                    continue;
                                }
                                s.check(is_strongly_kn_closed(NL, k, 2).holds,
                                        [&] {
                                            return ctx.sub_name(p.N) + "; 2 in S; k=" + std::to_string(k);
                                        },
                                        [&] { return witness_str(is_strongly_kn_closed(NL, k, 2)); });
                            }
                        }
                    }
            });

        add("T-sloc-step", Tier::scrutiny,
            "the cited step of that corollary: with 2 in S, 2 would NOT be a unit of S^-1 R",
            [](const Ctxs& ctxs, const Bounds&, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& S : ctx.mult_sets) {
                        if (!S.contains(2)) continue;
                        Localization loc = localize(ctx.M, S);
                        long long m1 = loc.module->ring().modulus;
                        s.check(std::gcd(2ll, m1) != 1,
                                [&] { return ctx.entry.origin + ": S containing 2, S^-1 R = Z_" +
                                             std::to_string(m1); },
                                [&] {
                                    return "2 IS a unit of Z_" + std::to_string(m1) +
                                           " (inverting 2 makes it invertible)";
                                });
                    }
            });

        add("T-NP", Tier::verified,
            "localizing at the complement of (P:M), P a prime submodule containing N, preserves "
            "(k,n)-closedness",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& pp : ctx.prof) {
                        if (!pp.prime) continue;
                        std::vector<long long> elems;
                        for (long long r = 0; r < ctx.M->ring().modulus; ++r)
                            if (r % pp.res != 0) elems.push_back(r);
                        MultiplicativeSet S{ctx.M->ring(), elems};
                        Localization loc = localize(ctx.M, S);
                        for (const auto& p : ctx.prof) {
                            if (!p.N.subset_of(pp.N)) continue;
                            Submodule NL = loc.image(p.N);
                            for (int k = 1; k <= B.kmax; ++k)
                                for (int n = 1; n <= B.kmax; ++n) {
                                    if (!ctx.g(p, k, n) || !NL.is_proper()) {
                                        s.vacuous();
                                        continue;
                                    }
                                    s.check(is_kn_closed(NL, k, n).holds,
                                            [&] {
                                                return ctx.sub_name(p.N) + "; P=<" + pp.N.gens_label() +
                                                       ">; " + cell_str(k, n);
                                            },
                                            [&] { return kn_witness(NL, k, n); });
                                }
                        }
                    }
            });

        add("T-NP-conv", Tier::scrutiny,
            "claimed converse: N is (k,n)-closed whenever N_P is, for the primes P containing N",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (const auto& p : ctx.prof) {
                        std::vector<const SubProfile*> primes;
                        for (const auto& pp : ctx.prof)
                            if (pp.prime && p.N.subset_of(pp.N)) primes.push_back(&pp);
                        if (primes.empty()) {
                            s.vacuous();
                            continue;
                        }
                        for (int k = 1; k <= B.kmax; ++k)
                            for (int n = 1; n <= B.kmax; ++n) {
                                bool hyp = true;
                                for (const SubProfile* pp : primes) {
                                    std::vector<long long> elems;
                                    for (long long r = 0; r < ctx.M->ring().modulus; ++r)
                                        if (r % pp->res != 0) elems.push_back(r);
                                    Localization loc = localize(ctx.M, MultiplicativeSet{ctx.M->ring(), elems});
                                    Submodule NL = loc.image(p.N);
                                    if (!NL.is_proper() || !is_kn_closed(NL, k, n).holds) hyp = false;
                                }
                                if (!hyp) {
                                    s.vacuous();
                                    continue;
                                }
                                s.check(ctx.g(p, k, n),
                                        [&] { return ctx.sub_name(p.N) + "; " + cell_str(k, n); },
                                        [&] {
                                            return "every localization at a containing prime is closed, yet " +
                                                   kn_witness(p.N, k, n);
                                        });
                            }
                    }
            });

        add("T-hom1", Tier::verified,
            "preimages of (k,n)-closed submodules under module endomorphisms are (k,n)-closed",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs) {
                    std::set<std::vector<Index>> seen;
                    std::vector<std::pair<long long, std::vector<Index>>> endos;
                    for (long long c = 0; c < ctx.M->ring().modulus; ++c) {
                        std::vector<Index> map(ctx.M->size());
                        for (Index x = 0; x < ctx.M->size(); ++x) map[x] = ctx.M->scalar(c, x);
                        if (seen.insert(map).second) endos.emplace_back(c, std::move(map));
                    }
                    for (const auto& [c, map] : endos) {
                        ModuleHom f{ctx.M, ctx.M, map};
                        for (const auto& p : ctx.prof) {
                            Submodule pre = hom_preimage(f, p.N);
                            const SubProfile* pPre = pre.is_proper() ? ctx.profile(pre) : nullptr;
                            for (int k = 1; k <= B.kmax; ++k)
                                for (int n = 1; n <= B.kmax; ++n) {
                                    if (!ctx.g(p, k, n) || pPre == nullptr) {
                                        s.vacuous();
                                        continue;
                                    }
                                    s.check(ctx.g(*pPre, k, n),
                                            [&] {
                                                return ctx.sub_name(p.N) + "; f=mult-by-" + std::to_string(c) +
                                                       "; " + cell_str(k, n);
                                            },
                                            [&] { return kn_witness(pre, k, n); });
                                }
                        }
                    }
                }
            });

        add("T-hom2", Tier::verified,
            "images of (k,n)-closed submodules containing the kernel, under surjective endomorphisms, are "
            "(k,n)-closed",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (long long c = 0; c < ctx.M->ring().modulus; ++c) {
                        std::vector<Index> map(ctx.M->size());
                        std::vector<bool> image(ctx.M->size(), false);
                        for (Index x = 0; x < ctx.M->size(); ++x) {
                            map[x] = ctx.M->scalar(c, x);
                            image[map[x]] = true;
                        }
                        if (std::count(image.begin(), image.end(), true) !=
                            static_cast<long long>(ctx.M->size()))
                            continue;
                        ModuleHom f{ctx.M, ctx.M, map};
                        Submodule ker = hom_preimage(f, Submodule::zero(ctx.M));
                        for (const auto& p : ctx.prof) {
                            if (!ker.subset_of(p.N)) {
                                s.vacuous();
                                continue;
                            }
                            Submodule img = hom_image(f, p.N);
                            const SubProfile* pImg = img.is_proper() ? ctx.profile(img) : nullptr;
                            for (int k = 1; k <= B.kmax; ++k)
                                for (int n = 1; n <= B.kmax; ++n) {
                                    if (!ctx.g(p, k, n) || pImg == nullptr) {
                                        s.vacuous();
                                        continue;
                                    }
                                    s.check(ctx.g(*pImg, k, n),
                                            [&] {
                                                return ctx.sub_name(p.N) + "; f=mult-by-" + std::to_string(c) +
                                                       "; " + cell_str(k, n);
                                            },
                                            [&] { return kn_witness(img, k, n); });
                                }
                        }
                    }
            });

        add("T-cor-sub", Tier::verified,
            "restricting a (k,n)-closed submodule to a smaller ambient submodule keeps it (k,n)-closed",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (int li : ctx.proper) {
                        const Submodule& K = ctx.lattice[li];
                        if (K.size() < 2) continue;
                        SubmoduleModule SM = submodule_as_module(K);
                        for (const auto& p : ctx.prof) {
                            Submodule NK = SM.restrict(p.N);
                            for (int k = 1; k <= B.kmax; ++k)
                                for (int n = 1; n <= B.kmax; ++n) {
                                    if (!ctx.g(p, k, n) || !NK.is_proper()) {
                                        s.vacuous();
                                        continue;
                                    }
                                    s.check(is_kn_closed(NK, k, n).holds,
                                            [&] {
                                                return ctx.sub_name(p.N) + " restricted to <" +
                                                       K.gens_label() + ">; " + cell_str(k, n);
                                            },
                                            [&] { return kn_witness(NK, k, n); });
                                }
                        }
                    }
            });

        add("T-cor-quot", Tier::verified,
            "for K inside N: N/K is (k,n)-closed in M/K exactly when N is (k,n)-closed in M",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs)
                    for (int li : ctx.proper) {
                        const Submodule& K = ctx.lattice[li];
                        Quotient Q = quotient(ctx.M, K);
                        for (const auto& p : ctx.prof) {
                            if (!K.subset_of(p.N)) continue;
                            Submodule NQ = hom_image(Q.projection, p.N);
                            for (int k = 1; k <= B.kmax; ++k)
                                for (int n = 1; n <= B.kmax; ++n) {
                                    bool quot = is_kn_closed(NQ, k, n).holds;
                                    s.check(quot == ctx.g(p, k, n),
                                            [&] {
                                                return ctx.sub_name(p.N) + "; K=<" + K.gens_label() + ">; " +
                                                       cell_str(k, n);
                                            },
                                            [&] {
                                                return std::string("N/K ") + (quot ? "closed" : "not closed") +
                                                       ", N " + (ctx.g(p, k, n) ? "closed" : "not closed");
                                            });
                                }
                        }
                    }
            });

        add("T-ds1", Tier::verified,
            "N1 is (k1,n1)-closed in M1 exactly when N1 (+) M2 is (k,n)-closed for k <= k1, n >= n1",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs) {
                    if (ctx.M->orders().size() < 2) continue;
                    ModulePtr M1 = FiniteModule::coordinate(ctx.M->ring(), {ctx.M->orders()[0]});
                    ModulePtr M2 = FiniteModule::coordinate(
                        ctx.M->ring(),
                        std::vector<long long>(ctx.M->orders().begin() + 1, ctx.M->orders().end()));
                    DirectSum ds = direct_sum(M1, M2);
                    for (const Submodule& N1 : enumerate_submodules(M1, B.module_cap)) {
                        if (!N1.is_proper()) continue;
                        Submodule lift = ds.lift_left(N1);
                        auto it = ctx.by_mask.find(lift.mask());
                        const SubProfile& pL = ctx.prof[ctx.prof_of[it->second]];
                        for (int k1 = 1; k1 <= B.kmax; ++k1)
                            for (int n1 = 1; n1 <= B.kmax; ++n1) {
                                bool h1 = is_kn_closed(N1, k1, n1).holds;
                                if (h1)
                                    for (int k = 1; k <= k1; ++k)
                                        for (int n = n1; n <= B.kmax; ++n)
                                            s.check(ctx.g(pL, k, n),
                                                    [&] {
                                                        return ctx.entry.origin + ": N1=<" + N1.gens_label() +
                                                               "> (+) M2; " + cell_str(k, n);
                                                    },
                                                    [&] { return kn_witness(lift, k, n); });
                                else
                                    s.vacuous();
                                if (ctx.g(pL, k1, n1))
                                    s.check(h1,
                                            [&] {
                                                return ctx.entry.origin + ": converse for N1=<" +
                                                       N1.gens_label() + ">; " + cell_str(k1, n1);
                                            },
                                            [&] { return witness_str(is_kn_closed(N1, k1, n1)); });
                            }
                    }
                }
            });

        add("T-ds2", Tier::verified,
            "N2 is (k2,n2)-closed in M2 exactly when M1 (+) N2 is (k,n)-closed for k <= k2, n >= n2",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs) {
                    if (ctx.M->orders().size() < 2) continue;
                    ModulePtr M1 = FiniteModule::coordinate(ctx.M->ring(), {ctx.M->orders()[0]});
                    ModulePtr M2 = FiniteModule::coordinate(
                        ctx.M->ring(),
                        std::vector<long long>(ctx.M->orders().begin() + 1, ctx.M->orders().end()));
                    DirectSum ds = direct_sum(M1, M2);
                    for (const Submodule& N2 : enumerate_submodules(M2, B.module_cap)) {
                        if (!N2.is_proper()) continue;
                        Submodule lift = ds.lift_right(N2);
                        auto it = ctx.by_mask.find(lift.mask());
                        const SubProfile& pL = ctx.prof[ctx.prof_of[it->second]];
                        for (int k2 = 1; k2 <= B.kmax; ++k2)
                            for (int n2 = 1; n2 <= B.kmax; ++n2) {
                                bool h2 = is_kn_closed(N2, k2, n2).holds;
                                if (h2)
                                    for (int k = 1; k <= k2; ++k)
                                        for (int n = n2; n <= B.kmax; ++n)
                                            s.check(ctx.g(pL, k, n),
                                                    [&] {
                                                        return ctx.entry.origin + ": M1 (+) N2=<" +
                                                               N2.gens_label() + ">; " + cell_str(k, n);
                                                    },
                                                    [&] { return kn_witness(lift, k, n); });
                                else
                                    s.vacuous();
                                if (ctx.g(pL, k2, n2))
                                    s.check(h2,
                                            [&] {
                                                return ctx.entry.origin + ": converse for N2=<" +
                                                       N2.gens_label() + ">; " + cell_str(k2, n2);
                                            },
                                            [&] { return witness_str(is_kn_closed(N2, k2, n2)); });
                            }
                    }
                }
            });

        add("T-ds3", Tier::verified,
            "N1 (+) N2 is (k,n)-closed for k <= min(k1,k2) and n >= max(n1,n2)+1",
            [](const Ctxs& ctxs, const Bounds& B, Sink& s) {
                for (const auto& ctx : ctxs) {
                    if (ctx.M->orders().size() < 2) continue;
                    ModulePtr M1 = FiniteModule::coordinate(ctx.M->ring(), {ctx.M->orders()[0]});
                    ModulePtr M2 = FiniteModule::coordinate(
                        ctx.M->ring(),
                        std::vector<long long>(ctx.M->orders().begin() + 1, ctx.M->orders().end()));
                    DirectSum ds = direct_sum(M1, M2);
                    auto lat1 = enumerate_submodules(M1, B.module_cap);
                    auto lat2 = enumerate_submodules(M2, B.module_cap);
                    for (const Submodule& N1 : lat1) {
                        if (!N1.is_proper()) continue;
                        for (const Submodule& N2 : lat2) {
                            if (!N2.is_proper()) continue;
                            Submodule lift = ds.lift(N1, N2);
                            auto it = ctx.by_mask.find(lift.mask());
                            const SubProfile& pL = ctx.prof[ctx.prof_of[it->second]];
                            for (int k1 = 1; k1 <= B.kmax; ++k1)
                                for (int n1 = 1; n1 <= B.kmax; ++n1) {
                                    if (!is_kn_closed(N1, k1, n1).holds) {
                                        s.vacuous();
                                        continue;
                                    }
                                    for (int k2 = 1; k2 <= B.kmax; ++k2)
                                        for (int n2 = 1; n2 <= B.kmax; ++n2) {
                                            if (!is_kn_closed(N2, k2, n2).holds) continue;
                                            for (int k = 1; k <= std::min(k1, k2); ++k)
                                                for (int n = std::max(n1, n2) + 1; n <= B.kmax; ++n)
                                                    s.check(ctx.g(pL, k, n),
                                                            [&] {
                                                                return ctx.entry.origin + ": <" +
                                                                       N1.gens_label() + "> (+) <" +
                                                                       N2.gens_label() + ">; " +
                                                                       cell_str(k, n);
                                                            },
                                                            [&] { return kn_witness(lift, k, n); });
                                        }
                                }
                        }
                    }
                }
            });

        add("T-tkn", Tier::verified,
            "a (k,n)-closed p^t Z forces the decomposition and membership conditions on t (n <= k)",
            [](const Ctxs&, const Bounds& B, Sink& s) {
                for (long long p : {2ll, 3ll})
                    for (long long t = 1; t <= 12; ++t) {
                        long long c = 1;
                        for (long long i = 0; i < t; ++i) c *= p;
                        for (int k = 1; k <= B.kmax; ++k)
                            for (int n = 1; n <= k; ++n) {
                                if (!zint_is_kn_closed(c, k, n).holds) {
                                    s.vacuous();
                                    continue;
                                }
                                s.check(tkn_condition(t, k, n) && tkn_membership(t, k, n),
                                        [&] {
                                            return "p=" + std::to_string(p) + " t=" + std::to_string(t) +
                                                   "; " + cell_str(k, n);
                                        },
                                        [&] {
                                            return std::string("decomposition ") +
                                                   (tkn_condition(t, k, n) ? "holds" : "fails") +
                                                   ", membership " +
                                                   (tkn_membership(t, k, n) ? "holds" : "fails");
                                        });
                            }
                    }
            });

        add("T-cor-semi-n", Tier::verified,
            "a semi n-absorbing p^t Z forces t = na + r with a >= 0 and 1 <= r <= n (so t <= n)",
            [](const Ctxs&, const Bounds& B, Sink& s) {
                for (long long p : {2ll, 3ll})
                    for (long long t = 1; t <= 12; ++t) {
                        long long c = 1;
                        for (long long i = 0; i < t; ++i) c *= p;
                        for (int n = 1; n <= B.kmax; ++n) {
                            if (!zint_is_semi_n_absorbing(c, n).holds) {
                                s.vacuous();
                                continue;
                            }
                            s.check(tkn_condition(t, n, n),
                                    [&] {
                                        return "p=" + std::to_string(p) + " t=" + std::to_string(t) +
                                               "; n=" + std::to_string(n);
                                    },
                                    [&] { return "t admits no valid decomposition"; });
                        }
                    }
            });

        add("T-cor-semi-n-lit", Tier::scrutiny,
            "claimed strict form: semi n-absorbing p^t Z forces t = na + r with 1 <= r < n",
            [](const Ctxs&, const Bounds& B, Sink& s) {
                for (long long t = 1; t <= 12; ++t) {
                    long long c = 1;
                    for (long long i = 0; i < t; ++i) c *= 2;
                    for (int n = 1; n <= B.kmax; ++n) {
                        if (!zint_is_semi_n_absorbing(c, n).holds) {
                            s.vacuous();
                            continue;
                        }
                        bool strict = false;
                        for (long long a = 0; a * n < t; ++a) {
                            long long r = t - a * n;
                            if (r >= 1 && r < n) strict = true;
                        }
                        s.check(strict, [&] { return "t=" + std::to_string(t) + "; n=" + std::to_string(n); },
                                [&] {
                                    return "t=" + std::to_string(t) +
                                           " admits no decomposition with r < n (t = n case)";
                                });
                    }
                }
            });

        add("T-cor-semi-2", Tier::verified, "semi 2-absorbing prime powers p^t Z have t in {1,2}; t = 3 fails",
            [](const Ctxs&, const Bounds&, Sink& s) {
                for (long long t = 1; t <= 12; ++t) {
                    long long c = 1;
                    for (long long i = 0; i < t; ++i) c *= 2;
                    if (!zint_is_semi_n_absorbing(c, 2).holds) {
                        s.vacuous();
                        continue;
                    }
                    s.check(t == 1 || t == 2, [] { return std::string("semi 2-absorbing power"); },
                            [&] { return "t=" + std::to_string(t) + " outside {1,2}"; });
                }
                auto v8 = zint_is_semi_n_absorbing(8, 2);
                s.check(!v8.holds, [] { return std::string("t=3 refutation: 8Z"); },
                        [] { return std::string("8Z unexpectedly semi 2-absorbing"); });
            });

        add("T-pid-fact", Tier::verified,
            "a (k,n)-closed cZ satisfies the per-exponent factorization conditions (n <= k)",
            [](const Ctxs&, const Bounds& B, Sink& s) {
                for (long long c = 2; c <= 1000; ++c)
                    for (int k = 1; k <= B.kmax; ++k)
                        for (int n = 1; n <= k; ++n) {
                            if (!zint_is_kn_closed(c, k, n).holds) {
                                s.vacuous();
                                continue;
                            }
                            s.check(factorization_condition(c, k, n),
                                    [&] { return "c=" + std::to_string(c) + "; " + cell_str(k, n); },
                                    [&] { return "exponent conditions fail"; });
                        }
            });

        add("T-Pt", Tier::verified,
            "a (k,n)-closed prime power P^t satisfies one of the three case conditions (n <= k)",
            [](const Ctxs&, const Bounds& B, Sink& s) {
                for (long long p : {2ll, 3ll})
                    for (long long t = 1; t <= 12; ++t) {
                        long long c = 1;
                        for (long long i = 0; i < t; ++i) c *= p;
                        for (int k = 1; k <= B.kmax; ++k)
                            for (int n = 1; n <= k; ++n) {
                                if (!zint_is_kn_closed(c, k, n).holds) {
                                    s.vacuous();
                                    continue;
                                }
                                s.check(pt_condition(t, k, n),
                                        [&] {
                                            return "p=" + std::to_string(p) + " t=" + std::to_string(t) +
                                                   "; " + cell_str(k, n);
                                        },
                                        [&] { return "no case condition matches"; });
                            }
                    }
            });

        add("E-e1", Tier::scrutiny, "worked example: 8Z as a (2,1)-closed ideal and a (2,2)-closed submodule",
            [](const Ctxs&, const Bounds&, Sink& s) {
                auto vi = zint_ideal_is_kn_closed(8, 2, 1);
                s.check(vi.holds, [] { return std::string("claimed: 8Z is a (2,1)-closed ideal of Z"); },
                        [&] {
                            return "refuted: x=" + std::to_string(vi.x) + " has x^2 in 8Z but x not in 8Z";
                        });
                auto vs = zint_is_kn_closed(8, 2, 2);
                s.check(!vs.holds, [] { return std::string("claimed: 8Z is not a (2,2)-closed submodule"); },
                        [] { return std::string("computed closed, contradicting the example"); });
            });

        add("E-e", Tier::scrutiny, "worked example: the roles of 4Z and 12Z for semi 2-absorption",
            [](const Ctxs&, const Bounds&, Sink& s) {
                auto v12 = zint_is_semi_n_absorbing(12, 2);
                s.check(v12.holds, [] { return std::string("claimed: 12Z is semi 2-absorbing"); },
                        [&] {
                            return "refuted: r=" + std::to_string(v12.r) + ", m=" + std::to_string(v12.m);
                        });
                auto v4 = zint_is_semi_n_absorbing(4, 2);
                s.check(!v4.holds, [] { return std::string("claimed: 4Z is not semi 2-absorbing"); },
                        [] { return std::string("computed: 4Z IS semi 2-absorbing"); });
            });

        add("E-30", Tier::verified, "worked example: 30Z is semi 2-absorbing and (3,2)-closed but not 2-absorbing",
            [](const Ctxs&, const Bounds& B, Sink& s) {
                s.check(zint_is_semi_n_absorbing(30, 2).holds, [] { return std::string("30Z semi 2-absorbing"); },
                        [] { return std::string("semi 2-absorption fails"); });
                s.check(zint_is_kn_closed(30, 3, 2).holds, [] { return std::string("30Z (3,2)-closed"); },
                        [] { return std::string("(3,2)-closedness fails"); });
                ModulePtr M = reduce_integer_scalars({30}, "Z_30");
                Submodule N = Submodule::zero(M);
                Verdict ab = is_n_absorbing(N, 2, B.nabs_max);
                bool witness_ok = !ab.holds && witness_str(ab) == "a1=2, a2=3, x=5";
                s.check(witness_ok, [] { return std::string("30Z not 2-absorbing, witness 2*3*5"); },
                        [&] { return ab.holds ? "unexpectedly 2-absorbing" : "witness " + witness_str(ab); });
                if (B.nabs_max >= 3)
                    s.check(is_n_absorbing(N, 3, B.nabs_max).holds, [] { return std::string("30Z 3-absorbing"); },
                            [] { return std::string("3-absorption fails"); });
            });

        add("E-pn", Tier::verified,
            "worked example: the zero submodule of Z_{p^n} is (n,n)-closed but neither (n,n-1)-closed, "
            "quasi-prime, semi (n-1)-absorbing, nor semiprime",
            [](const Ctxs&, const Bounds&, Sink& s) {
                for (auto [p, n] : std::vector<std::pair<long long, int>>{{2, 2}, {2, 3}, {3, 2}}) {
                    long long pn = 1;
                    for (int i = 0; i < n; ++i) pn *= p;
                    ModulePtr M = reduce_integer_scalars({pn}, "Z_" + std::to_string(pn));
                    Submodule N = Submodule::zero(M);
                    std::string tag = "p=" + std::to_string(p) + " n=" + std::to_string(n);
                    s.check(is_kn_closed(N, n, n).holds, [&] { return tag + ": (n,n)-closed"; },
                            [&] { return witness_str(is_kn_closed(N, n, n)); });
                    s.check(!is_kn_closed(N, n, n - 1).holds, [&] { return tag + ": not (n,n-1)-closed"; },
                            [] { return std::string("unexpectedly closed"); });
                    s.check(!is_quasi_prime(N).holds, [&] { return tag + ": not quasi-prime"; },
                            [] { return std::string("unexpectedly quasi-prime"); });
                    s.check(!is_semi_n_absorbing(N, n - 1).holds,
                            [&] { return tag + ": not semi (n-1)-absorbing"; },
                            [] { return std::string("unexpectedly semi (n-1)-absorbing"); });
                    s.check(!is_semiprime(N).holds, [&] { return tag + ": not semiprime"; },
                            [] { return std::string("unexpectedly semiprime"); });
                }
            });

        add("E-int", Tier::verified,
            "worked example: p^n Z and q^n Z are semi n-absorbing but their intersection p^n q^n Z is not, "
            "witnessed by r=p, m=q^n",
            [](const Ctxs&, const Bounds&, Sink& s) {
                for (auto [p, q, n] : std::vector<std::tuple<long long, long long, int>>{{2, 3, 2}, {2, 3, 3}}) {
                    long long pn = 1, qn = 1;
                    for (int i = 0; i < n; ++i) pn *= p, qn *= q;
                    std::string tag = "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                      " n=" + std::to_string(n);
                    s.check(zint_is_semi_n_absorbing(pn, n).holds, [&] { return tag + ": p^n Z semi-n"; },
                            [] { return std::string("component fails"); });
                    s.check(zint_is_semi_n_absorbing(qn, n).holds, [&] { return tag + ": q^n Z semi-n"; },
                            [] { return std::string("component fails"); });
                    auto v = zint_is_semi_n_absorbing(pn * qn, n);
                    s.check(!v.holds && v.r == p && v.m == qn, [&] { return tag + ": intersection not semi-n"; },
                            [&] {
                                return v.holds ? std::string("unexpectedly semi-n")
                                               : "witness r=" + std::to_string(v.r) +
                                                     ", m=" + std::to_string(v.m) + " (expected r=p, m=q^n)";
                            });
                }
            });

        return v;
    }();
    return defs;
}

}  // namespace knsub::harness::detail

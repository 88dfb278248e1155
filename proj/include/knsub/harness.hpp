#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "knsub/constructions.hpp"
#include "knsub/predicates.hpp"
#include "knsub/zint.hpp"

namespace knsub::harness {

struct Bounds {
    int kmax = 4;
    int nabs_max = 3;
    std::size_t module_cap = 4096;
};

struct CatalogEntry {
    ModulePtr module;
    std::string origin;
};
using Catalog = std::vector<CatalogEntry>;

inline Catalog default_catalog() {
    Catalog cat;
    auto add = [&](long long m, std::vector<long long> factors, std::string origin) {
        cat.push_back({FiniteModule::coordinate(ZModRing(m), factors, origin), origin});
    };
    for (long long m : {4, 6, 8, 9, 12, 16, 18, 24, 27, 30, 36, 48, 60})
        add(m, {m}, "Z_" + std::to_string(m));
    add(2, {2, 2}, "Z_2xZ_2");
    add(3, {3, 3}, "Z_3xZ_3");
    add(4, {4, 2}, "Z_4xZ_2 over Z_4");
    add(8, {8, 2}, "Z_8xZ_2 over Z_8");
    add(9, {9, 3}, "Z_9xZ_3 over Z_9");
    add(36, {4, 9}, "Z_4(+)Z_9 over Z_36");
    return cat;
}

inline std::string catalog_fingerprint(const Catalog& cat) {
    std::string canon;
    for (const auto& e : cat) {
        canon += "zmod:" + std::to_string(e.module->ring().modulus) + "|factors:";
        for (std::size_t i = 0; i < e.module->orders().size(); ++i) {
            if (i) canon += ',';
            canon += std::to_string(e.module->orders()[i]);
        }
        canon += "|origin:" + e.origin + ";";
    }
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

enum class Tier { verified, scrutiny };
enum class Outcome { holds, fails, vacuous };

struct Finding {
    std::string instance;
    std::string witness;
};

struct PropertyResult {
    std::string name;
    Tier tier = Tier::verified;
    std::string note;
    long long holds = 0, fails = 0, vacuous = 0;
    std::vector<Finding> findings;  // capped; fails counts everything
    long long findings_total = 0;
    bool whitelisted = false;
    std::string annotation;
};

struct SuiteReport {
    std::vector<PropertyResult> properties;
    bool verified_clean = true;
    bool vacuity_ok = true;
    std::vector<std::string> vacuity_violations;
    long long wall_ms = 0;
    std::string catalog_fingerprint;
    Bounds bounds;
};

namespace detail {

constexpr std::size_t kFindingCap = 25;

struct Sink {
    PropertyResult* pr;
    void holds() { ++pr->holds; }
    void vacuous() { ++pr->vacuous; }
    void fails(std::string instance, std::string witness) {
        ++pr->fails;
        ++pr->findings_total;
        if (pr->findings.size() < kFindingCap) pr->findings.push_back({std::move(instance), std::move(witness)});
    }
    void check(bool ok, const std::function<std::string()>& inst, const std::function<std::string()>& wit) {
        if (ok)
            holds();
        else
            fails(inst(), wit());
    }
};

struct SubProfile {
    explicit SubProfile(Submodule n) : N(std::move(n)) {}

    Submodule N;
    long long res = 0;                  // (N:M) divisor
    std::vector<long long> res_elem;    // (N:x) divisor per element
    std::vector<char> kn, strong;       // kmax x kmax grids
    std::vector<char> nabs;             // 1..nabs_max (index 0 unused)
    bool semiprime = false, quasi = false, prime = false, maximal = false;
};

struct ModuleCtx {
    CatalogEntry entry;
    ModulePtr M;
    std::vector<Submodule> lattice;
    std::vector<int> proper;             // lattice indices of proper submodules
    std::vector<SubProfile> prof;        // parallel to `proper`
    std::map<std::vector<bool>, int> by_mask;  // lattice index by element mask
    std::vector<int> prof_of;            // lattice index -> profile index or -1
    std::vector<char> secondary;         // per lattice index (nonzero only)
    bool multiplication = false;
    bool cyclic = false;
    Index cyclic_gen = 0;
    bool prime_field = false;
    std::vector<MultiplicativeSet> mult_sets;
    int kmax = 4;

    bool g(const SubProfile& p, int k, int n) const {
        return p.kn[static_cast<std::size_t>(k - 1) * kmax + (n - 1)] != 0;
    }
    bool gs(const SubProfile& p, int k, int n) const {
        return p.strong[static_cast<std::size_t>(k - 1) * kmax + (n - 1)] != 0;
    }
    const SubProfile* profile(const Submodule& S) const {
        auto it = by_mask.find(S.mask());
        if (it == by_mask.end()) return nullptr;
        int pi = prof_of[it->second];
        return pi < 0 ? nullptr : &prof[pi];
    }
    std::string sub_name(const Submodule& S) const {
        std::string g = S.gens_label();
        return entry.origin + ": N=<" + (g.empty() ? "0" : g) + ">";
    }
};

inline ModuleCtx build_ctx(const CatalogEntry& e, const Bounds& B) {
    ModuleCtx ctx;
    ctx.entry = e;
    ctx.M = e.module;
    ctx.kmax = B.kmax;
    ctx.lattice = enumerate_submodules(ctx.M, B.module_cap);
    ctx.prof_of.assign(ctx.lattice.size(), -1);
    for (std::size_t i = 0; i < ctx.lattice.size(); ++i) ctx.by_mask[ctx.lattice[i].mask()] = static_cast<int>(i);
    ctx.secondary.assign(ctx.lattice.size(), 0);
    for (std::size_t i = 0; i < ctx.lattice.size(); ++i)
        if (!ctx.lattice[i].is_zero()) ctx.secondary[i] = is_secondary(ctx.lattice[i]).holds ? 1 : 0;
    ctx.multiplication = true;
    for (const Submodule& N : ctx.lattice)
        if (!ideal_times_module(residual_ring(N), ctx.M).equals(N)) {
            ctx.multiplication = false;
            break;
        }
    for (Index x = 0; x < ctx.M->size() && !ctx.cyclic; ++x)
        if (Submodule::span(ctx.M, {x}).size() == ctx.M->size()) {
            ctx.cyclic = true;
            ctx.cyclic_gen = x;
        }
    ctx.prime_field = factorize(ctx.M->ring().modulus).factors.size() == 1 &&
                      factorize(ctx.M->ring().modulus).factors[0].second == 1;
    std::set<std::vector<long long>> seen_sets;
    for (long long s = 0; s < ctx.M->ring().modulus; ++s) {
        MultiplicativeSet S = mult_closure(ctx.M->ring(), {s});
        if (S.has_zero()) continue;
        if (seen_sets.insert(S.elements).second) ctx.mult_sets.push_back(std::move(S));
    }
    int K = B.kmax;
    for (std::size_t i = 0; i < ctx.lattice.size(); ++i) {
        const Submodule& N = ctx.lattice[i];
        if (!N.is_proper()) continue;
        SubProfile p(N);
        p.res = residual_ring(N).gen;
        p.res_elem.resize(ctx.M->size());
        for (Index x = 0; x < ctx.M->size(); ++x) p.res_elem[x] = residual_element(N, x).gen;
        p.kn.assign(static_cast<std::size_t>(K) * K, 0);
        p.strong.assign(static_cast<std::size_t>(K) * K, 0);
        for (int k = 1; k <= K; ++k)
            for (int n = 1; n <= K; ++n) {
                p.kn[static_cast<std::size_t>(k - 1) * K + (n - 1)] = is_kn_closed(N, k, n).holds ? 1 : 0;
                p.strong[static_cast<std::size_t>(k - 1) * K + (n - 1)] =
                    is_strongly_kn_closed(N, k, n).holds ? 1 : 0;
            }
        p.nabs.assign(B.nabs_max + 1, 0);
        for (int n = 1; n <= B.nabs_max; ++n) p.nabs[n] = is_n_absorbing(N, n, B.nabs_max).holds ? 1 : 0;
        p.semiprime = is_semiprime(N).holds;
        p.quasi = is_quasi_prime(N).holds;
        p.prime = is_prime_submodule(N).holds;
        p.maximal = is_maximal_submodule(N, ctx.lattice);
        ctx.prof_of[i] = static_cast<int>(ctx.prof.size());
        ctx.proper.push_back(static_cast<int>(i));
        ctx.prof.push_back(std::move(p));
    }
    return ctx;
}

inline std::string cell_str(int k, int n) { return "k=" + std::to_string(k) + " n=" + std::to_string(n); }

inline std::string kn_witness(const Submodule& N, int k, int n) {
    Verdict v = is_kn_closed(N, k, n);
    return v.holds ? std::string("holds") : witness_str(v);
}

struct PropertyDef {
    std::string name;
    Tier tier;
    std::string note;
    bool whitelisted = false;
    std::string vacuity_note;
    std::function<void(const std::vector<ModuleCtx>&, const Bounds&, Sink&)> run;
};

inline const std::vector<PropertyDef>& all_properties();

}  // namespace detail

inline std::vector<std::string> property_names(std::optional<Tier> tier = {}) {
    std::vector<std::string> out;
    for (const auto& p : detail::all_properties())
        if (!tier || p.tier == *tier) out.push_back(p.name);
    return out;
}

inline SuiteReport run_suite(const Catalog& cat, const Bounds& B, std::optional<Tier> tier = {}, int jobs = 1) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<detail::ModuleCtx> ctxs;
    ctxs.reserve(cat.size());
    for (const auto& e : cat) ctxs.push_back(detail::build_ctx(e, B));

    const auto& defs = detail::all_properties();
    std::vector<int> selected;
    for (std::size_t i = 0; i < defs.size(); ++i)
        if (!tier || defs[i].tier == *tier) selected.push_back(static_cast<int>(i));

    std::vector<PropertyResult> results(selected.size());
    auto eval = [&](std::size_t si) {
        const auto& def = defs[selected[si]];
        PropertyResult pr;
        pr.name = def.name;
        pr.tier = def.tier;
        pr.note = def.note;
        pr.whitelisted = def.whitelisted;
        pr.annotation = def.vacuity_note;
        detail::Sink sink{&pr};
        def.run(ctxs, B, sink);
        results[si] = std::move(pr);
    };
    if (jobs <= 1) {
        for (std::size_t i = 0; i < selected.size(); ++i) eval(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < selected.size(); i = next.fetch_add(1)) eval(i);
        };
        std::vector<std::future<void>> pool;
        for (int j = 0; j < jobs; ++j) pool.push_back(std::async(std::launch::async, worker));
        for (auto& f : pool) f.get();
    }

    SuiteReport rep;
    rep.bounds = B;
    rep.catalog_fingerprint = catalog_fingerprint(cat);
    rep.properties = std::move(results);
    for (const auto& pr : rep.properties) {
        if (pr.tier == Tier::verified && pr.fails > 0) rep.verified_clean = false;
        if (!pr.whitelisted && pr.holds + pr.fails == 0) {
            rep.vacuity_ok = false;
            rep.vacuity_violations.push_back(pr.name);
        }
    }
    rep.wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline PropertyResult run_property(const std::string& name, const Catalog& cat, const Bounds& B) {
    for (const auto& def : detail::all_properties()) {
        if (def.name != name) continue;
        std::vector<detail::ModuleCtx> ctxs;
        for (const auto& e : cat) ctxs.push_back(detail::build_ctx(e, B));
        PropertyResult pr;
        pr.name = def.name;
        pr.tier = def.tier;
        pr.note = def.note;
        pr.whitelisted = def.whitelisted;
        pr.annotation = def.vacuity_note;
        detail::Sink sink{&pr};
        def.run(ctxs, B, sink);
        return pr;
    }
    throw std::invalid_argument("run_property: unknown property '" + name + "'");
}

struct HuntHit {
    std::string instance;
    std::string witness;
};

inline std::string cell_witness(long long c, int k, int n, int k1, int n1) {
    return "c=" + std::to_string(c) + " closed at k=" + std::to_string(k) + ",n=" + std::to_string(n) +
           " but not at k=" + std::to_string(k1) + ",n=" + std::to_string(n1);
}

inline std::vector<std::string> hunt_names() {
    return {"converse-of-T-t0", "intersection-of-semi-n-not-semi-n", "semiprime-not-21-closed",
            "monotonicity-violation"};
}

// First instance, in deterministic order, where the named claim fails within
// the bound; nullopt when the search space is exhausted.
inline std::optional<HuntHit> hunt(const std::string& name, long long bound) {
    if (name == "converse-of-T-t0") {
        for (long long c = 2; c <= bound; ++c) {
            if (!zint_ideal_is_kn_closed(c, 2, 1).holds) continue;
            auto v = zint_is_kn_closed(c, 2, 1);
            if (!v.holds)
                return HuntHit{"c=" + std::to_string(c) + ", k=2, n=1",
                               "r=" + std::to_string(v.r) + ", m=" + std::to_string(v.m)};
        }
        return std::nullopt;
    }
    if (name == "intersection-of-semi-n-not-semi-n") {
        std::vector<std::tuple<long long, int, long long, long long>> cands;  // (c, n, p, q)
        std::vector<long long> primes;
        for (long long p = 2; p <= bound; ++p) {
            bool isp = p >= 2;
            for (long long d = 2; d * d <= p; ++d)
                if (p % d == 0) isp = false;
            if (isp) primes.push_back(p);
        }
        for (int n = 2; n <= 4; ++n)
            for (long long p : primes)
                for (long long q : primes) {
                    if (q <= p) continue;
                    long long c = 1;
                    bool ok = true;
                    for (int i = 0; i < n && ok; ++i) {
                        c *= p * q;
                        if (c > bound) ok = false;
                    }
                    if (ok) cands.emplace_back(c, n, p, q);
                }
        std::sort(cands.begin(), cands.end());
        for (auto& [c, n, p, q] : cands) {
            long long pn = 1, qn = 1;
            for (int i = 0; i < n; ++i) pn *= p, qn *= q;
            if (!zint_is_semi_n_absorbing(pn, n).holds || !zint_is_semi_n_absorbing(qn, n).holds) continue;
            auto v = zint_is_semi_n_absorbing(c, n);
            if (!v.holds)
                return HuntHit{"c=" + std::to_string(c) + ", n=" + std::to_string(n) + " (" + std::to_string(pn) +
                                   "Z intersect " + std::to_string(qn) + "Z)",
                               "r=" + std::to_string(v.r) + ", m=" + std::to_string(v.m)};
        }
        return std::nullopt;
    }
    if (name == "semiprime-not-21-closed") {
        for (long long c = 2; c <= bound; ++c) {
            auto f = factorize(c);
            bool squarefree = true;
            for (auto& [p, e] : f.factors)
                if (e > 1) squarefree = false;
            if (!squarefree || f.factors.size() < 2) continue;
            auto v = zint_is_kn_closed(c, 2, 1);
            if (!v.holds)
                return HuntHit{"c=" + std::to_string(c) + ", k=2, n=1",
                               "r=" + std::to_string(v.r) + ", m=" + std::to_string(v.m)};
        }
        return std::nullopt;
    }
    if (name == "monotonicity-violation") {
        for (long long c = 2; c <= bound; ++c)
            for (int k = 1; k <= 4; ++k)
                for (int n = 1; n <= 4; ++n) {
                    if (!zint_is_kn_closed(c, k, n).holds) continue;
                    for (int k1 = 1; k1 <= k; ++k1)
                        for (int n1 = n; n1 <= 4; ++n1)
                            if (!zint_is_kn_closed(c, k1, n1).holds)
                                return HuntHit{"c=" + std::to_string(c), cell_witness(c, k, n, k1, n1)};
                }
        return std::nullopt;
    }
    throw std::invalid_argument("hunt: unknown property '" + name + "'");
}

}  // namespace knsub::harness

#include "knsub/properties.hpp"

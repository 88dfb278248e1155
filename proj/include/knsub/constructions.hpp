#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "knsub/predicates.hpp"

namespace knsub {

// M/K as a table-backed module on lexicographically-least coset
// representatives, with the projection hom.
struct Quotient {
    ModulePtr module;
    ModuleHom projection;
};

inline Quotient quotient(const ModulePtr& M, const Submodule& K) {
    if (K.mod_ptr() != M) throw std::invalid_argument("quotient: K is not a submodule of M");
    std::vector<Index> coset_of(M->size(), static_cast<Index>(-1));
    std::vector<Index> reps;
    for (Index e = 0; e < M->size(); ++e) {
        if (coset_of[e] != static_cast<Index>(-1)) continue;
        Index id = static_cast<Index>(reps.size());
        reps.push_back(e);
        for (Index x : K.elements()) coset_of[M->add(e, x)] = id;
    }
    std::size_t q = reps.size();
    std::vector<std::string> labels(q);
    for (std::size_t i = 0; i < q; ++i) labels[i] = M->label(reps[i]);
    std::vector<Index> add(q * q), scal(static_cast<std::size_t>(M->ring().modulus) * q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) add[i * q + j] = coset_of[M->add(reps[i], reps[j])];
    for (long long r = 0; r < M->ring().modulus; ++r)
        for (std::size_t i = 0; i < q; ++i)
            scal[static_cast<std::size_t>(r) * q + i] = coset_of[M->scalar(r, reps[i])];
    std::string origin = (M->origin().empty() ? "M" : M->origin()) + "/(" + K.gens_label() + ")";
    ModulePtr Q = FiniteModule::table(M->ring(), std::move(labels), std::move(add), std::move(scal), origin);
    return {Q, ModuleHom{M, Q, std::move(coset_of)}};
}

// Coordinate concatenation of two coordinate modules over the same ring.
struct DirectSum {
    ModulePtr module;
    ModulePtr left, right;

    Index embed(Index a, Index b) const { return static_cast<Index>(a * right->size() + b); }

    Submodule lift(const Submodule& N1, const Submodule& N2) const {
        std::vector<bool> mask(module->size(), false);
        for (Index a : N1.elements())
            for (Index b : N2.elements()) mask[embed(a, b)] = true;
        return Submodule::from_mask(module, std::move(mask));
    }
    Submodule lift_left(const Submodule& N1) const { return lift(N1, Submodule::whole(right)); }
    Submodule lift_right(const Submodule& N2) const { return lift(Submodule::whole(left), N2); }
};

inline DirectSum direct_sum(const ModulePtr& M1, const ModulePtr& M2) {
    if (M1->ring() != M2->ring()) throw std::invalid_argument("direct_sum: ring mismatch");
    if (!M1->is_coordinate() || !M2->is_coordinate())
        throw std::invalid_argument("direct_sum: coordinate modules required");
    std::vector<long long> orders = M1->orders();
    orders.insert(orders.end(), M2->orders().begin(), M2->orders().end());
    std::string origin = (M1->origin().empty() ? "M1" : M1->origin()) + "(+)" +
                         (M2->origin().empty() ? "M2" : M2->origin());
    return {FiniteModule::coordinate(M1->ring(), std::move(orders), origin), M1, M2};
}

// I·M as a submodule; spanned by the generator of I against the generators of M.
inline Submodule ideal_times_module(const RingIdeal& I, const ModulePtr& M) {
    if (I.ring != M->ring()) throw std::invalid_argument("ideal_times_module: ring mismatch");
    std::vector<Index> gens;
    for (Index g : M->generators()) gens.push_back(M->scalar(I.gen, g));
    return Submodule::span(M, gens);
}

// Every submodule has the form (N:M)·M.
inline bool is_multiplication(const ModulePtr& M, std::size_t cap = 4096) {
    for (const Submodule& N : enumerate_submodules(M, cap))
        if (!ideal_times_module(residual_ring(N), M).equals(N)) return false;
    return true;
}

// NK = (N:M)(K:M)·M. Defined on multiplication modules, where the product is
// independent of the chosen presentation ideals.
inline Submodule product(const Submodule& N, const Submodule& K, bool multiplication_checked = false,
                         std::size_t cap = 4096) {
    if (!N.same_module(K)) throw std::invalid_argument("product: module mismatch");
    if (!multiplication_checked && !is_multiplication(N.mod_ptr(), cap))
        throw std::invalid_argument("product: not a multiplication module");
    return ideal_times_module(ideal_product(residual_ring(N), residual_ring(K)), N.mod_ptr());
}

inline bool are_comaximal(const Submodule& N, const Submodule& K) {
    return !sum(N, K).is_proper();
}

// Intersection of the prime submodules containing N; the whole module when
// none exist.
inline Submodule m_radical(const Submodule& N, const std::vector<Submodule>& lattice) {
    if (!N.is_proper()) throw std::invalid_argument("m_radical: N must be proper");
    std::optional<Submodule> acc;
    for (const Submodule& P : lattice) {
        if (!P.is_proper() || !N.subset_of(P)) continue;
        if (!is_prime_submodule(P).holds) continue;
        acc = acc ? intersect(*acc, P) : P;
    }
    return acc ? *acc : Submodule::whole(N.mod_ptr());
}

inline Submodule m_radical(const Submodule& N, std::size_t cap = 4096) {
    return m_radical(N, enumerate_submodules(N.mod_ptr(), cap));
}

// Intersection of the maximal submodules; the whole module when none exist.
inline Submodule rad_module(const ModulePtr& M, std::size_t cap = 4096) {
    auto lattice = enumerate_submodules(M, cap);
    std::optional<Submodule> acc;
    for (const Submodule& N : lattice) {
        if (!N.is_proper() || !is_maximal_submodule(N, lattice)) continue;
        acc = acc ? intersect(*acc, N) : N;
    }
    return acc ? *acc : Submodule::whole(M);
}

struct SecondaryVerdict {
    bool holds = true;
    std::optional<long long> witness;  // scalar whose homothety is neither surjective nor nilpotent
    explicit operator bool() const { return holds; }
};

// Every homothety on N is surjective or nilpotent. The image chain r·N,
// r^2·N, ... stabilizes within |N| steps; nilpotent iff the stable set is 0.
inline SecondaryVerdict is_secondary(const Submodule& N) {
    if (N.is_zero()) throw std::invalid_argument("is_secondary: N must be nonzero");
    const FiniteModule& M = N.mod();
    for (long long r = 0; r < M.ring().modulus; ++r) {
        std::vector<Index> cur = N.elements();
        while (true) {
            std::vector<Index> next;
            for (Index x : cur) next.push_back(M.scalar(r, x));
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            if (next == cur) break;
            cur = std::move(next);
        }
        bool surjective = cur.size() == N.size();
        bool nilpotent = cur.size() == 1 && cur[0] == M.zero();
        if (!surjective && !nilpotent) return {false, r};
    }
    return {};
}

// S^{-1}M for a multiplicative set S not containing 0. Inverting S collapses
// Z_m to Z_{m'} with every prime dividing an element of S stripped from m;
// module orders are stripped the same way and trivial factors dropped.
struct Localization {
    MultiplicativeSet set;
    ModulePtr module;
    std::vector<Index> to_local;  // canonical map on element indices

    Submodule image(const Submodule& N) const {
        std::vector<Index> gens;
        for (Index x : N.elements()) gens.push_back(to_local[x]);
        return Submodule::span(module, gens);
    }
};

inline Localization localize(const ModulePtr& M, const MultiplicativeSet& S) {
    if (S.ring != M->ring()) throw std::invalid_argument("localize: ring mismatch");
    if (S.has_zero()) throw std::invalid_argument("localize: 0 must not lie in S");
    if (!M->is_coordinate()) throw std::invalid_argument("localize: coordinate module required");
    long long m = M->ring().modulus;
    std::vector<long long> stripped;
    for (const auto& [p, e] : factorize(m).factors) {
        bool inv = false;
        for (long long s : S.elements)
            if (s % p == 0) {
                inv = true;
                break;
            }
        if (inv) stripped.push_back(p);
    }
    auto strip = [&](long long v) {
        for (long long p : stripped)
            while (v % p == 0) v /= p;
        return v;
    };
    long long m1 = strip(m);
    if (m1 < 2) throw std::logic_error("localize: all primes inverted yet 0 not in S");
    std::vector<long long> orders1;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < M->orders().size(); ++i) {
        long long d1 = strip(M->orders()[i]);
        if (d1 >= 2) {
            orders1.push_back(d1);
            kept.push_back(i);
        }
    }
    std::string origin = "S^-1(" + (M->origin().empty() ? "M" : M->origin()) + ")";
    ModulePtr L = FiniteModule::coordinate(ZModRing(m1), orders1, origin);
    std::vector<Index> to_local(M->size(), 0);
    for (Index a = 0; a < M->size(); ++a) {
        auto c = M->coords(a);
        std::string lbl;
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (j) lbl += ',';
            lbl += std::to_string(c[kept[j]] % orders1[j]);
        }
        to_local[a] = kept.empty() ? 0 : L->parse_element(lbl);
    }
    return {S, L, std::move(to_local)};
}

inline Submodule hom_image(const ModuleHom& f, const Submodule& N) {
    if (f.src != N.mod_ptr()) throw std::invalid_argument("hom_image: module mismatch");
    std::vector<Index> gens;
    for (Index x : N.elements()) gens.push_back(f.map[x]);
    return Submodule::span(f.dst, gens);
}

inline Submodule hom_preimage(const ModuleHom& f, const Submodule& Nprime) {
    if (f.dst != Nprime.mod_ptr()) throw std::invalid_argument("hom_preimage: module mismatch");
    std::vector<bool> mask(f.src->size(), false);
    for (Index x = 0; x < f.src->size(); ++x)
        if (Nprime.contains(f.map[x])) mask[x] = true;
    return Submodule::from_mask(f.src, std::move(mask));
}

// A submodule regarded as a module in its own right, with the inclusion
// realized by an index translation back into the parent.
struct SubmoduleModule {
    ModulePtr module;
    std::vector<Index> to_parent;

    Submodule restrict(const Submodule& N) const {
        std::vector<bool> mask(module->size(), false);
        for (Index i = 0; i < module->size(); ++i)
            if (N.contains(to_parent[i])) mask[i] = true;
        return Submodule::from_mask(module, std::move(mask));
    }
};

inline SubmoduleModule submodule_as_module(const Submodule& K) {
    const FiniteModule& M = K.mod();
    const std::vector<Index>& el = K.elements();
    std::vector<Index> pos(M.size(), 0);
    for (std::size_t i = 0; i < el.size(); ++i) pos[el[i]] = static_cast<Index>(i);
    std::size_t n = el.size();
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = M.label(el[i]);
    std::vector<Index> add(n * n), scal(static_cast<std::size_t>(M.ring().modulus) * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) add[i * n + j] = pos[M.add(el[i], el[j])];
    for (long long r = 0; r < M.ring().modulus; ++r)
        for (std::size_t i = 0; i < n; ++i) scal[static_cast<std::size_t>(r) * n + i] = pos[M.scalar(r, el[i])];
    std::string origin = "<" + K.gens_label() + "> of " + (M.origin().empty() ? "M" : M.origin());
    ModulePtr S = FiniteModule::table(M.ring(), std::move(labels), std::move(add), std::move(scal), origin);
    return {S, el};
}

}  // namespace knsub

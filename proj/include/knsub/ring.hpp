#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "knsub/factored.hpp"

namespace knsub {

// The coefficient ring Z/mZ; elements are canonical residues 0..m-1.
struct ZModRing {
    long long modulus;

    explicit ZModRing(long long m) : modulus(m) {
        if (m < 2) throw std::invalid_argument("ZModRing: modulus must be >= 2");
    }
    long long canon(long long x) const {
        long long r = x % modulus;
        return r < 0 ? r + modulus : r;
    }
    long long add(long long a, long long b) const { return canon(a + b); }
    long long mul(long long a, long long b) const { return canon(canon(a) * canon(b)); }
    // x^0 = 1 by convention, also for x = 0.
    long long pow(long long x, int e) const {
        long long r = canon(1), b = canon(x);
        for (int i = 0; i < e; ++i) r = mul(r, b);
        return r;
    }
    bool operator==(const ZModRing& o) const { return modulus == o.modulus; }
    bool operator!=(const ZModRing& o) const { return !(*this == o); }
};

inline std::vector<long long> units(const ZModRing& R) {
    std::vector<long long> u;
    for (long long x = 1; x < R.modulus; ++x)
        if (std::gcd(x, R.modulus) == 1) u.push_back(x);
    return u;
}

// Ideal dZ/mZ, canonically represented by a divisor d of m.
// d = m is the zero ideal, d = 1 the whole ring.
struct RingIdeal {
    ZModRing ring;
    long long gen;

    RingIdeal(ZModRing R, long long g) : ring(R), gen(canonical_gen(R, g)) {}

    static long long canonical_gen(const ZModRing& R, long long g) {
        g = R.canon(g);
        return g == 0 ? R.modulus : std::gcd(g, R.modulus);
    }
    bool contains(long long x) const { return ring.canon(x) % gen == 0; }
    bool is_proper() const { return gen != 1; }
    bool is_zero() const { return gen == ring.modulus; }
    // (a) <= (b) iff b | a
    bool subset_of(const RingIdeal& o) const { return gen % o.gen == 0; }
    bool operator==(const RingIdeal& o) const { return ring == o.ring && gen == o.gen; }
    bool operator!=(const RingIdeal& o) const { return !(*this == o); }
};

inline RingIdeal ideal_product(const RingIdeal& a, const RingIdeal& b) {
    if (a.ring != b.ring) throw std::invalid_argument("ideal_product: ring mismatch");
    return {a.ring, std::gcd(a.gen * b.gen, a.ring.modulus)};
}

// I^e with I^0 = (1), computed prime-by-prime to avoid overflow on large e.
inline RingIdeal ideal_power(const RingIdeal& a, int e) {
    if (e < 0) throw std::invalid_argument("ideal_power: negative exponent");
    long long g = 1;
    for (const auto& [p, vm] : factorize(a.ring.modulus).factors) {
        long long va = valuation(a.gen, p);
        long long v = std::min<long long>(va * e, vm);
        for (long long i = 0; i < v; ++i) g *= p;
    }
    return {a.ring, g == a.ring.modulus ? 0 : g};
}

inline RingIdeal ideal_sum(const RingIdeal& a, const RingIdeal& b) {
    if (a.ring != b.ring) throw std::invalid_argument("ideal_sum: ring mismatch");
    return {a.ring, std::gcd(a.gen, b.gen)};
}

inline RingIdeal ideal_intersect(const RingIdeal& a, const RingIdeal& b) {
    if (a.ring != b.ring) throw std::invalid_argument("ideal_intersect: ring mismatch");
    return {a.ring, std::lcm(a.gen, b.gen)};
}

inline RingIdeal ideal_radical(const RingIdeal& a) {
    long long r = radical_of(a.gen);
    return {a.ring, r == a.ring.modulus ? 0 : r};
}

inline bool is_prime_ideal(const RingIdeal& a) {
    if (!a.is_proper()) throw std::invalid_argument("is_prime_ideal: ideal must be proper");
    auto f = factorize(a.gen);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

struct IdealVerdict {
    bool holds = true;
    std::optional<long long> witness;
    explicit operator bool() const { return holds; }
};

// x^k in I implies x^n in I, quantified over all residues.
inline IdealVerdict is_kn_closed_ideal(const RingIdeal& I, int k, int n) {
    if (!I.is_proper()) throw std::invalid_argument("is_kn_closed_ideal: ideal must be proper");
    if (k < 1 || n < 1) throw std::invalid_argument("is_kn_closed_ideal: k, n must be >= 1");
    for (long long x = 0; x < I.ring.modulus; ++x)
        if (I.contains(I.ring.pow(x, k)) && !I.contains(I.ring.pow(x, n)))
            return {false, x};
    return {};
}

inline IdealVerdict is_semi_n_absorbing_ideal(const RingIdeal& I, int n) {
    return is_kn_closed_ideal(I, n + 1, n);
}

struct MultiplicativeSet {
    ZModRing ring;
    std::vector<long long> elements;  // sorted residues

    bool contains(long long x) const {
        x = ring.canon(x);
        return std::binary_search(elements.begin(), elements.end(), x);
    }
    bool has_zero() const { return contains(0); }
};

// Smallest multiplicatively closed subset containing seeds and 1.
inline MultiplicativeSet mult_closure(const ZModRing& R, const std::vector<long long>& seeds) {
    if (seeds.empty()) throw std::invalid_argument("mult_closure: seeds must be nonempty");
    std::set<long long> s;
    std::vector<long long> work;
    auto insert = [&](long long x) {
        if (s.insert(x).second) work.push_back(x);
    };
    insert(R.canon(1));
    for (long long x : seeds) insert(R.canon(x));
    while (!work.empty()) {
        long long x = work.back();
        work.pop_back();
        for (long long y : std::vector<long long>(s.begin(), s.end())) insert(R.mul(x, y));
    }
    return {R, std::vector<long long>(s.begin(), s.end())};
}

}  // namespace knsub

#pragma once

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace knsub {

// Prime factorization with exponents; factors sorted by increasing prime.
struct FactoredNat {
    long long value = 1;
    std::vector<std::pair<long long, int>> factors;

    int exponent_of(long long p) const {
        for (const auto& [q, e] : factors)
            if (q == p) return e;
        return 0;
    }
    std::size_t prime_count() const { return factors.size(); }
};

inline FactoredNat factorize(long long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    FactoredNat f;
    f.value = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.factors.emplace_back(p, e);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

inline int valuation(long long n, long long p) {
    if (n == 0) throw std::invalid_argument("valuation: undefined at 0");
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

// Product of the distinct primes dividing n.
inline long long radical_of(long long n) {
    long long r = 1;
    for (const auto& [p, e] : factorize(n).factors) r *= p;
    return r;
}

}  // namespace knsub

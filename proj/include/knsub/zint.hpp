#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "knsub/factored.hpp"

namespace knsub {

// Exact engine for submodules cZ of the Z-module Z, working on valuation
// vectors supported on the primes of c. Every membership comparison has the
// form j·v_p(r) + v_p(m) >= t_p or n·v_p(r) >= t_p with j, n >= 1, so any
// valuation exceeding t_p behaves exactly like t_p; capping exponents at t_p
// keeps the search finite and exact. Witnesses are reconstructed as the
// smallest integers realizing the violating vectors, enumerated in increasing
// integer order.
struct CyclicZSubmodule {
    FactoredNat c;

    explicit CyclicZSubmodule(long long value) : c(factorize(value)) {
        if (value < 2) throw std::invalid_argument("CyclicZSubmodule: c must be >= 2");
    }
    std::size_t dims() const { return c.factors.size(); }
    int cap(std::size_t i) const { return c.factors[i].second; }
};

struct ZintVerdict {
    bool holds = true;
    long long r = 0, m = 0;
    explicit operator bool() const { return holds; }
};

namespace zdetail {

struct Candidates {
    std::vector<std::vector<int>> vecs;   // exponent vectors, one entry per prime of c
    std::vector<long long> values;       // reconstructed integers, sorted ascending
};

inline Candidates capped_candidates(const CyclicZSubmodule& N) {
    Candidates out;
    std::vector<int> cur(N.dims(), 0);
    std::vector<std::pair<long long, std::vector<int>>> items;
    auto rec = [&](auto&& self, std::size_t i, long long value) -> void {
        if (i == N.dims()) {
            items.emplace_back(value, cur);
            return;
        }
        long long pw = 1;
        for (int e = 0; e <= N.cap(i); ++e) {
            cur[i] = e;
            self(self, i + 1, value * pw);
            pw *= N.c.factors[i].first;
        }
    };
    rec(rec, 0, 1);
    std::sort(items.begin(), items.end());
    for (auto& [v, vec] : items) {
        out.values.push_back(v);
        out.vecs.push_back(std::move(vec));
    }
    return out;
}

// j·a + b >= t at every prime (b omitted when null).
inline bool member(const CyclicZSubmodule& N, long long j, const std::vector<int>& a,
                   const std::vector<int>* b) {
    for (std::size_t i = 0; i < N.dims(); ++i)
        if (j * a[i] + (b ? (*b)[i] : 0) < N.cap(i)) return false;
    return true;
}

}  // namespace zdetail

// r^k·m in cZ implies r^n in cZ or r^{n-1}·m in cZ, over all integers r, m.
inline ZintVerdict zint_is_kn_closed(const CyclicZSubmodule& N, int k, int n) {
    if (k < 1 || n < 1) throw std::invalid_argument("zint_is_kn_closed: k, n must be >= 1");
    auto cand = zdetail::capped_candidates(N);
    for (std::size_t ri = 0; ri < cand.vecs.size(); ++ri) {
        const auto& a = cand.vecs[ri];
        if (zdetail::member(N, n, a, nullptr)) continue;  // r^n in cZ
        for (std::size_t mi = 0; mi < cand.vecs.size(); ++mi) {
            const auto& b = cand.vecs[mi];
            if (zdetail::member(N, k, a, &b) && !zdetail::member(N, n - 1, a, &b))
                return {false, cand.values[ri], cand.values[mi]};
        }
    }
    return {};
}

inline ZintVerdict zint_is_kn_closed(long long c, int k, int n) {
    return zint_is_kn_closed(CyclicZSubmodule(c), k, n);
}

inline ZintVerdict zint_is_semi_n_absorbing(const CyclicZSubmodule& N, int n) {
    return zint_is_kn_closed(N, n, n);
}

inline ZintVerdict zint_is_semi_n_absorbing(long long c, int n) {
    return zint_is_semi_n_absorbing(CyclicZSubmodule(c), n);
}

struct ZintIdealVerdict {
    bool holds = true;
    long long x = 0;
    explicit operator bool() const { return holds; }
};

// x^k in cZ implies x^n in cZ. Closed form: n·ceil(t_p/k) >= t_p at every
// prime; the minimal violating x has exponent ceil(t_p/k) everywhere.
inline ZintIdealVerdict zint_ideal_is_kn_closed(const CyclicZSubmodule& N, int k, int n) {
    if (k < 1 || n < 1) throw std::invalid_argument("zint_ideal_is_kn_closed: k, n must be >= 1");
    bool holds = true;
    long long x = 1;
    for (std::size_t i = 0; i < N.dims(); ++i) {
        long long t = N.cap(i);
        long long a = (t + k - 1) / k;
        if (n * a < t) holds = false;
        for (long long e = 0; e < a; ++e) x *= N.c.factors[i].first;
    }
    return holds ? ZintIdealVerdict{} : ZintIdealVerdict{false, x};
}

inline ZintIdealVerdict zint_ideal_is_kn_closed(long long c, int k, int n) {
    return zint_ideal_is_kn_closed(CyclicZSubmodule(c), k, n);
}

// Decomposition condition on t for a prime-power residual p^t: there are
// integers a >= 0 and 1 <= r <= n with t = ka + r, a(k mod n) + r <= n, and
// a != 0 only when k = n + c for some 1 <= c <= n-1.
inline bool tkn_condition(long long t, long long k, long long n) {
    if (t < 1 || k < 1 || n < 1) throw std::invalid_argument("tkn_condition: arguments must be >= 1");
    for (long long a = 0; a * k < t; ++a) {
        long long r = t - k * a;
        if (r < 1 || r > n) continue;
        if (a * (k % n) + r > n) continue;
        if (a != 0) {
            long long c = k - n;
            if (c < 1 || c > n - 1) continue;
        }
        return true;
    }
    return false;
}

// Membership form: for k >= 2n, t in {1..n}; for n <= k < 2n with c = k-n,
// t in U_{h=1..n} {ki+h : i in Z, 0 <= ic <= n-h}. No condition for k < n.
inline bool tkn_membership(long long t, long long k, long long n) {
    if (t < 1 || k < 1 || n < 1) throw std::invalid_argument("tkn_membership: arguments must be >= 1");
    if (k < n) return true;
    if (k >= 2 * n) return t >= 1 && t <= n;
    long long c = k - n;
    for (long long h = 1; h <= n; ++h) {
        if (c == 0) {
            long long r = t % k;
            if (r == h % k) return true;
            continue;
        }
        for (long long i = 0; i * c <= n - h; ++i)
            if (k * i + h == t) return true;
    }
    return false;
}

// Per-exponent conditions for c = p_1^{t_1} ... p_i^{t_i}: with k = bn + c',
// b >= 2 forces every t_j in {1..n}; b = 1 uses the membership sets.
inline bool factorization_condition(const CyclicZSubmodule& N, int k, int n) {
    if (n < 1 || k < n) throw std::invalid_argument("factorization_condition: need 1 <= n <= k");
    for (std::size_t i = 0; i < N.dims(); ++i)
        if (!tkn_membership(N.cap(i), k, n)) return false;
    return true;
}

inline bool factorization_condition(long long c, int k, int n) {
    return factorization_condition(CyclicZSubmodule(c), k, n);
}

// Prime-power case split for N = P^t: either t <= n, or t = ka+r = na+d with
// a >= 1 and 1 <= r,d <= n-1, or t = ka+r = n(a+1) with a >= 1 and
// 1 <= r <= n-1.
inline bool pt_condition(long long t, int k, int n) {
    if (t < 1 || n < 1 || k < n) throw std::invalid_argument("pt_condition: need 1 <= n <= k, t >= 1");
    if (t <= n) return true;
    for (long long a = 1; a * k < t; ++a) {
        long long r = t - a * k;
        if (r < 1 || r > n - 1) continue;
        long long d = t - a * n;
        if (d >= 1 && d <= n - 1) return true;
        if (t == n * (a + 1)) return true;
    }
    return false;
}

}  // namespace knsub

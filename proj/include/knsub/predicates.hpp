#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "knsub/module.hpp"

namespace knsub {

struct WitnessItem {
    std::string key;
    std::variant<long long, std::string> value;
};

inline WitnessItem wnum(std::string key, long long v) { return {std::move(key), v}; }
inline WitnessItem wtext(std::string key, std::string v) { return {std::move(key), std::move(v)}; }

// Verdict of an exhaustive predicate scan. A witness is present exactly when
// the predicate fails, and replaying it against the definition reproduces the
// violation.
struct Verdict {
    bool holds = true;
    std::vector<WitnessItem> witness;

    explicit operator bool() const { return holds; }
    static Verdict yes() { return {}; }
    static Verdict no(std::vector<WitnessItem> w) { return {false, std::move(w)}; }
};

inline std::string witness_str(const Verdict& v) {
    std::string s;
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
        if (i) s += ", ";
        s += v.witness[i].key + "=";
        if (std::holds_alternative<long long>(v.witness[i].value))
            s += std::to_string(std::get<long long>(v.witness[i].value));
        else
            s += std::get<std::string>(v.witness[i].value);
    }
    return s;
}

namespace detail {
inline void require_proper(const Submodule& N, const char* who) {
    if (!N.is_proper()) throw std::invalid_argument(std::string(who) + ": submodule must be proper");
}
inline void require_kn(int k, int n, const char* who) {
    if (k < 1 || n < 1) throw std::invalid_argument(std::string(who) + ": k and n must be >= 1");
}
}  // namespace detail

// r^k·x in N implies r^n in (N:M) or r^{n-1}·x in N, with r^0·x = x.
// Witness is lexicographically least over (r, x).
inline Verdict is_kn_closed(const Submodule& N, int k, int n) {
    detail::require_proper(N, "is_kn_closed");
    detail::require_kn(k, n, "is_kn_closed");
    const FiniteModule& M = N.mod();
    RingIdeal res = residual_ring(N);
    for (long long r = 0; r < M.ring().modulus; ++r) {
        if (res.contains(M.ring().pow(r, n))) continue;
        long long rk = M.ring().pow(r, k);
        long long rn1 = M.ring().pow(r, n - 1);
        for (Index x = 0; x < M.size(); ++x)
            if (N.contains(M.scalar(rk, x)) && !N.contains(M.scalar(rn1, x)))
                return Verdict::no({wnum("r", r), wtext("x", M.label(x))});
    }
    return Verdict::yes();
}

inline Verdict is_semi_n_absorbing(const Submodule& N, int n) { return is_kn_closed(N, n, n); }

// r^2·x in N implies r·x in N.
inline Verdict is_semiprime(const Submodule& N) {
    detail::require_proper(N, "is_semiprime");
    const FiniteModule& M = N.mod();
    for (long long r = 0; r < M.ring().modulus; ++r) {
        long long r2 = M.ring().mul(r, r);
        for (Index x = 0; x < M.size(); ++x)
            if (N.contains(M.scalar(r2, x)) && !N.contains(M.scalar(r, x)))
                return Verdict::no({wnum("r", r), wtext("x", M.label(x))});
    }
    return Verdict::yes();
}

// a·b·x in N implies a·x in N or b·x in N.
inline Verdict is_quasi_prime(const Submodule& N) {
    detail::require_proper(N, "is_quasi_prime");
    const FiniteModule& M = N.mod();
    for (long long a = 0; a < M.ring().modulus; ++a)
        for (long long b = a; b < M.ring().modulus; ++b) {
            long long ab = M.ring().mul(a, b);
            for (Index x = 0; x < M.size(); ++x)
                if (N.contains(M.scalar(ab, x)) && !N.contains(M.scalar(a, x)) && !N.contains(M.scalar(b, x)))
                    return Verdict::no({wnum("a", a), wnum("b", b), wtext("x", M.label(x))});
        }
    return Verdict::yes();
}

// a_1···a_n·x in N implies the full product lies in (N:M) or some product of
// n-1 of the a_i's carries x into N. Scalars iterate as multisets.
inline Verdict is_n_absorbing(const Submodule& N, int n, int cap = 3) {
    detail::require_proper(N, "is_n_absorbing");
    if (n < 1) throw std::invalid_argument("is_n_absorbing: n must be >= 1");
    if (n > cap)
        throw std::invalid_argument("is_n_absorbing: n=" + std::to_string(n) + " above cap " + std::to_string(cap));
    const FiniteModule& M = N.mod();
    RingIdeal res = residual_ring(N);
    std::vector<long long> tuple(n, 0);
    std::optional<Verdict> bad;
    auto scan = [&](auto&& self, int pos, long long lo) -> bool {
        if (pos == n) {
            long long prod = 1;
            for (long long a : tuple) prod = M.ring().mul(prod, a);
            if (res.contains(prod)) return false;
            for (Index x = 0; x < M.size(); ++x) {
                if (!N.contains(M.scalar(prod, x))) continue;
                bool saved = false;
                for (int i = 0; i < n && !saved; ++i) {
                    long long part = 1;
                    for (int j = 0; j < n; ++j)
                        if (j != i) part = M.ring().mul(part, tuple[j]);
                    if (N.contains(M.scalar(part, x))) saved = true;
                }
                if (!saved) {
                    std::vector<WitnessItem> w;
                    for (int i = 0; i < n; ++i) w.push_back(wnum("a" + std::to_string(i + 1), tuple[i]));
                    w.push_back(wtext("x", M.label(x)));
                    bad = Verdict::no(std::move(w));
                    return true;
                }
            }
            return false;
        }
        for (long long a = lo; a < M.ring().modulus; ++a) {
            tuple[pos] = a;
            if (self(self, pos + 1, a)) return true;
        }
        return false;
    };
    scan(scan, 0, 0);
    return bad ? *bad : Verdict::yes();
}

// Ideal form, via single elements: I^k·x ⊆ N implies I^n ⊆ (N:M) or
// I^{n-1}·x ⊆ N, quantified over all ideals (divisors) of the ring; I^0 is
// the whole ring. A principal I = (d) makes every ideal condition a generator
// condition.
inline Verdict is_strongly_kn_closed(const Submodule& N, int k, int n) {
    detail::require_proper(N, "is_strongly_kn_closed");
    detail::require_kn(k, n, "is_strongly_kn_closed");
    const FiniteModule& M = N.mod();
    const ZModRing& R = M.ring();
    RingIdeal res = residual_ring(N);
    for (long long d = 1; d <= R.modulus; ++d) {
        if (R.modulus % d) continue;
        RingIdeal I(R, d == R.modulus ? 0 : d);
        long long ik = ideal_power(I, k).gen;
        long long in = ideal_power(I, n).gen;
        long long in1 = ideal_power(I, n - 1).gen;
        if (in % res.gen == 0) continue;  // I^n ⊆ (N:M)
        for (Index x = 0; x < M.size(); ++x)
            if (N.contains(M.scalar(ik, x)) && !N.contains(M.scalar(in1, x)))
                return Verdict::no({wnum("ideal", I.gen), wtext("x", M.label(x))});
    }
    return Verdict::yes();
}

inline Verdict is_strongly_semi_n_absorbing(const Submodule& N, int n) {
    return is_strongly_kn_closed(N, n, n);
}

// (N :_R r^k·x) = (N :_R r^{n-1}·x) or r^n in (N:M), for all r, x.
inline Verdict colon_test(const Submodule& N, int k, int n) {
    detail::require_proper(N, "colon_test");
    detail::require_kn(k, n, "colon_test");
    const FiniteModule& M = N.mod();
    RingIdeal res = residual_ring(N);
    std::vector<long long> colon(M.size());
    for (Index y = 0; y < M.size(); ++y) colon[y] = residual_element(N, y).gen;
    for (long long r = 0; r < M.ring().modulus; ++r) {
        if (res.contains(M.ring().pow(r, n))) continue;
        long long rk = M.ring().pow(r, k);
        long long rn1 = M.ring().pow(r, n - 1);
        for (Index x = 0; x < M.size(); ++x)
            if (colon[M.scalar(rk, x)] != colon[M.scalar(rn1, x)])
                return Verdict::no({wnum("r", r), wtext("x", M.label(x))});
    }
    return Verdict::yes();
}

// Boolean grid of is_kn_closed over (k,n) in [1,Kmax]^2. The grid laws
// (monotonicity and the k>n collapse) are asserted before returning; a
// violation signals an implementation bug, not user error.
struct Spectrum {
    int kmax = 0;
    std::vector<char> cells;  // (k-1)*kmax + (n-1)

    bool cell(int k, int n) const { return cells[static_cast<std::size_t>(k - 1) * kmax + (n - 1)] != 0; }
    std::string fingerprint() const {
        std::string s;
        for (char c : cells) s += c ? '1' : '0';
        return s;
    }
};

inline Spectrum spectrum(const Submodule& N, int kmax) {
    detail::require_proper(N, "spectrum");
    if (kmax < 1) throw std::invalid_argument("spectrum: Kmax must be >= 1");
    Spectrum sp;
    sp.kmax = kmax;
    sp.cells.assign(static_cast<std::size_t>(kmax) * kmax, 0);
    for (int k = 1; k <= kmax; ++k)
        for (int n = 1; n <= kmax; ++n)
            sp.cells[static_cast<std::size_t>(k - 1) * kmax + (n - 1)] = is_kn_closed(N, k, n).holds ? 1 : 0;
    for (int k = 1; k <= kmax; ++k)
        for (int n = 1; n <= kmax; ++n) {
            if (!sp.cell(k, n)) continue;
            for (int k1 = 1; k1 <= k; ++k1)
                for (int n1 = n; n1 <= kmax; ++n1)
                    if (!sp.cell(k1, n1)) throw std::logic_error("spectrum: monotonicity violated");
        }
    for (int k = 2; k <= kmax; ++k)
        for (int n = 1; n < k; ++n)
            if (sp.cell(k, n) != sp.cell(n, n)) throw std::logic_error("spectrum: k>n collapse violated");
    return sp;
}

}  // namespace knsub

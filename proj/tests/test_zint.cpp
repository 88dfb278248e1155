#include <catch_amalgamated.hpp>

#include "knsub/predicates.hpp"
#include "knsub/zint.hpp"
#include "oracles.hpp"

using namespace knsub;

TEST_CASE("zint_is_kn_closed on 6Z, 8Z and prime cZ") {
    auto v6 = zint_is_kn_closed(6, 2, 1);
    REQUIRE(!v6.holds);
    CHECK(v6.r == 2);
    CHECK(v6.m == 3);
    // the textbook illustration r=2, m=9 replays as a violation too
    CHECK((4 * 9) % 6 == 0);
    CHECK(2 % 6 != 0);
    CHECK(9 % 6 != 0);

    auto v8 = zint_is_kn_closed(8, 2, 2);
    REQUIRE(!v8.holds);
    CHECK(v8.r == 2);
    CHECK(v8.m == 2);

    for (long long p : {5ll, 7ll})
        for (int k = 1; k <= 4; ++k)
            for (int n = 1; n <= 4; ++n) CHECK(zint_is_kn_closed(p, k, n).holds);

    CHECK_THROWS_AS(zint_is_kn_closed(1, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(zint_is_kn_closed(6, 0, 1), std::invalid_argument);
}

TEST_CASE("zint_is_semi_n_absorbing") {
    CHECK(zint_is_semi_n_absorbing(30, 2).holds);
    auto v36 = zint_is_semi_n_absorbing(36, 2);
    REQUIRE(!v36.holds);
    CHECK(v36.r == 2);
    CHECK(v36.m == 9);
    auto v12 = zint_is_semi_n_absorbing(12, 2);
    REQUIRE(!v12.holds);
    CHECK(v12.r == 2);
    CHECK(v12.m == 3);
    CHECK(zint_is_semi_n_absorbing(4, 2).holds);
}

TEST_CASE("zint_ideal_is_kn_closed") {
    CHECK(zint_ideal_is_kn_closed(6, 2, 1).holds);
    auto v8 = zint_ideal_is_kn_closed(8, 2, 1);
    REQUIRE(!v8.holds);
    CHECK(v8.x == 4);
    for (int n = 1; n <= 5; ++n) {
        long long pn = 1;
        for (int i = 0; i < n; ++i) pn *= 2;
        CHECK(zint_ideal_is_kn_closed(pn, n + 1, n).holds);
    }
}

TEST_CASE("ideal closed form agrees with the valuation-search oracle") {
    for (long long c = 2; c <= 400; ++c)
        for (int k = 1; k <= 4; ++k)
            for (int n = 1; n <= 4; ++n)
                CHECK(zint_ideal_is_kn_closed(c, k, n).holds == oracle::zint_ideal_kn(c, k, n));
}

TEST_CASE("submodule engine agrees with the integer brute-force oracle") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            long long c = 1;
            for (int i = 0; i < a; ++i) c *= 2;
            for (int i = 0; i < b; ++i) c *= 3;
            if (c < 2) continue;
            for (int k = 1; k <= 3; ++k)
                for (int n = 1; n <= 3; ++n) CHECK(zint_is_kn_closed(c, k, n).holds == oracle::zint_kn(c, k, n));
        }
}

TEST_CASE("zint agrees with the finite reduction at a tracking modulus") {
    // image of cZ in Z_E for E = prod p^(t_p + k) decides the same predicate
    for (auto [c, kcap] : std::vector<std::pair<long long, int>>{{4, 4}, {6, 3}, {8, 4}, {9, 4}, {12, 3}, {27, 4}}) {
        for (int k = 1; k <= kcap; ++k)
            for (int n = 1; n <= 4; ++n) {
                long long E = 1;
                for (auto [p, t] : factorize(c).factors)
                    for (int i = 0; i < t + k; ++i) E *= p;
                ModulePtr M = build_module(ZModRing(E), {E});
                Submodule N = Submodule::span(M, {M->parse_element(std::to_string(c))});
                CHECK(zint_is_kn_closed(c, k, n).holds == is_kn_closed(N, k, n).holds);
            }
    }
}

TEST_CASE("zint grids satisfy monotonicity and the k>n collapse") {
    for (long long c : {6, 8, 12, 16, 30, 36, 72, 200}) {
        bool grid[5][5];
        for (int k = 1; k <= 4; ++k)
            for (int n = 1; n <= 4; ++n) grid[k][n] = zint_is_kn_closed(c, k, n).holds;
        for (int k = 1; k <= 4; ++k)
            for (int n = 1; n <= 4; ++n) {
                if (!grid[k][n]) continue;
                for (int k1 = 1; k1 <= k; ++k1)
                    for (int n1 = n; n1 <= 4; ++n1) CHECK(grid[k1][n1]);
            }
        for (int k = 2; k <= 4; ++k)
            for (int n = 1; n < k; ++n) CHECK(grid[k][n] == grid[n][n]);
    }
}

TEST_CASE("submodule closedness forces ideal closedness, never conversely") {
    for (long long c : {6, 8, 12, 36, 60})
        for (int k = 1; k <= 4; ++k)
            for (int n = 1; n <= 4; ++n)
                if (zint_is_kn_closed(c, k, n).holds) CHECK(zint_ideal_is_kn_closed(c, k, n).holds);
    CHECK(zint_ideal_is_kn_closed(6, 2, 1).holds);
    CHECK(!zint_is_kn_closed(6, 2, 1).holds);
}

TEST_CASE("tkn_condition") {
    for (long long t = 1; t <= 4; ++t)
        for (long long n = t; n <= 5; ++n) CHECK(tkn_condition(t, 3, n));  // a = 0, r = t <= n
    CHECK(!tkn_condition(3, 2, 2));
    CHECK(!tkn_condition(3, 3, 2));  // a=0 forces r=3>n; a=1 leaves r=0
    CHECK(tkn_condition(4, 3, 2));   // a=1, r=1; k=n+1 admits a != 0
    CHECK_THROWS_AS(tkn_condition(0, 2, 2), std::invalid_argument);
}

TEST_CASE("tkn_membership") {
    // k >= 2n: t restricted to 1..n
    CHECK(tkn_membership(2, 4, 2));
    CHECK(!tkn_membership(3, 4, 2));
    // k = n: every t belongs
    for (long long t = 1; t <= 9; ++t) CHECK(tkn_membership(t, 3, 3));
    // k = n + c with c >= 1
    CHECK(tkn_membership(1, 3, 2));   // h=1, i=0
    CHECK(tkn_membership(2, 3, 2));   // h=2, i=0
    CHECK(!tkn_membership(3, 3, 2));  // 3 = 3i+h has no integer solution with h in {1,2}
    CHECK(tkn_membership(4, 3, 2));   // h=1, i=1: ic=1 <= n-h=1
    // no condition below the diagonal
    CHECK(tkn_membership(7, 1, 3));
}

TEST_CASE("factorization_condition") {
    for (int k = 1; k <= 4; ++k)
        for (int n = 1; n <= k; ++n) CHECK(factorization_condition(6, k, n));
    CHECK(!factorization_condition(32, 4, 2));
    CHECK(!tkn_condition(5, 4, 2));
    CHECK_THROWS_AS(factorization_condition(6, 2, 3), std::invalid_argument);
}

TEST_CASE("pt_condition") {
    CHECK(pt_condition(2, 3, 2));
    CHECK(!pt_condition(3, 3, 2));  // t=3: a=1 r=0 invalid; no case fits
    CHECK(pt_condition(1, 4, 1));
    CHECK_THROWS_AS(pt_condition(1, 2, 3), std::invalid_argument);
}

TEST_CASE("closedness of p^t Z collapses to t <= n when k >= n") {
    for (long long t = 1; t <= 10; ++t) {
        long long c = 1;
        for (int i = 0; i < t; ++i) c *= 2;
        for (int n = 1; n <= 4; ++n)
            for (int k = n; k <= 4; ++k) CHECK(zint_is_kn_closed(c, k, n).holds == (t <= n));
    }
}

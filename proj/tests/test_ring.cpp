#include <catch_amalgamated.hpp>

#include <set>

#include "knsub/ring.hpp"
#include "oracles.hpp"

using namespace knsub;

TEST_CASE("factorize") {
    CHECK(factorize(1).factors.empty());
    auto f12 = factorize(12);
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.factors[0] == std::pair<long long, int>{2, 2});
    CHECK(f12.factors[1] == std::pair<long long, int>{3, 1});
    auto f30 = factorize(30);
    REQUIRE(f30.factors.size() == 3);
    CHECK(f30.factors[2].first == 5);
    CHECK(f30.exponent_of(3) == 1);
    CHECK(f30.exponent_of(7) == 0);
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    CHECK(radical_of(12) == 6);
    CHECK(valuation(48, 2) == 4);
}

TEST_CASE("units") {
    CHECK(units(ZModRing(2)) == std::vector<long long>{1});
    CHECK(units(ZModRing(12)) == std::vector<long long>{1, 5, 7, 11});
    CHECK(units(ZModRing(7)).size() == 6);
}

TEST_CASE("units form a group under multiplication") {
    for (long long m : {4, 8, 12, 30, 36}) {
        ZModRing R(m);
        auto u = units(R);
        std::set<long long> uset(u.begin(), u.end());
        for (long long a : u) {
            bool has_inverse = false;
            for (long long b : u) {
                CHECK(uset.count(R.mul(a, b)) == 1);
                if (R.mul(a, b) == 1) has_inverse = true;
            }
            CHECK(has_inverse);
        }
    }
}

TEST_CASE("ideal canonicalization") {
    ZModRing R(12);
    CHECK(RingIdeal(R, 8).gen == 4);
    CHECK(RingIdeal(R, 0).gen == 12);
    CHECK(RingIdeal(R, 12).gen == 12);
    CHECK(RingIdeal(R, 1).is_proper() == false);
    RingIdeal zero(R, 0);
    CHECK(zero.is_zero());
    CHECK(zero.contains(0));
    CHECK(!zero.contains(6));
    RingIdeal four(R, 4);
    CHECK(four.contains(8));
    CHECK(!four.contains(2));
    CHECK(four.subset_of(RingIdeal(R, 2)));
    CHECK(!RingIdeal(R, 2).subset_of(four));
}

TEST_CASE("ideal arithmetic") {
    ZModRing R(12);
    CHECK(ideal_product(RingIdeal(R, 2), RingIdeal(R, 3)).gen == 6);
    CHECK(ideal_power(RingIdeal(R, 2), 3).gen == 4);  // (8) canonicalizes to (4)
    CHECK(ideal_power(RingIdeal(R, 2), 0).gen == 1);
    CHECK(ideal_sum(RingIdeal(R, 4), RingIdeal(R, 6)).gen == 2);
    CHECK(ideal_intersect(RingIdeal(R, 4), RingIdeal(R, 6)).gen == 12);
}

TEST_CASE("ideal_radical") {
    ZModRing R12(12);
    CHECK(ideal_radical(RingIdeal(R12, 4)).gen == 2);
    CHECK(ideal_radical(RingIdeal(R12, 1)).gen == 1);
    CHECK(ideal_radical(RingIdeal(R12, 0)).gen == 6);  // nilpotents of Z_12
}

TEST_CASE("ideal_radical agrees with the power-scan oracle and is idempotent") {
    for (long long m : {8, 12, 36, 60}) {
        ZModRing R(m);
        for (long long d = 1; d <= m; ++d) {
            if (m % d) continue;
            RingIdeal I(R, d == m ? 0 : d);
            RingIdeal rad = ideal_radical(I);
            std::set<long long> expect = oracle::radical_set(R, I.gen);
            for (long long x = 0; x < m; ++x) CHECK(rad.contains(x) == (expect.count(x) == 1));
            CHECK(ideal_radical(rad) == rad);
            for (long long x = 0; x < m; ++x)
                if (I.contains(x)) CHECK(rad.contains(x));
        }
    }
}

TEST_CASE("is_kn_closed_ideal examples") {
    ZModRing R12(12);
    CHECK(is_kn_closed_ideal(RingIdeal(R12, 2), 2, 1).holds);
    auto v = is_kn_closed_ideal(RingIdeal(R12, 4), 2, 1);
    REQUIRE(!v.holds);
    CHECK(*v.witness == 2);
    CHECK_THROWS_AS(is_kn_closed_ideal(RingIdeal(R12, 1), 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(is_kn_closed_ideal(RingIdeal(R12, 2), 0, 1), std::invalid_argument);
}

TEST_CASE("ideal closedness is reflexive and monotone") {
    for (long long m : {12, 16, 36}) {
        ZModRing R(m);
        for (long long d = 2; d <= m; ++d) {
            if (m % d) continue;
            RingIdeal I(R, d == m ? 0 : d);
            for (int k = 1; k <= 4; ++k) {
                CHECK(is_kn_closed_ideal(I, k, k).holds);
                for (int n = k; n <= 4; ++n) CHECK(is_kn_closed_ideal(I, k, n).holds);
            }
            for (int k = 1; k <= 4; ++k)
                for (int n = 1; n <= 4; ++n) {
                    if (!is_kn_closed_ideal(I, k, n).holds) continue;
                    for (int k1 = 1; k1 <= k; ++k1)
                        for (int n1 = n; n1 <= 4; ++n1) CHECK(is_kn_closed_ideal(I, k1, n1).holds);
                }
        }
    }
}

TEST_CASE("is_semi_n_absorbing_ideal examples") {
    CHECK(is_semi_n_absorbing_ideal(RingIdeal(ZModRing(12), 6), 1).holds);
    CHECK(!is_semi_n_absorbing_ideal(RingIdeal(ZModRing(8), 4), 1).holds);
    CHECK(is_semi_n_absorbing_ideal(RingIdeal(ZModRing(16), 8), 3).holds);
}

TEST_CASE("is_prime_ideal") {
    ZModRing R(12);
    CHECK(is_prime_ideal(RingIdeal(R, 3)));
    CHECK(!is_prime_ideal(RingIdeal(R, 4)));
    CHECK(!is_prime_ideal(RingIdeal(R, 6)));
    CHECK_THROWS_AS(is_prime_ideal(RingIdeal(R, 1)), std::invalid_argument);
}

TEST_CASE("mult_closure") {
    ZModRing R(12);
    CHECK(mult_closure(R, {3}).elements == std::vector<long long>{1, 3, 9});
    CHECK(mult_closure(R, {1}).elements == std::vector<long long>{1});
    CHECK(mult_closure(R, {2}).elements == std::vector<long long>{1, 2, 4, 8});
    CHECK(mult_closure(R, {6}).has_zero());  // 6*6 = 0 mod 12
    CHECK_THROWS_AS(mult_closure(R, {}), std::invalid_argument);
}

#include <catch_amalgamated.hpp>

#include "knsub/io.hpp"
#include "knsub/predicates.hpp"
#include "oracles.hpp"

using namespace knsub;

namespace {
Submodule divisor_sub(const ModulePtr& M, long long d) {
    return Submodule::span(M, {M->parse_element(std::to_string(d % M->ring().modulus))});
}
}  // namespace

TEST_CASE("is_kn_closed on the zero submodule of Z_8") {
    ModulePtr m8 = reduce_integer_scalars({8});
    Submodule z = Submodule::zero(m8);
    CHECK(is_kn_closed(z, 3, 3).holds);
    Verdict v = is_kn_closed(z, 3, 2);
    REQUIRE(!v.holds);
    CHECK(witness_str(v) == "r=2, x=1");
    CHECK_THROWS_AS(is_kn_closed(Submodule::whole(m8), 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(is_kn_closed(z, 0, 2), std::invalid_argument);
}

TEST_CASE("prime submodules are closed everywhere") {
    ModulePtr m4 = build_module(ZModRing(4), {4});
    Submodule p = divisor_sub(m4, 2);
    for (int k = 1; k <= 4; ++k)
        for (int n = 1; n <= 4; ++n) CHECK(is_kn_closed(p, k, n).holds);
}

TEST_CASE("is_kn_closed agrees with the definitional oracle") {
    for (ModulePtr m : {build_module(ZModRing(12), {12}), build_module(ZModRing(16), {16}),
                        build_module(ZModRing(4), {4, 2}), build_module(ZModRing(36), {36})}) {
        for (const Submodule& n : enumerate_submodules(m)) {
            if (!n.is_proper()) continue;
            for (int k = 1; k <= 3; ++k)
                for (int nn = 1; nn <= 3; ++nn)
                    CHECK(is_kn_closed(n, k, nn).holds == oracle::kn_closed(n, k, nn));
        }
    }
}

TEST_CASE("is_semi_n_absorbing examples") {
    CHECK(is_semi_n_absorbing(Submodule::zero(reduce_integer_scalars({30})), 2).holds);
    ModulePtr m36 = build_module(ZModRing(36), {36});
    Verdict v = is_semi_n_absorbing(divisor_sub(m36, 12), 2);
    REQUIRE(!v.holds);
    CHECK(witness_str(v) == "r=2, x=3");
    CHECK(is_semi_n_absorbing(divisor_sub(m36, 4), 2).holds);
}

TEST_CASE("is_semiprime examples") {
    ModulePtr m36 = build_module(ZModRing(36), {36});
    CHECK(is_semiprime(divisor_sub(m36, 6)).holds);
    Verdict v = is_semiprime(divisor_sub(m36, 4));
    REQUIRE(!v.holds);
    CHECK(witness_str(v) == "r=2, x=1");
    CHECK(is_semiprime(Submodule::zero(build_module(ZModRing(3), {3}))).holds);
}

TEST_CASE("is_quasi_prime examples") {
    CHECK(!is_quasi_prime(Submodule::zero(reduce_integer_scalars({8}))).holds);
    ModulePtr m12 = build_module(ZModRing(12), {12});
    CHECK(is_quasi_prime(divisor_sub(m12, 2)).holds);
    // squarefree annihilators do not rescue quasi-primality: 2*3*1 = 0 in Z_6
    // while neither 2*1 nor 3*1 vanishes
    Verdict v = is_quasi_prime(Submodule::zero(build_module(ZModRing(6), {6})));
    REQUIRE(!v.holds);
    CHECK(witness_str(v) == "a=2, b=3, x=1");
}

TEST_CASE("is_n_absorbing examples") {
    ModulePtr m30 = reduce_integer_scalars({30});
    Submodule z = Submodule::zero(m30);
    Verdict v = is_n_absorbing(z, 2);
    REQUIRE(!v.holds);
    CHECK(witness_str(v) == "a1=2, a2=3, x=5");
    CHECK(is_n_absorbing(z, 3).holds);
    CHECK_THROWS_AS(is_n_absorbing(z, 4), std::invalid_argument);  // above default cap
    CHECK(is_n_absorbing(z, 4, 4).holds);
}

TEST_CASE("1-absorbing agrees with prime") {
    for (ModulePtr m : {build_module(ZModRing(12), {12}), build_module(ZModRing(4), {4, 2})}) {
        for (const Submodule& n : enumerate_submodules(m)) {
            if (!n.is_proper()) continue;
            CHECK(is_n_absorbing(n, 1).holds == is_prime_submodule(n).holds);
        }
    }
}

TEST_CASE("strongly closed forms") {
    ModulePtr m16 = build_module(ZModRing(16), {16});
    Submodule four = divisor_sub(m16, 4);
    CHECK(is_strongly_kn_closed(four, 2, 2).holds == is_kn_closed(four, 2, 2).holds);
    ModulePtr m8 = reduce_integer_scalars({8});
    Verdict v = is_strongly_kn_closed(Submodule::zero(m8), 3, 2);
    REQUIRE(!v.holds);
    CHECK(is_strongly_semi_n_absorbing(Submodule::zero(m8), 2).holds ==
          is_strongly_kn_closed(Submodule::zero(m8), 2, 2).holds);
}

TEST_CASE("strongly closed collapses to plain over Z/mZ") {
    for (ModulePtr m : {build_module(ZModRing(12), {12}), build_module(ZModRing(8), {8, 2})}) {
        for (const Submodule& n : enumerate_submodules(m)) {
            if (!n.is_proper()) continue;
            for (int k = 1; k <= 4; ++k)
                for (int nn = 1; nn <= 4; ++nn)
                    CHECK(is_strongly_kn_closed(n, k, nn).holds == is_kn_closed(n, k, nn).holds);
        }
    }
}

TEST_CASE("colon_test equivalence on its provable domain k >= n-1") {
    for (ModulePtr m : {build_module(ZModRing(12), {12}), build_module(ZModRing(36), {36})}) {
        for (const Submodule& n : enumerate_submodules(m)) {
            if (!n.is_proper()) continue;
            for (int k = 1; k <= 4; ++k)
                for (int nn = 1; nn <= 4; ++nn) {
                    if (k < nn - 1) continue;
                    CHECK(colon_test(n, k, nn).holds == is_kn_closed(n, k, nn).holds);
                }
        }
    }
    ModulePtr m8 = reduce_integer_scalars({8});
    CHECK(!colon_test(Submodule::zero(m8), 3, 2).holds);
}

TEST_CASE("colon_test can differ from closedness when k < n-1") {
    // (1,3): r x in N forces r^2 x in N, so closedness is automatic; the
    // residual comparison still distinguishes (0:2)=(8) from (0:4)=(4) in Z_16.
    ModulePtr m16 = build_module(ZModRing(16), {16});
    Submodule z = Submodule::zero(m16);
    CHECK(is_kn_closed(z, 1, 3).holds);
    Verdict v = colon_test(z, 1, 3);
    REQUIRE(!v.holds);
    CHECK(witness_str(v) == "r=2, x=1");

    ModulePtr m48 = build_module(ZModRing(48), {48});
    Submodule sixteen = divisor_sub(m48, 16);
    CHECK(is_kn_closed(sixteen, 1, 3).holds);
    CHECK(!colon_test(sixteen, 1, 3).holds);
}

TEST_CASE("spectrum") {
    ModulePtr m8 = reduce_integer_scalars({8});
    Spectrum sp = spectrum(Submodule::zero(m8), 4);
    CHECK(sp.cell(3, 3));
    CHECK(!sp.cell(3, 2));
    CHECK(sp.fingerprint().size() == 16);

    ModulePtr m4 = build_module(ZModRing(4), {4});
    Spectrum all = spectrum(divisor_sub(m4, 2), 3);
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 3; ++n) CHECK(all.cell(k, n));

    ModulePtr m36 = build_module(ZModRing(36), {36});
    Spectrum sp36 = spectrum(divisor_sub(m36, 12), 3);
    CHECK(!sp36.cell(2, 2));
    CHECK(sp36.cell(2, 3));

    CHECK_THROWS_AS(spectrum(Submodule::zero(m8), 0), std::invalid_argument);
}

namespace {
long long wnum_of(const Verdict& v, const std::string& key) {
    for (const auto& item : v.witness)
        if (item.key == key) return std::get<long long>(item.value);
    FAIL("missing witness field " + key);
    return -1;
}
Index welem_of(const Verdict& v, const FiniteModule& M, const std::string& key) {
    for (const auto& item : v.witness)
        if (item.key == key) return M.parse_element(std::get<std::string>(item.value));
    FAIL("missing witness field " + key);
    return 0;
}
}  // namespace

TEST_CASE("witnesses replay against the definitions") {
    for (ModulePtr m : {build_module(ZModRing(36), {36}), build_module(ZModRing(8), {8, 2})}) {
        for (const Submodule& N : enumerate_submodules(m)) {
            if (!N.is_proper()) continue;
            RingIdeal res = residual_ring(N);
            for (int k = 1; k <= 3; ++k)
                for (int n = 1; n <= 3; ++n) {
                    Verdict v = is_kn_closed(N, k, n);
                    if (v.holds) continue;
                    long long r = wnum_of(v, "r");
                    Index x = welem_of(v, *m, "x");
                    CHECK(N.contains(m->scalar_pow(r, k, x)));
                    CHECK(!res.contains(m->ring().pow(r, n)));
                    CHECK(!N.contains(m->scalar_pow(r, n - 1, x)));
                }
            Verdict q = is_quasi_prime(N);
            if (!q.holds) {
                long long a = wnum_of(q, "a"), b = wnum_of(q, "b");
                Index x = welem_of(q, *m, "x");
                CHECK(N.contains(m->scalar(m->ring().mul(a, b), x)));
                CHECK(!N.contains(m->scalar(a, x)));
                CHECK(!N.contains(m->scalar(b, x)));
            }
            Verdict ab = is_n_absorbing(N, 2);
            if (!ab.holds) {
                long long a1 = wnum_of(ab, "a1"), a2 = wnum_of(ab, "a2");
                Index x = welem_of(ab, *m, "x");
                long long prod = m->ring().mul(a1, a2);
                CHECK(N.contains(m->scalar(prod, x)));
                CHECK(!res.contains(prod));
                CHECK(!N.contains(m->scalar(a1, x)));
                CHECK(!N.contains(m->scalar(a2, x)));
            }
            Verdict st = is_strongly_kn_closed(N, 3, 2);
            if (!st.holds) {
                long long d = wnum_of(st, "ideal");
                Index x = welem_of(st, *m, "x");
                RingIdeal I(m->ring(), d == m->ring().modulus ? 0 : d);
                CHECK(N.contains(m->scalar(ideal_power(I, 3).gen, x)));
                CHECK(ideal_power(I, 2).gen % res.gen != 0);
                CHECK(!N.contains(m->scalar(ideal_power(I, 1).gen, x)));
            }
        }
    }
}

TEST_CASE("verdict JSON shape") {
    ModulePtr m8 = reduce_integer_scalars({8});
    Verdict v = is_kn_closed(Submodule::zero(m8), 3, 2);
    ordered_json j = verdict_json(v);
    CHECK(j["holds"] == false);
    CHECK(j["witness"]["r"] == 2);
    CHECK(j["witness"]["x"] == "1");
    ordered_json t = verdict_json(is_kn_closed(Submodule::zero(m8), 3, 3));
    CHECK(t["holds"] == true);
    CHECK(t["witness"].is_null());
}

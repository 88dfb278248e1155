#include <catch_amalgamated.hpp>

#include "knsub/io.hpp"

using namespace knsub;
using namespace knsub::harness;

namespace {
Catalog small_catalog() {
    Catalog cat;
    for (long long m : {8, 12})
        cat.push_back({FiniteModule::coordinate(ZModRing(m), {m}, "Z_" + std::to_string(m)),
                       "Z_" + std::to_string(m)});
    return cat;
}

ordered_json report_minus_time(const SuiteReport& rep) {
    ordered_json j = report_json(rep);
    j.erase("wall_ms");
    return j;
}
}  // namespace

TEST_CASE("default catalog") {
    Catalog cat = default_catalog();
    CHECK(cat.size() == 19);
    CHECK(cat[0].module->ring().modulus == 4);
    CHECK(cat.back().origin == "Z_4(+)Z_9 over Z_36");
    CHECK(catalog_fingerprint(cat) == catalog_fingerprint(default_catalog()));
}

TEST_CASE("catalog JSON round trip and the shipped file") {
    Catalog cat = default_catalog();
    Catalog again = parse_catalog_json(catalog_json(cat).dump());
    CHECK(catalog_fingerprint(again) == catalog_fingerprint(cat));
    // the repository ships the same catalog as a file
    Catalog from_file = load_catalog_file("data/default_catalog.json");
    CHECK(catalog_fingerprint(from_file) == catalog_fingerprint(cat));
}

TEST_CASE("malformed catalogs are rejected") {
    CHECK_THROWS_AS(parse_catalog_json("{oops"), catalog_error);
    CHECK_THROWS_AS(parse_catalog_json("{}"), catalog_error);
    CHECK_THROWS_AS(parse_catalog_json("[{\"factors\": [4]}]"), catalog_error);
    CHECK_THROWS_AS(parse_catalog_json("[{\"ring\": {\"zmod\": 12}, \"factors\": [8]}]"), catalog_error);
    CHECK_THROWS_AS(load_catalog_file("does-not-exist.json"), catalog_error);
}

TEST_CASE("property registry") {
    auto names = property_names();
    for (const char* required :
         {"T-l1",   "T-t0",   "T-tsm1", "T-tsm2", "T-lsm",  "T-c2",      "T-prop-colon", "T-t1-1",
          "T-t1-2", "T-t1-3", "T-t1-4", "T-t1-5", "T-t1-6", "T-ti",      "T-ciff",       "T-t2",
          "T-rad",  "T-l3",   "T-tf2",  "T-chain", "T-int1", "T-int2",   "T-int3",       "T-divint",
          "T-tsec", "T-csec", "T-l2",   "T-pid",  "T-resmod", "T-NL",    "T-st1",        "T-st2",
          "T-s1",   "T-sloc", "T-NP",   "T-hom1", "T-hom2", "T-cor-sub", "T-cor-quot",   "T-ds1",
          "T-ds2",  "T-ds3",  "T-tkn",  "T-cor-semi-n", "T-cor-semi-2", "T-pid-fact",    "T-Pt",
          "E-e1",   "E-e",    "E-30",   "E-pn",   "E-int"}) {
        CAPTURE(required);
        CHECK(std::find(names.begin(), names.end(), required) != names.end());
    }
    auto scrutiny = property_names(Tier::scrutiny);
    for (const char* sc : {"T-t1-1-n1", "T-prop-colon-full", "E-e1", "E-e", "T-sloc", "T-NP-conv"}) {
        CAPTURE(sc);
        CHECK(std::find(scrutiny.begin(), scrutiny.end(), sc) != scrutiny.end());
    }
}

TEST_CASE("run_property") {
    Bounds b;
    PropertyResult pr = run_property("T-ciff", small_catalog(), b);
    CHECK(pr.fails == 0);
    CHECK(pr.holds > 0);
    CHECK_THROWS_AS(run_property("T-nope", small_catalog(), b), std::invalid_argument);
}

TEST_CASE("suite is deterministic, also across worker counts") {
    Bounds b;
    Catalog cat = small_catalog();
    SuiteReport a = run_suite(cat, b);
    SuiteReport c = run_suite(cat, b);
    SuiteReport d = run_suite(cat, b, {}, 4);
    CHECK(report_minus_time(a) == report_minus_time(c));
    CHECK(report_minus_time(a) == report_minus_time(d));
}

TEST_CASE("tier filtering and gating") {
    Bounds b;
    Catalog cat = small_catalog();
    SuiteReport ver = run_suite(cat, b, Tier::verified);
    for (const auto& p : ver.properties) CHECK(p.tier == Tier::verified);
    CHECK(ver.verified_clean);
    SuiteReport scr = run_suite(cat, b, Tier::scrutiny);
    for (const auto& p : scr.properties) CHECK(p.tier == Tier::scrutiny);
    CHECK(scr.verified_clean);  // scrutiny findings never gate
    long long scr_fails = 0;
    for (const auto& p : scr.properties) scr_fails += p.fails;
    CHECK(scr_fails > 0);  // the catalog of suspicious claims is not empty-handed
}

TEST_CASE("vacuous hypotheses never count as holds") {
    Bounds b;
    // a single prime-field module leaves comaximality-style hypotheses empty
    Catalog cat{{FiniteModule::coordinate(ZModRing(4), {4}, "Z_4"), "Z_4"}};
    PropertyResult pr = run_property("T-l3", cat, b);
    CHECK(pr.holds == 0);
    CHECK(pr.fails == 0);
}

TEST_CASE("module cap errors name the module") {
    Bounds b;
    b.module_cap = 8;
    try {
        run_suite(default_catalog(), b);
        FAIL("expected cap_exceeded");
    } catch (const cap_exceeded& e) {
        CHECK(std::string(e.what()).find("Z_") != std::string::npos);
    }
}

TEST_CASE("hunts") {
    auto t0 = hunt("converse-of-T-t0", 100);
    REQUIRE(t0.has_value());
    CHECK(t0->instance == "c=6, k=2, n=1");
    CHECK(t0->witness == "r=2, m=3");

    auto in = hunt("intersection-of-semi-n-not-semi-n", 100);
    REQUIRE(in.has_value());
    CHECK(in->instance.find("c=36, n=2") == 0);
    CHECK(in->witness == "r=2, m=9");

    auto sp = hunt("semiprime-not-21-closed", 100);
    REQUIRE(sp.has_value());
    CHECK(sp->instance == "c=6, k=2, n=1");

    CHECK(!hunt("monotonicity-violation", 40).has_value());
    CHECK(!hunt("converse-of-T-t0", 5).has_value());
    CHECK_THROWS_AS(hunt("made-up", 10), std::invalid_argument);
}

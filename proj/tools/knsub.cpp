// knsub: classify submodules of finite Z/mZ-modules, print (k,n)-closedness
// spectra, run the theorem suite over a module catalog, hunt counterexamples,
// and query the exact engine for submodules cZ of Z.
//
// Exit codes: 0 clean, 1 verified-tier counterexample, 2 usage error.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "knsub/io.hpp"

namespace {

using namespace knsub;
using nlohmann::ordered_json;

enum class Format { table, json, csv };

Format parse_format(const std::string& f) {
    if (f == "table") return Format::table;
    if (f == "json") return Format::json;
    if (f == "csv") return Format::csv;
    throw CLI::ValidationError("--format must be table, json or csv");
}

std::size_t module_cap_from_env() {
    const char* env = std::getenv("KNSUB_MAX_MODULE_SIZE");
    if (!env) return 4096;
    long long v = std::atoll(env);
    if (v < 1) return 4096;
    return static_cast<std::size_t>(v);
}

std::vector<long long> parse_factors(const std::string& text) {
    std::vector<long long> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(std::stoll(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::stoll(cur));
    return out;
}

long long parse_ring(const std::string& text) {
    if (text.rfind("zmod:", 0) != 0) throw std::invalid_argument("--ring must look like zmod:12");
    return std::stoll(text.substr(5));
}

std::vector<Index> parse_gens(const FiniteModule& M, const std::string& text) {
    std::vector<Index> gens;
    if (text.empty()) return gens;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) gens.push_back(M.parse_element(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == ';')
            flush();
        else
            cur += c;
    }
    flush();
    return gens;
}

const char* mark(bool b) { return b ? "✓" : "✗"; }

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_spectrum(long long m, const std::string& factors_text, const std::string& gens_text, int kmax,
                 Format format) {
    Timer timer;
    ModulePtr M = FiniteModule::coordinate(ZModRing(m), parse_factors(factors_text),
                                           "zmod:" + std::to_string(m) + " [" + factors_text + "]");
    Submodule N = Submodule::span(M, parse_gens(*M, gens_text));
    if (!N.is_proper()) throw std::invalid_argument("submodule not proper");
    Spectrum sp = spectrum(N, kmax);
    RingIdeal res = residual_ring(N);

    bool prime = is_prime_submodule(N).holds;
    bool semiprime = is_semiprime(N).holds;
    bool quasi = is_quasi_prime(N).holds;
    std::vector<std::pair<int, bool>> semi;
    for (int n = 1; n <= kmax; ++n) semi.emplace_back(n, sp.cell(n, n));

    if (format == Format::json) {
        ordered_json j;
        j["command"] = "spectrum";
        j["inputs"] = {{"ring", "zmod:" + std::to_string(m)},
                       {"factors", factors_text},
                       {"gens", gens_text},
                       {"kmax", kmax}};
        ordered_json grid = ordered_json::array();
        ordered_json witnesses = ordered_json::array();
        for (int k = 1; k <= kmax; ++k)
            for (int n = 1; n <= kmax; ++n) {
                Verdict v = is_kn_closed(N, k, n);
                ordered_json cell = {{"k", k}, {"n", n}, {"holds", v.holds}};
                cell["witness"] = verdict_json(v)["witness"];
                grid.push_back(cell);
                if (!v.holds) {
                    ordered_json w = verdict_json(v)["witness"];
                    w["k"] = k;
                    w["n"] = n;
                    witnesses.push_back(w);
                }
            }
        ordered_json summary;
        summary["residual"] = res.gen;
        summary["prime"] = prime;
        summary["semiprime"] = semiprime;
        summary["quasi_prime"] = quasi;
        ordered_json semij = ordered_json::array();
        for (auto [n, h] : semi) semij.push_back({{"n", n}, {"holds", h}});
        summary["semi_n_absorbing"] = semij;
        j["result"] = {{"submodule", N.gens_label()},
                       {"size", N.size()},
                       {"fingerprint", sp.fingerprint()},
                       {"grid", grid},
                       {"summary", summary}};
        j["witnesses"] = witnesses;
        j["timing"] = {{"ms", timer.ms()}};
        emit(j);
        return 0;
    }
    if (format == Format::csv) {
        std::cout << "k,n,holds,witness\n";
        for (int k = 1; k <= kmax; ++k)
            for (int n = 1; n <= kmax; ++n) {
                Verdict v = is_kn_closed(N, k, n);
                std::cout << k << "," << n << "," << (v.holds ? "true" : "false") << ",\""
                          << (v.holds ? "" : witness_str(v)) << "\"\n";
            }
        return 0;
    }
    std::cout << "(k,n)-closedness spectrum of N=<" << (N.gens_label().empty() ? "0" : N.gens_label())
              << "> in " << M->origin() << ", |N|=" << N.size() << ", (N:M)=(" << res.gen << ")\n";
    for (int k = 1; k <= kmax; ++k) {
        std::cout << "  k=" << k << ":";
        for (int n = 1; n <= kmax; ++n) {
            Verdict v = is_kn_closed(N, k, n);
            std::cout << "  n=" << n << " " << mark(v.holds);
            if (!v.holds) std::cout << "(" << witness_str(v) << ")";
        }
        std::cout << "\n";
    }
    std::cout << "summary: prime " << mark(prime) << "  semiprime " << mark(semiprime) << "  quasi-prime "
              << mark(quasi) << "\n";
    std::cout << "semi-n-absorbing:";
    for (auto [n, h] : semi) std::cout << "  n=" << n << " " << mark(h);
    std::cout << "\nfingerprint: " << sp.fingerprint() << "\n";
    return 0;
}

int run_classify(long long m, const std::string& factors_text, int kmax, int nabs_max, Format format) {
    Timer timer;
    ModulePtr M = FiniteModule::coordinate(ZModRing(m), parse_factors(factors_text),
                                           "zmod:" + std::to_string(m) + " [" + factors_text + "]");
    auto lattice = enumerate_submodules(M, module_cap_from_env());

    struct Row {
        std::string gens;
        std::size_t size;
        long long res;
        bool prime, semiprime, quasi, maximal;
        std::string secondary;
        std::vector<bool> nabs;
        std::string fingerprint;
    };
    std::vector<Row> rows;
    for (const Submodule& N : lattice) {
        if (!N.is_proper()) continue;
        Row r;
        r.gens = N.gens_label().empty() ? "0" : N.gens_label();
        r.size = N.size();
        r.res = residual_ring(N).gen;
        r.prime = is_prime_submodule(N).holds;
        r.semiprime = is_semiprime(N).holds;
        r.quasi = is_quasi_prime(N).holds;
        r.maximal = is_maximal_submodule(N, lattice);
        r.secondary = N.is_zero() ? "-" : (is_secondary(N).holds ? "✓" : "✗");
        for (int n = 1; n <= nabs_max; ++n) r.nabs.push_back(is_n_absorbing(N, n, nabs_max).holds);
        r.fingerprint = spectrum(N, kmax).fingerprint();
        rows.push_back(std::move(r));
    }

    if (format == Format::json) {
        ordered_json j;
        j["command"] = "classify";
        j["inputs"] = {{"ring", "zmod:" + std::to_string(m)},
                       {"factors", factors_text},
                       {"kmax", kmax},
                       {"nabs_max", nabs_max}};
        ordered_json arr = ordered_json::array();
        for (const Row& r : rows) {
            ordered_json rj;
            rj["gens"] = r.gens;
            rj["size"] = r.size;
            rj["residual"] = r.res;
            rj["prime"] = r.prime;
            rj["semiprime"] = r.semiprime;
            rj["quasi_prime"] = r.quasi;
            rj["maximal"] = r.maximal;
            rj["secondary"] = r.secondary;
            ordered_json na = ordered_json::array();
            for (std::size_t i = 0; i < r.nabs.size(); ++i)
                na.push_back({{"n", i + 1}, {"holds", static_cast<bool>(r.nabs[i])}});
            rj["n_absorbing"] = na;
            rj["fingerprint"] = r.fingerprint;
            arr.push_back(rj);
        }
        j["result"] = {{"module", M->origin()}, {"rows", arr}};
        j["witnesses"] = ordered_json::array();
        j["timing"] = {{"ms", timer.ms()}};
        emit(j);
        return 0;
    }
    if (format == Format::csv) {
        std::cout << "gens,size,residual,prime,semiprime,quasi_prime,maximal,secondary,fingerprint\n";
        for (const Row& r : rows)
            std::cout << "\"" << r.gens << "\"," << r.size << "," << r.res << "," << r.prime << ","
                      << r.semiprime << "," << r.quasi << "," << r.maximal << ",\"" << r.secondary << "\",\""
                      << r.fingerprint << "\"\n";
        return 0;
    }
    std::cout << "proper submodules of " << M->origin() << " (" << rows.size() << ")\n";
    for (const Row& r : rows) {
        std::cout << "  N=<" << r.gens << ">  |N|=" << r.size << "  (N:M)=(" << r.res << ")  prime "
                  << mark(r.prime) << "  semiprime " << mark(r.semiprime) << "  quasi-prime " << mark(r.quasi)
                  << "  maximal " << mark(r.maximal) << "  secondary " << r.secondary << "  n-absorbing";
        for (std::size_t i = 0; i < r.nabs.size(); ++i)
            std::cout << " n=" << (i + 1) << " " << mark(r.nabs[i]);
        std::cout << "  spectrum " << r.fingerprint << "\n";
    }
    return 0;
}

int run_verify(const std::string& catalog_path, int kmax, int nabs_max, const std::string& tier_text, int jobs,
               Format format) {
    Timer timer;
    harness::Catalog cat =
        catalog_path.empty() ? harness::default_catalog() : harness::load_catalog_file(catalog_path);
    std::optional<harness::Tier> tier;
    if (tier_text == "verified")
        tier = harness::Tier::verified;
    else if (tier_text == "scrutiny")
        tier = harness::Tier::scrutiny;
    else if (tier_text != "all")
        throw std::invalid_argument("--tier must be verified, scrutiny or all");
    harness::Bounds bounds{kmax, nabs_max, module_cap_from_env()};
    harness::SuiteReport rep = harness::run_suite(cat, bounds, tier, jobs);

    if (format == Format::json) {
        ordered_json j;
        j["command"] = "verify";
        j["inputs"] = {{"catalog", catalog_path.empty() ? "<default>" : catalog_path},
                       {"kmax", kmax},
                       {"nabs_max", nabs_max},
                       {"tier", tier_text},
                       {"jobs", jobs}};
        j["result"] = harness::report_json(rep);
        ordered_json witnesses = ordered_json::array();
        for (const auto& p : rep.properties)
            for (const auto& f : p.findings)
                witnesses.push_back({{"property", p.name}, {"instance", f.instance}, {"witness", f.witness}});
        j["witnesses"] = witnesses;
        j["timing"] = {{"ms", timer.ms()}};
        emit(j);
    } else if (format == Format::csv) {
        std::cout << "property,tier,holds,fails,vacuous\n";
        for (const auto& p : rep.properties)
            std::cout << p.name << "," << harness::tier_name(p.tier) << "," << p.holds << "," << p.fails << ","
                      << p.vacuous << "\n";
    } else {
        std::cout << "catalog: " << cat.size() << " modules, fingerprint " << rep.catalog_fingerprint
                  << ", Kmax=" << kmax << ", n-absorbing cap " << nabs_max << "\n";
        for (const auto& p : rep.properties) {
            std::cout << "  [" << harness::tier_name(p.tier) << "] " << p.name << ": holds " << p.holds
                      << ", fails " << p.fails << ", vacuous " << p.vacuous;
            if (p.whitelisted) std::cout << " (vacuity-whitelisted)";
            std::cout << "\n";
            for (const auto& f : p.findings)
                std::cout << "      ✗ " << f.instance << "  [" << f.witness << "]\n";
            if (p.findings_total > static_cast<long long>(p.findings.size()))
                std::cout << "      ... " << (p.findings_total - p.findings.size()) << " more\n";
        }
        std::cout << "verified tier " << (rep.verified_clean ? "clean" : "has counterexamples")
                  << "; vacuity audit " << (rep.vacuity_ok ? "passed" : "FAILED") << "; " << rep.wall_ms
                  << " ms\n";
    }
    bool gate = tier_text != "scrutiny";
    return gate && !rep.verified_clean ? 1 : 0;
}

int run_hunt(const std::string& property, long long bound, Format format) {
    Timer timer;
    auto hit = harness::hunt(property, bound);
    if (format == Format::json) {
        ordered_json j;
        j["command"] = "hunt";
        j["inputs"] = {{"property", property}, {"bound", bound}};
        j["result"] = {{"found", hit.has_value()},
                       {"instance", hit ? hit->instance : ""},
                       {"witness", hit ? hit->witness : ""}};
        j["witnesses"] = ordered_json::array();
        if (hit) j["witnesses"].push_back({{"instance", hit->instance}, {"witness", hit->witness}});
        j["timing"] = {{"ms", timer.ms()}};
        emit(j);
    } else if (hit) {
        std::cout << property << ": counterexample at " << hit->instance << "  [" << hit->witness << "]\n";
    } else {
        std::cout << property << ": none within bound " << bound << "\n";
    }
    return 0;
}

int run_zint(long long c, int k, int n, const std::string& predicate, Format format) {
    Timer timer;
    if (c < 2) throw std::invalid_argument("--c must be >= 2");
    ordered_json result, witnesses = ordered_json::array();
    std::string human;
    if (predicate == "kn-closed" || predicate == "semi-n") {
        ZintVerdict v = predicate == "semi-n" ? zint_is_semi_n_absorbing(c, n) : zint_is_kn_closed(c, k, n);
        result = {{"holds", v.holds}};
        if (!v.holds) {
            witnesses.push_back({{"r", v.r}, {"m", v.m}});
            human = std::string(mark(false)) + "  r=" + std::to_string(v.r) + ", m=" + std::to_string(v.m);
        } else {
            human = mark(true);
        }
    } else if (predicate == "ideal-kn") {
        ZintIdealVerdict v = zint_ideal_is_kn_closed(c, k, n);
        result = {{"holds", v.holds}};
        if (!v.holds) {
            witnesses.push_back({{"x", v.x}});
            human = std::string(mark(false)) + "  x=" + std::to_string(v.x);
        } else {
            human = mark(true);
        }
    } else if (predicate == "tkn-condition") {
        FactoredNat f = factorize(c);
        if (f.factors.size() != 1)
            throw std::invalid_argument("tkn-condition expects --c to be a prime power p^t");
        long long t = f.factors[0].second;
        bool part1 = tkn_condition(t, k, n);
        bool part2 = tkn_membership(t, k, n);
        result = {{"holds", part1 && part2}, {"t", t}, {"decomposition", part1}, {"membership", part2}};
        human = std::string(mark(part1 && part2)) + "  t=" + std::to_string(t) +
                " decomposition=" + mark(part1) + " membership=" + mark(part2);
    } else {
        throw std::invalid_argument("--predicate must be kn-closed, semi-n, ideal-kn or tkn-condition");
    }
    if (format == Format::json) {
        ordered_json j;
        j["command"] = "zint";
        j["inputs"] = {{"c", c}, {"k", k}, {"n", n}, {"predicate", predicate}};
        j["result"] = result;
        j["witnesses"] = witnesses;
        j["timing"] = {{"ms", timer.ms()}};
        emit(j);
    } else {
        std::cout << predicate << " on " << c << "Z (k=" << k << ", n=" << n << "): " << human << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"knsub: closedness predicates over finite Z/mZ-modules and cZ in Z"};
    app.require_subcommand(1);

    std::string ring_text = "zmod:12", factors_text = "12", gens_text, format_text = "table";
    std::string catalog_path, tier_text = "all", property_name, predicate = "kn-closed";
    int kmax = 4, nabs_max = 3, jobs = 1, zk = 2, zn = 2;
    long long bound = 2000, zc = 2;

    auto* sp = app.add_subcommand("spectrum", "print the (k,n)-closedness grid of one submodule");
    sp->add_option("--ring", ring_text, "coefficient ring, zmod:m");
    sp->add_option("--factors", factors_text, "cyclic orders d1,d2,... (each dividing m)");
    sp->add_option("--gens", gens_text, "generators, ';'-separated elements of ','-separated coordinates");
    sp->add_option("--kmax", kmax, "grid bound");
    sp->add_option("--format", format_text, "table|json|csv");

    auto* cl = app.add_subcommand("classify", "one row per proper submodule of a module");
    cl->add_option("--ring", ring_text, "coefficient ring, zmod:m");
    cl->add_option("--factors", factors_text, "cyclic orders d1,d2,...");
    cl->add_option("--kmax", kmax, "spectrum bound");
    cl->add_option("--nabs-max", nabs_max, "n-absorbing cap");
    cl->add_option("--format", format_text, "table|json|csv");

    auto* ve = app.add_subcommand("verify", "run the theorem suite over a module catalog");
    ve->add_option("--catalog", catalog_path, "catalog JSON file (default: built-in catalog)");
    ve->add_option("--kmax", kmax, "grid bound");
    ve->add_option("--nabs-max", nabs_max, "n-absorbing cap");
    ve->add_option("--tier", tier_text, "verified|scrutiny|all");
    ve->add_option("--jobs", jobs, "parallel workers");
    ve->add_option("--format", format_text, "table|json|csv");

    auto* hu = app.add_subcommand("hunt", "search for the smallest counterexample to a named claim");
    hu->add_option("--property", property_name, "property name")->required();
    hu->add_option("--bound", bound, "search bound");
    hu->add_option("--format", format_text, "table|json|csv");

    auto* zi = app.add_subcommand("zint", "query the exact engine for cZ inside the Z-module Z");
    zi->add_option("--c", zc, "submodule generator c (>= 2)")->required();
    zi->add_option("--k", zk, "k");
    zi->add_option("--n", zn, "n");
    zi->add_option("--predicate", predicate, "kn-closed|semi-n|ideal-kn|tkn-condition");
    zi->add_option("--format", format_text, "table|json|csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Format format = parse_format(format_text);
        if (sp->parsed()) return run_spectrum(parse_ring(ring_text), factors_text, gens_text, kmax, format);
        if (cl->parsed()) return run_classify(parse_ring(ring_text), factors_text, kmax, nabs_max, format);
        if (ve->parsed()) return run_verify(catalog_path, kmax, nabs_max, tier_text, jobs, format);
        if (hu->parsed()) return run_hunt(property_name, bound, format);
        if (zi->parsed()) return run_zint(zc, zk, zn, predicate, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

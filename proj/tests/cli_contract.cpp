// Exercises the knsub binary end to end: exit-code contract (0 clean,
// 1 verified-tier counterexample, 2 usage), output formats, catalog loading.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

namespace {

std::string bin;
int failures = 0;

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = bin + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {127, ""};
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : 99, out};
}

void check(bool ok, const std::string& what) {
    std::cout << (ok ? "  ok: " : "  FAILED: ") << what << "\n";
    if (!ok) ++failures;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_contract <path-to-knsub>\n";
        return 2;
    }
    bin = argv[1];

    {
        Run r = run("spectrum --ring zmod:8 --factors 8 --gens \"\" --kmax 4 --format json");
        check(r.code == 0, "spectrum exits 0");
        auto j = nlohmann::json::parse(r.out);
        for (const char* key : {"command", "inputs", "result", "witnesses", "timing"})
            check(j.contains(key), std::string("spectrum json has '") + key + "'");
        bool c33 = false, c32 = true;
        for (const auto& cell : j["result"]["grid"]) {
            if (cell["k"] == 3 && cell["n"] == 3) c33 = cell["holds"];
            if (cell["k"] == 3 && cell["n"] == 2) c32 = cell["holds"];
        }
        check(c33 && !c32, "spectrum grid pins (3,3)=true, (3,2)=false for the zero submodule of Z_8");
        check(!j["witnesses"].empty(), "failing cells report witnesses");
    }
    {
        Run r = run("spectrum --ring zmod:8 --factors 8 --gens 1 --kmax 3");
        check(r.code == 2, "spectrum on an improper submodule exits 2");
    }
    {
        Run r = run("spectrum --ring zmod:36 --factors 36 --gens 12 --kmax 3 --format json");
        check(r.code == 0, "spectrum on (12) in Z_36 exits 0");
        auto j = nlohmann::json::parse(r.out);
        bool c22 = true;
        for (const auto& cell : j["result"]["grid"])
            if (cell["k"] == 2 && cell["n"] == 2) c22 = cell["holds"];
        check(!c22, "(12) in Z_36 is not (2,2)-closed");
    }
    {
        Run r = run("classify --ring zmod:12 --factors 12 --format json");
        check(r.code == 0, "classify exits 0");
        auto j = nlohmann::json::parse(r.out);
        check(j["result"]["rows"].size() == 5, "Z_12 has 5 proper submodules");
    }
    {
        Run r = run("classify --ring zmod:12 --factors 12 --format csv");
        check(r.code == 0 && r.out.rfind("gens,", 0) == 0, "classify csv has a header row");
    }
    {
        Run r = run("verify --kmax 2 --nabs-max 2 --tier verified");
        check(r.code == 0, "verify --tier verified exits 0 on the default catalog");
    }
    {
        Run r = run("verify --kmax 2 --nabs-max 2 --tier scrutiny --format json");
        check(r.code == 0, "verify --tier scrutiny exits 0 (findings never gate)");
        auto j = nlohmann::json::parse(r.out);
        long long fails = 0;
        for (const auto& p : j["result"]["properties"]) fails = fails + p["fails"].get<long long>();
        check(fails > 0, "scrutiny report lists findings");
    }
    {
        Run r = run("verify --catalog data/default_catalog.json --kmax 2 --nabs-max 2 --tier verified");
        check(r.code == 0, "verify loads the shipped catalog file");
    }
    {
        Run r = run("verify --catalog no-such-file.json");
        check(r.code == 2, "verify with a missing catalog exits 2");
    }
    {
        std::ofstream bad("/tmp/knsub_bad_catalog.json");
        bad << "[{\"ring\": {\"zmod\": 12}, \"factors\": [8]}]";
        bad.close();
        Run r = run("verify --catalog /tmp/knsub_bad_catalog.json");
        check(r.code == 2, "verify with a malformed catalog exits 2");
    }
    {
        Run r = run("hunt --property converse-of-T-t0 --bound 100 --format json");
        check(r.code == 0, "hunt exits 0");
        auto j = nlohmann::json::parse(r.out);
        check(j["result"]["found"] == true && j["result"]["instance"] == "c=6, k=2, n=1",
              "hunt finds c=6 for the residual-transfer converse");
    }
    {
        Run r = run("hunt --property intersection-of-semi-n-not-semi-n --bound 100");
        check(r.code == 0 && r.out.find("c=36, n=2") != std::string::npos,
              "hunt finds c=36, n=2 for the semi-n intersection");
    }
    {
        Run r = run("hunt --property no-such-property --bound 10");
        check(r.code == 2, "hunt with an unknown property exits 2");
    }
    {
        Run r = run("zint --c 30 --k 2 --n 2 --predicate semi-n --format json");
        check(r.code == 0, "zint exits 0");
        auto j = nlohmann::json::parse(r.out);
        check(j["result"]["holds"] == true, "30Z is semi 2-absorbing");
    }
    {
        Run r = run("zint --c 8 --k 2 --n 2 --predicate kn-closed --format json");
        auto j = nlohmann::json::parse(r.out);
        check(j["result"]["holds"] == false && j["witnesses"][0]["r"] == 2 && j["witnesses"][0]["m"] == 2,
              "8Z fails (2,2)-closedness with witness r=2, m=2");
    }
    {
        Run r = run("zint --c 6 --k 2 --n 1 --predicate ideal-kn --format json");
        auto j = nlohmann::json::parse(r.out);
        check(j["result"]["holds"] == true, "6Z is a (2,1)-closed ideal");
    }
    {
        Run r = run("zint --c 1 --k 2 --n 2");
        check(r.code == 2, "zint with c < 2 exits 2");
    }
    {
        Run r = run("zint --c 9 --k 3 --n 2 --predicate tkn-condition --format json");
        check(r.code == 0, "zint tkn-condition on a prime power exits 0");
        auto j = nlohmann::json::parse(r.out);
        check(j["result"]["t"] == 2, "tkn-condition reports t");
    }
    {
        Run r = run("zint --c 12 --k 2 --n 2 --predicate tkn-condition");
        check(r.code == 2, "tkn-condition on a non-prime-power exits 2");
    }
    {
        Run r = run("verify --kmax 2 --nabs-max 2 --tier verified --jobs 4");
        check(r.code == 0, "verify honors --jobs");
    }
    {
        std::string saved = bin;
        bin = "KNSUB_MAX_MODULE_SIZE=4 " + bin;
        Run r = run("classify --ring zmod:12 --factors 12");
        bin = saved;
        check(r.code == 2, "KNSUB_MAX_MODULE_SIZE caps the element count");
    }
    {
        Run r = run("nonsense-subcommand");
        check(r.code == 2, "unknown subcommand exits 2");
    }

    std::cout << (failures == 0 ? "cli contract: all checks passed\n"
                                : "cli contract: " + std::to_string(failures) + " checks FAILED\n");
    return failures == 0 ? 0 : 1;
}

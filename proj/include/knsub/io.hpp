#pragma once

// JSON surfaces: catalog files, verdict serialization, suite reports.

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "knsub/harness.hpp"

namespace knsub {

using ordered_json = nlohmann::ordered_json;

inline ordered_json verdict_json(const Verdict& v) {
    ordered_json j;
    j["holds"] = v.holds;
    if (v.holds) {
        j["witness"] = nullptr;
    } else {
        ordered_json w = ordered_json::object();
        for (const auto& item : v.witness) {
            if (std::holds_alternative<long long>(item.value))
                w[item.key] = std::get<long long>(item.value);
            else
                w[item.key] = std::get<std::string>(item.value);
        }
        j["witness"] = w;
    }
    return j;
}

namespace harness {

struct catalog_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Catalog schema: [{"ring": {"zmod": m}, "factors": [d1, ...], "origin": "text"}, ...]
inline Catalog parse_catalog_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw catalog_error(std::string("catalog: invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw catalog_error("catalog: top level must be an array");
    Catalog cat;
    for (const auto& entry : doc) {
        if (!entry.is_object() || !entry.contains("ring") || !entry["ring"].contains("zmod") ||
            !entry.contains("factors"))
            throw catalog_error("catalog: each entry needs ring.zmod and factors");
        long long m = entry["ring"]["zmod"].get<long long>();
        std::vector<long long> factors;
        for (const auto& f : entry["factors"]) factors.push_back(f.get<long long>());
        std::string origin = entry.value("origin", "Z_" + std::to_string(m));
        try {
            cat.push_back({FiniteModule::coordinate(ZModRing(m), factors, origin), origin});
        } catch (const std::exception& e) {
            throw catalog_error(std::string("catalog: bad module: ") + e.what());
        }
    }
    return cat;
}

inline Catalog load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw catalog_error("catalog: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_catalog_json(ss.str());
}

inline ordered_json catalog_json(const Catalog& cat) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : cat) {
        ordered_json j;
        j["ring"] = {{"zmod", e.module->ring().modulus}};
        j["factors"] = e.module->orders();
        j["origin"] = e.origin;
        arr.push_back(j);
    }
    return arr;
}

inline const char* tier_name(Tier t) { return t == Tier::verified ? "verified" : "scrutiny"; }

inline ordered_json report_json(const SuiteReport& rep) {
    ordered_json j;
    j["bounds"] = {{"kmax", rep.bounds.kmax},
                   {"nabs_max", rep.bounds.nabs_max},
                   {"module_cap", rep.bounds.module_cap}};
    j["catalog_fingerprint"] = rep.catalog_fingerprint;
    j["verified_clean"] = rep.verified_clean;
    j["vacuity_ok"] = rep.vacuity_ok;
    j["vacuity_violations"] = rep.vacuity_violations;
    j["wall_ms"] = rep.wall_ms;
    ordered_json props = ordered_json::array();
    for (const auto& p : rep.properties) {
        ordered_json pj;
        pj["name"] = p.name;
        pj["tier"] = tier_name(p.tier);
        pj["note"] = p.note;
        pj["holds"] = p.holds;
        pj["fails"] = p.fails;
        pj["vacuous"] = p.vacuous;
        pj["whitelisted"] = p.whitelisted;
        if (!p.annotation.empty()) pj["annotation"] = p.annotation;
        ordered_json fs = ordered_json::array();
        for (const auto& f : p.findings) fs.push_back({{"instance", f.instance}, {"witness", f.witness}});
        pj["findings"] = fs;
        pj["findings_total"] = p.findings_total;
        props.push_back(pj);
    }
    j["properties"] = props;
    return j;
}

}  // namespace harness
}  // namespace knsub

#pragma once

// JSON form of a ChainReport:
//
// {
//   "verdict": bool, "rho": int, "p_infinity": int,
//   "steps": [ { "p": int, "generators": [string], "dim": int,
//                "trivial": bool } ],
//   "autonomized": bool, "n_aut": int
// }

#include <string>
#include <vector>

#include <json.hpp>

#include "pfaff/pfaffian.hpp"

namespace pfaff {

struct ChainStepData {
    int p = 0;
    std::vector<std::string> generators;
    int dim = 0;
    bool trivial = false;
};

struct ChainReportData {
    bool verdict = false;
    int rho = 0;
    int p_infinity = 0;
    std::vector<ChainStepData> steps;
    bool autonomized = false;
    int n_aut = 0;

    bool operator==(const ChainReportData& o) const = default;
};

inline bool operator==(const ChainStepData& a, const ChainStepData& b) {
    return a.p == b.p && a.generators == b.generators && a.dim == b.dim &&
           a.trivial == b.trivial;
}

inline nlohmann::json chain_report_to_json(const ChainReport& report) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : report.steps) {
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& g : s.generators)
            gens.push_back(g.to_string());
        steps.push_back({{"p", s.p}, {"generators", gens}, {"dim", s.dim},
                         {"trivial", s.trivial}});
    }
    return nlohmann::json{{"verdict", report.integrable},
                          {"rho", report.rho},
                          {"p_infinity", report.p_infinity},
                          {"steps", steps},
                          {"autonomized", report.autonomized},
                          {"n_aut", static_cast<int>(report.n_aut)}};
}

inline ChainReportData chain_report_from_json(const nlohmann::json& j) {
    ChainReportData d;
    d.verdict = j.at("verdict").get<bool>();
    d.rho = j.at("rho").get<int>();
    d.p_infinity = j.at("p_infinity").get<int>();
    d.autonomized = j.at("autonomized").get<bool>();
    d.n_aut = j.at("n_aut").get<int>();
    for (const auto& s : j.at("steps")) {
        ChainStepData step;
        step.p = s.at("p").get<int>();
        step.dim = s.at("dim").get<int>();
        step.trivial = s.at("trivial").get<bool>();
        for (const auto& g : s.at("generators"))
            step.generators.push_back(g.get<std::string>());
        d.steps.push_back(std::move(step));
    }
    return d;
}

} // namespace pfaff

#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace pslab {

// Outcome of one empirical bound check.  `envelope` is the claimed bound
// shape evaluated on the sample, `measured` the directly computed quantity,
// and fitted_constant their ratio: the empirical stand-in for the bound's
// unspecified constant.  `pass` compares against the configured slack.
struct lemma_check_report {
    std::string lemma_id;
    std::vector<std::pair<std::string, double>> params;   // insertion-ordered
    double measured = 0;
    double envelope = 0;
    double fitted_constant = 0;
    bool pass = false;
};

inline lemma_check_report make_report(std::string id,
                                      std::vector<std::pair<std::string, double>> params,
                                      double measured, double envelope, double slack) {
    lemma_check_report r;
    r.lemma_id = std::move(id);
    r.params = std::move(params);
    r.measured = measured;
    r.envelope = envelope;
    r.fitted_constant = envelope > 0 ? measured / envelope : (measured == 0 ? 0 : HUGE_VAL);
    r.pass = measured <= slack * envelope;
    return r;
}

inline nlohmann::ordered_json to_json(const lemma_check_report& r) {
    nlohmann::ordered_json j;
    j["lemma_id"] = r.lemma_id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    j["measured"] = r.measured;
    j["envelope"] = r.envelope;
    j["fitted_constant"] = r.fitted_constant;
    j["pass"] = r.pass;
    return j;
}

inline nlohmann::ordered_json to_json(const std::vector<lemma_check_report>& rs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) arr.push_back(to_json(r));
    return arr;
}

}  // namespace pslab

#include "srblab/report.hpp"

namespace srblab {

const char* condition_name(CheckCondition c) {
    switch (c) {
        case CheckCondition::SH7: return "SH7";
        case CheckCondition::L3: return "L3";
        case CheckCondition::THM41B: return "THM41B";
        case CheckCondition::CONES: return "CONES";
    }
    return "unknown";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

nlohmann::json report_to_json(const CheckReport& r) {
    nlohmann::json j;
    j["condition"] = condition_name(r.condition);
    j["verdict"] = verdict_name(r.verdict);
    j["k_used"] = r.k_used;
    j["lambda_used"] = r.lambda_used;
    j["lambda_definition"] = r.lambda_definition;
    nlohmann::json ws = nlohmann::json::array();
    for (const Witness& w : r.witnesses) {
        ws.push_back({{"j", w.j}, {"x", w.point.x}, {"y", w.point.y}, {"distance", w.distance}});
    }
    j["witnesses"] = ws;
    j["margins"] = r.margins;
    j["notes"] = r.notes;
    return j;
}

} // namespace srblab

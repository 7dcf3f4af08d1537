#ifndef SRBLAB_REPORT_HPP
#define SRBLAB_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "srblab/geometry.hpp"

namespace srblab {

enum class CheckCondition { SH7, L3, THM41B, CONES };
enum class Verdict { Pass, Fail, Inconclusive };

const char* condition_name(CheckCondition c);
const char* verdict_name(Verdict v);

/// A point witnessing a failure: the transport step j (or sample index
/// context), the location, and its distance to the singular set.
struct Witness {
    int j = 0;
    Point2 point{};
    double distance = 0.0;
};

/// Verdict plus quantitative evidence for one checked condition.
struct CheckReport {
    CheckCondition condition = CheckCondition::CONES;
    Verdict verdict = Verdict::Inconclusive;
    int k_used = 0;                    // separation horizon (SH7)
    double lambda_used = 0.0;          // expansion constant (SH7)
    std::string lambda_definition;     // which definition produced lambda_used
    std::vector<Witness> witnesses;
    std::map<std::string, double> margins;  // named inequality slacks / diagnostics
    std::string notes;

    bool passed() const { return verdict == Verdict::Pass; }
};

nlohmann::json report_to_json(const CheckReport& r);

} // namespace srblab

#endif

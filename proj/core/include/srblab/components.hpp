#ifndef SRBLAB_COMPONENTS_HPP
#define SRBLAB_COMPONENTS_HPP

#include <optional>
#include <span>

#include <json.hpp>

#include "srblab/fingerprint.hpp"

namespace srblab {

/// Result of clustering Birkhoff fingerprints into empirical ergodic
/// components.
struct ComponentReport {
    int cluster_count = 0;
    std::vector<int> cluster_sizes;       // descending
    double max_intra_distance = 0.0;
    double min_inter_distance = 0.0;      // +inf with a single cluster
    double threshold_used = 0.0;
    bool well_separated = false;          // min_inter / max_intra >= 3
    std::vector<int> labels;              // cluster id per fingerprint, by first occurrence
};

/// Single-linkage clustering of fingerprints under the max-norm distance.
/// With no explicit threshold the value 10 x (median nearest-neighbor
/// distance) is used, and the separation diagnostic (well_separated)
/// reports whether min_inter / max_intra >= 3.
ComponentReport count_components(std::span<const Fingerprint> fingerprints,
                                 std::optional<double> threshold = std::nullopt);

nlohmann::json component_report_to_json(const ComponentReport& r);

} // namespace srblab

#endif

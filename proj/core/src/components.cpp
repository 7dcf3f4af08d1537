#include "srblab/components.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace srblab {

namespace {

double max_norm_distance(const Fingerprint& a, const Fingerprint& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        d = std::max(d, std::fabs(a.values[i] - b.values[i]));
    }
    return d;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

ComponentReport count_components(std::span<const Fingerprint> fingerprints,
                                 std::optional<double> threshold) {
    if (fingerprints.empty()) {
        throw EmptyInputError("count_components: no fingerprints");
    }
    const std::size_t n = fingerprints.size();
    for (const Fingerprint& fp : fingerprints) {
        if (!fp.usable) {
            throw DomainError("count_components: unusable fingerprint present");
        }
        if (fp.basis_id != fingerprints[0].basis_id ||
            fp.values.size() != fingerprints[0].values.size()) {
            throw DomainError("count_components: fingerprints disagree on basis");
        }
        if (fp.n_steps != fingerprints[0].n_steps) {
            throw DomainError("count_components: fingerprints disagree on n_steps");
        }
    }

    // Pairwise max-norm distances.
    std::vector<double> dist(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = max_norm_distance(fingerprints[i], fingerprints[j]);
            dist[i * n + j] = d;
            dist[j * n + i] = d;
        }
    }

    double thr = 0.0;
    if (threshold) {
        thr = *threshold;
    } else if (n >= 2) {
        std::vector<double> nn(n, std::numeric_limits<double>::infinity());
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) nn[i] = std::min(nn[i], dist[i * n + j]);
            }
        }
        std::vector<double> sorted = nn;
        std::sort(sorted.begin(), sorted.end());
        const double median = n % 2 == 1
                                  ? sorted[n / 2]
                                  : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
        thr = 10.0 * median;
    }

    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dist[i * n + j] <= thr) uf.unite(static_cast<int>(i), static_cast<int>(j));
        }
    }

    ComponentReport rep;
    rep.threshold_used = thr;
    rep.labels.assign(n, -1);
    std::vector<int> root_to_label;
    std::vector<int> roots;
    for (std::size_t i = 0; i < n; ++i) {
        const int r = uf.find(static_cast<int>(i));
        auto it = std::find(roots.begin(), roots.end(), r);
        int label;
        if (it == roots.end()) {
            label = static_cast<int>(roots.size());
            roots.push_back(r);
        } else {
            label = static_cast<int>(it - roots.begin());
        }
        rep.labels[i] = label;
    }
    rep.cluster_count = static_cast<int>(roots.size());
    rep.cluster_sizes.assign(roots.size(), 0);
    for (int l : rep.labels) rep.cluster_sizes[static_cast<std::size_t>(l)] += 1;
    std::sort(rep.cluster_sizes.begin(), rep.cluster_sizes.end(), std::greater<>());

    rep.max_intra_distance = 0.0;
    rep.min_inter_distance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = dist[i * n + j];
            if (rep.labels[i] == rep.labels[j]) {
                rep.max_intra_distance = std::max(rep.max_intra_distance, d);
            } else {
                rep.min_inter_distance = std::min(rep.min_inter_distance, d);
            }
        }
    }
    if (rep.cluster_count <= 1) {
        rep.well_separated = true;
    } else if (rep.max_intra_distance == 0.0) {
        rep.well_separated = rep.min_inter_distance > 0.0;
    } else {
        rep.well_separated = rep.min_inter_distance / rep.max_intra_distance >= 3.0;
    }
    return rep;
}

nlohmann::json component_report_to_json(const ComponentReport& r) {
    nlohmann::json j;
    j["cluster_count"] = r.cluster_count;
    j["cluster_sizes"] = r.cluster_sizes;
    j["max_intra_distance"] = r.max_intra_distance;
    j["min_inter_distance"] =
        std::isfinite(r.min_inter_distance) ? nlohmann::json(r.min_inter_distance)
                                            : nlohmann::json(nullptr);
    j["threshold_used"] = r.threshold_used;
    j["well_separated"] = r.well_separated;
    j["labels"] = r.labels;
    return j;
}

} // namespace srblab

#include "clustval/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace clustval {

CalibrationMode calibration_mode_from_string(const std::string& name) {
    if (name == "per-k") return CalibrationMode::PerK;
    if (name == "pooled") return CalibrationMode::Pooled;
    if (name == "rank") return CalibrationMode::Rank;
    if (name == "none") return CalibrationMode::None;
    throw MalformedInput("unknown calibration mode '" + name +
                         "' (valid: per-k, pooled, rank, none)");
}

std::string to_string(CalibrationMode m) {
    switch (m) {
        case CalibrationMode::PerK: return "per-k";
        case CalibrationMode::Pooled: return "pooled";
        case CalibrationMode::Rank: return "rank";
        case CalibrationMode::None: return "none";
    }
    return "?";
}

namespace {

CalibratedProfile zscore_calibrate(const IndexProfile& profile,
                                   const RandomClusteringCollection& collection,
                                   std::size_t pool_k, CalibrationMode mode) {
    CalibratedProfile out;
    out.mode = mode;
    for (const auto& [id, value] : profile.values) {
        const std::vector<double> pool = collection.pool_values(id, pool_k);
        if (pool.size() < 2) {
            out.failures.emplace(id, "fewer than 2 usable random values in pool");
            continue;
        }
        const double mean = std::accumulate(pool.begin(), pool.end(), 0.0) /
                            static_cast<double>(pool.size());
        double ss = 0.0;
        for (double v : pool) ss += (v - mean) * (v - mean);
        const double sd = std::sqrt(ss / static_cast<double>(pool.size() - 1));
        // a pool of identical values can still yield sd ~ 1e-16 through the
        // rounding of the mean, so compare against the magnitude of the data
        double scale = std::fabs(mean);
        for (double v : pool) scale = std::max(scale, std::fabs(v));
        if (sd <= 1e-12 * std::max(1.0, scale)) {
            out.failures.emplace(id, "random pool has zero spread");
            continue;
        }
        out.values.emplace(id, (value.normalised - mean) / sd);
    }
    return out;
}

} // namespace

CalibratedProfile calibrate_per_k(const IndexProfile& profile,
                                  const RandomClusteringCollection& collection) {
    const std::size_t k = profile.num_clusters;
    bool found = false;
    for (const auto& e : collection.entries)
        if (e.k == k) { found = true; break; }
    if (!found)
        throw KNotInCollection("collection holds no random clusterings with K=" +
                               std::to_string(k));
    return zscore_calibrate(profile, collection, k, CalibrationMode::PerK);
}

CalibratedProfile calibrate_pooled(const IndexProfile& profile,
                                   const RandomClusteringCollection& collection) {
    return zscore_calibrate(profile, collection, 0, CalibrationMode::Pooled);
}

std::vector<CalibratedProfile> calibrate_rank(const std::vector<IndexProfile>& candidates,
                                              const RandomClusteringCollection& collection) {
    std::vector<CalibratedProfile> out(candidates.size());
    for (auto& c : out) c.mode = CalibrationMode::Rank;

    // per index: pool = random clusterings plus every candidate holding it
    std::vector<std::string> ids;
    for (const auto& cand : candidates)
        for (const auto& [id, v] : cand.values)
            if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);

    for (const auto& id : ids) {
        std::vector<double> pool = collection.pool_values(id);
        std::vector<std::pair<std::size_t, double>> cand_vals; // candidate idx, value
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            auto it = candidates[i].values.find(id);
            if (it != candidates[i].values.end()) cand_vals.emplace_back(i, it->second.normalised);
        }
        const std::size_t m = pool.size() + cand_vals.size();
        if (m < 2) {
            for (auto& [i, v] : cand_vals)
                out[i].failures.emplace(id, "rank pool has fewer than 2 members");
            continue;
        }
        std::vector<double> all = pool;
        for (auto& [i, v] : cand_vals) all.push_back(v);
        std::sort(all.begin(), all.end());
        for (auto& [i, v] : cand_vals) {
            // averaged rank of v among all m values (ascending, 1-based)
            const auto lo = std::lower_bound(all.begin(), all.end(), v) - all.begin();
            const auto hi = std::upper_bound(all.begin(), all.end(), v) - all.begin();
            const double avg_rank = (static_cast<double>(lo) + 1.0 + static_cast<double>(hi)) / 2.0;
            out[i].values.emplace(id, (avg_rank - 1.0) / static_cast<double>(m - 1));
        }
    }
    return out;
}

void AggregationSpec::validate() const {
    if (index_ids.empty()) throw MalformedInput("aggregation needs at least one index");
    if (index_ids.size() != weights.size())
        throw MalformedInput("aggregation index/weight counts differ");
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (!(weights[i] > 0.0))
            throw BadWeight("weight for '" + index_ids[i] + "' must be > 0");
}

AggregationSpec AggregationSpec::normalised() const {
    validate();
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    AggregationSpec out = *this;
    for (double& w : out.weights) w /= total;
    return out;
}

double aggregate(const CalibratedProfile& calibrated, const AggregationSpec& spec) {
    spec.validate();
    double acc = 0.0;
    for (std::size_t i = 0; i < spec.index_ids.size(); ++i) {
        auto it = calibrated.values.find(spec.index_ids[i]);
        if (it == calibrated.values.end())
            throw MissingIndex("index '" + spec.index_ids[i] +
                               "' missing from calibrated profile");
        acc += spec.weights[i] * it->second;
    }
    return acc;
}

} // namespace clustval

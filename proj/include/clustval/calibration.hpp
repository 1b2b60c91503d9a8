#ifndef CLUSTVAL_CALIBRATION_HPP
#define CLUSTVAL_CALIBRATION_HPP

#include <map>
#include <string>
#include <vector>

#include "clustval/indexes.hpp"
#include "clustval/random_clusterings.hpp"

namespace clustval {

enum class CalibrationMode { PerK, Pooled, Rank, None };

CalibrationMode calibration_mode_from_string(const std::string& name);
std::string to_string(CalibrationMode m);

// Calibrated index values for one clustering. Degenerate pools are reported
// per index instead of producing infinities.
struct CalibratedProfile {
    CalibrationMode mode = CalibrationMode::PerK;
    std::map<std::string, double> values;
    std::map<std::string, std::string> failures; // index_id -> reason
};

// z-score against the random clusterings with the same K.
CalibratedProfile calibrate_per_k(const IndexProfile& profile,
                                  const RandomClusteringCollection& collection);

// z-score against all random clusterings in the collection.
CalibratedProfile calibrate_pooled(const IndexProfile& profile,
                                   const RandomClusteringCollection& collection);

// Rank of each candidate within (random pool plus all candidates), rescaled
// to [0,1]; ties carry averaged ranks.
std::vector<CalibratedProfile> calibrate_rank(const std::vector<IndexProfile>& candidates,
                                              const RandomClusteringCollection& collection);

// Selected indexes with strictly positive weights; defines A(C).
struct AggregationSpec {
    std::vector<std::string> index_ids;
    std::vector<double> weights;

    void validate() const;
    // Rescales weights to sum 1.
    AggregationSpec normalised() const;
};

// Weighted sum over the selected calibrated indexes.
double aggregate(const CalibratedProfile& calibrated, const AggregationSpec& spec);

} // namespace clustval

#endif

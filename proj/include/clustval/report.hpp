#ifndef CLUSTVAL_REPORT_HPP
#define CLUSTVAL_REPORT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clustval/calibration.hpp"
#include "clustval/clusterers.hpp"
#include "clustval/profile.hpp"

namespace clustval {

struct ReportRow {
    std::string method;
    std::size_t k = 0;
    std::map<std::string, IndexValue> values;  // raw + normalised per index
    std::map<std::string, double> calibrated;
    std::map<std::string, std::string> failures;
    std::optional<double> aggregate;
    std::optional<double> ari;
};

// Machine-readable result of a validate/compare run. Every number is
// recomputable from inputs plus the recorded seed.
struct Report {
    int schema_version = 1;
    std::string command;
    std::string calibration;
    std::uint64_t seed = 0;
    ValidationConfig config;
    std::vector<std::string> selected_indexes;
    AggregationSpec aggregation;
    std::map<std::string, std::size_t> exclusion_counts;
    std::map<std::size_t, double> random_aggregate_by_k;
    std::vector<ReportRow> rows; // sorted by (method, K)

    std::string to_json() const;
    static Report from_json(const std::string& text);
    std::string to_table() const;
    std::string to_csv() const; // long format: one line per (clustering, index)
};

// A named candidate clustering for reporting.
struct Candidate {
    std::string method;
    Clustering clustering;
};

// Raw + normalised profiles for each candidate (no calibration).
Report run_validate(const DissimilarityMatrix& d, const std::vector<Candidate>& candidates,
                    const ValidationConfig& config,
                    const std::vector<std::string>& selected = {});

// Full pipeline: random collection, calibration, aggregation, optional ARI
// against reference labels, plus A(C) of the random pool per K.
Report run_compare(const DissimilarityMatrix& d, const std::vector<Candidate>& candidates,
                   const ValidationConfig& config, const AggregationSpec& spec,
                   CalibrationMode mode, std::uint64_t seed,
                   const std::optional<Clustering>& truth = std::nullopt,
                   std::size_t threads = 1, bool normalise_weights = false);

} // namespace clustval

#endif

#ifndef CLUSTVAL_PROFILE_HPP
#define CLUSTVAL_PROFILE_HPP

#include <map>
#include <string>
#include <vector>

#include "clustval/config.hpp"
#include "clustval/density.hpp"
#include "clustval/indexes.hpp"

namespace clustval {

// Evaluation of a whole index selection on one clustering. Indexes that
// raise a ValidationError are recorded as failures instead of aborting.
struct ProfileResult {
    IndexProfile profile;
    std::map<std::string, std::string> failures; // index_id -> reason
};

// Evaluates the selected indexes (all known ids when `selected` is empty).
// `cache` carries the clustering-independent density estimate; pass nullptr
// to compute it on demand when a density index is selected.
ProfileResult compute_profile(const DissimilarityMatrix& d, const Clustering& c,
                              const ValidationConfig& config,
                              const std::vector<std::string>& selected = {},
                              const DensityEstimate* cache = nullptr);

} // namespace clustval

#endif

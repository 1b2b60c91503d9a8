#ifndef CLUSTVAL_INDEXES_HPP
#define CLUSTVAL_INDEXES_HPP

#include <map>
#include <string>
#include <vector>

#include "clustval/clustering.hpp"
#include "clustval/config.hpp"
#include "clustval/dataset.hpp"

namespace clustval {

// One validation index evaluation: the raw value in its own units and the
// normalised value in [0,1], larger is better.
struct IndexValue {
    std::string index_id;
    double raw = 0.0;
    double normalised = 0.0;
};

// Per-clustering map of index evaluations.
struct IndexProfile {
    std::size_t num_clusters = 0;
    std::map<std::string, IndexValue> values;

    bool has(const std::string& id) const { return values.count(id) != 0; }
    const IndexValue& at(const std::string& id) const;
};

// The index identifiers recognised in reports and CLI selections, in
// canonical report order.
const std::vector<std::string>& all_index_ids();
bool is_known_index(const std::string& id);

// Average within-cluster dissimilarity over unordered pairs.
IndexValue within_dis(const DissimilarityMatrix& d, const Clustering& c);

// Average of the p-portion smallest object-to-other-cluster dissimilarities
// per cluster; at least one object per cluster contributes.
IndexValue p_separation(const DissimilarityMatrix& d, const Clustering& c, double p);

// PAM-style medoid of each cluster; ties broken by lowest object index.
std::vector<std::size_t> medoids(const DissimilarityMatrix& d, const Clustering& c);

// Mean dissimilarity of objects to their cluster medoid.
IndexValue centroid_index(const DissimilarityMatrix& d, const Clustering& c);

// Pearson correlation between pairwise dissimilarities and the binary
// different-cluster indicator.
IndexValue pearson_gamma(const DissimilarityMatrix& d, const Clustering& c);

// Largest maximum MST edge over clusters.
IndexValue widest_gap(const DissimilarityMatrix& d, const Clustering& c);

// Size-weighted mean coefficient of variation of k-th nearest within-cluster
// neighbour dissimilarities, over clusters with more than k members.
IndexValue cv_density(const DissimilarityMatrix& d, const Clustering& c, std::size_t k);

// Shannon entropy of cluster sizes, normalised by log K.
IndexValue entropy(const Clustering& c);

// 1 - K/K_max.
IndexValue parsimony(const Clustering& c, std::size_t k_max);

} // namespace clustval

#endif

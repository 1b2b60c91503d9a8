#ifndef CLUSTVAL_CLUSTERING_HPP
#define CLUSTVAL_CLUSTERING_HPP

#include <cstddef>
#include <vector>

#include "clustval/errors.hpp"

namespace clustval {

// A partition of {0..n-1} into K nonempty clusters. Internal cluster ids are
// 0..K-1, canonical by order of first appearance in the label sequence.
class Clustering {
public:
    // Remaps arbitrary integer labels to canonical ids.
    static Clustering from_labels(const std::vector<int>& raw_labels);

    std::size_t size() const { return labels_.size(); }
    std::size_t num_clusters() const { return sizes_.size(); }
    int label(std::size_t i) const { return labels_[i]; }
    const std::vector<int>& labels() const { return labels_; }
    std::size_t cluster_size(int j) const { return sizes_[j]; }
    const std::vector<std::size_t>& sizes() const { return sizes_; }

    // Member object indices of cluster j, ascending.
    const std::vector<std::size_t>& members(int j) const { return members_[j]; }

    // 1-based canonical labels for files and reports.
    std::vector<int> one_based_labels() const;

private:
    explicit Clustering(std::vector<int> canonical);

    std::vector<int> labels_;
    std::vector<std::size_t> sizes_;
    std::vector<std::vector<std::size_t>> members_;
};

} // namespace clustval

#endif

#ifndef CLUSTVAL_DATASET_HPP
#define CLUSTVAL_DATASET_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "clustval/errors.hpp"

namespace clustval {

enum class Metric { Euclidean, Manhattan };

Metric metric_from_string(const std::string& name);
std::string to_string(Metric m);

// n points in p-dimensional real space with an attached metric tag.
class PointDataset {
public:
    PointDataset(std::vector<std::vector<double>> coords, Metric metric);

    std::size_t size() const { return coords_.size(); }
    std::size_t dimension() const { return coords_.empty() ? 0 : coords_[0].size(); }
    Metric metric() const { return metric_; }
    const std::vector<double>& point(std::size_t i) const { return coords_[i]; }
    const std::vector<std::vector<double>>& points() const { return coords_; }

    double distance(std::size_t i, std::size_t j) const;

private:
    std::vector<std::vector<double>> coords_;
    Metric metric_;
};

// Symmetric nonnegative dissimilarities with zero diagonal.
// d_max (largest off-diagonal entry) is computed once at construction.
class DissimilarityMatrix {
public:
    // Pairwise metric distances of a point dataset. Requires n >= 2.
    static DissimilarityMatrix from_points(const PointDataset& points);

    // Validates a square matrix. Entries within `tolerance` of symmetry are
    // symmetrised by averaging; larger asymmetries are rejected.
    static DissimilarityMatrix from_matrix(const std::vector<std::vector<double>>& matrix,
                                           double tolerance = 1e-9);

    std::size_t size() const { return n_; }
    double at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    double d_max() const { return d_max_; }

    // The n(n-1)/2 off-diagonal values (i < j), unsorted.
    std::vector<double> pair_values() const;

private:
    DissimilarityMatrix(std::size_t n, std::vector<double> data);

    std::size_t n_;
    std::vector<double> data_; // row-major n*n
    double d_max_;
};

} // namespace clustval

#endif

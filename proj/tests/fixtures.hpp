// Shared test fixtures and random-instance generators.
#ifndef CLUSTVAL_TEST_FIXTURES_HPP
#define CLUSTVAL_TEST_FIXTURES_HPP

#include <random>
#include <vector>

#include "clustval/clustering.hpp"
#include "clustval/dataset.hpp"

namespace fixtures {

using clustval::Clustering;
using clustval::DissimilarityMatrix;
using clustval::Metric;
using clustval::PointDataset;

// 1-D points 0,1,2,10,11,12: two tight groups eight apart.
inline PointDataset d6_points() {
    return PointDataset({{0}, {1}, {2}, {10}, {11}, {12}}, Metric::Euclidean);
}

inline DissimilarityMatrix d6() { return DissimilarityMatrix::from_points(d6_points()); }

// clustering A = {1,2,3 | 4,5,6}
inline Clustering d6_clustering_a() { return Clustering::from_labels({0, 0, 0, 1, 1, 1}); }

// Random metric point cloud of n points in dim dimensions, unit-cube uniform.
inline DissimilarityMatrix random_cloud(std::mt19937_64& rng, std::size_t n,
                                        std::size_t dim = 2) {
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    std::vector<std::vector<double>> pts(n, std::vector<double>(dim));
    for (auto& p : pts)
        for (auto& c : p) c = coord(rng);
    return DissimilarityMatrix::from_points(PointDataset(std::move(pts), Metric::Euclidean));
}

// Random partition into exactly k nonempty clusters.
inline std::vector<int> random_labels(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    std::vector<int> labels(n);
    // one guaranteed member per cluster, rest uniform
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(perm[i], perm[pick(rng)]);
    }
    std::uniform_int_distribution<int> any(0, static_cast<int>(k) - 1);
    for (std::size_t i = 0; i < n; ++i) labels[i] = any(rng);
    for (std::size_t j = 0; j < k; ++j) labels[perm[j]] = static_cast<int>(j);
    return labels;
}

} // namespace fixtures

#endif

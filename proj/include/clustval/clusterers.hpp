#ifndef CLUSTVAL_CLUSTERERS_HPP
#define CLUSTVAL_CLUSTERERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "clustval/clustering.hpp"
#include "clustval/dataset.hpp"

namespace clustval {

enum class LinkageMethod { Single, Average };

// A clustering plus how it was made. `objective` is method-specific: sum of
// squared Euclidean distances for kmeans, sum of dissimilarities to medoids
// for pam, height of the last merge for linkage.
struct ClusteringResult {
    Clustering clustering;
    std::string method;
    double objective = 0.0;
    std::vector<std::vector<double>> centers; // kmeans only
    std::vector<std::size_t> medoid_ids;      // pam only
};

// Lloyd iterations from random distinct initial centers, best of `restarts`
// runs by objective. Empty clusters are reseeded with the point farthest
// from its assigned center.
ClusteringResult kmeans(const PointDataset& points, std::size_t k, std::uint64_t seed,
                        std::size_t restarts = 10);

// Classic PAM: greedy BUILD then steepest-descent SWAP, deterministic.
ClusteringResult pam(const DissimilarityMatrix& d, std::size_t k);

// Agglomerative clustering with single or average (UPGMA) linkage, cut at K.
ClusteringResult linkage(const DissimilarityMatrix& d, LinkageMethod method, std::size_t k);

// Hubert-Arabie adjusted Rand index between two partitions of the same set.
double adjusted_rand(const Clustering& a, const Clustering& b);

} // namespace clustval

#endif

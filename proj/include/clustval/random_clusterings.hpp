#ifndef CLUSTVAL_RANDOM_CLUSTERINGS_HPP
#define CLUSTVAL_RANDOM_CLUSTERINGS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "clustval/clustering.hpp"
#include "clustval/config.hpp"
#include "clustval/dataset.hpp"
#include "clustval/profile.hpp"

namespace clustval {

enum class Generator { StupidCentroids, StupidNN };

Generator generator_from_string(const std::string& name);
std::string to_string(Generator g);

// Derives reproducible substream seeds from one master seed. Each
// (generator, K, replicate) triple gets its own stream via splitmix64
// mixing, so substreams are independent of evaluation order.
struct SeedPlan {
    std::uint64_t master_seed = 0;

    std::uint64_t substream(Generator g, std::size_t k, std::size_t replicate) const;
};

// Uniform random K-subset of {0..n-1}, in draw order.
std::vector<std::size_t> draw_centroid_set(std::size_t n, std::size_t k, std::uint64_t seed);

// Nearest-centroid assignment to a random (or supplied) centroid set.
// Each centroid stays in its own cluster; other ties go to the lowest
// centroid position in Q.
Clustering stupid_kcentroids(const DissimilarityMatrix& d, std::size_t k,
                             const std::vector<std::size_t>& centroid_set);
Clustering stupid_kcentroids(const DissimilarityMatrix& d, std::size_t k, std::uint64_t seed);

// Single-linkage-style growth from random (or supplied) singleton seeds:
// repeatedly attach the unassigned object closest to any assigned object.
Clustering stupid_nn(const DissimilarityMatrix& d, std::size_t k,
                     const std::vector<std::size_t>& seed_set);
Clustering stupid_nn(const DissimilarityMatrix& d, std::size_t k, std::uint64_t seed);

// One random clustering with provenance and its index profile.
struct RandomClusteringEntry {
    Generator generator;
    std::size_t k = 0;
    std::size_t replicate = 0;
    std::uint64_t seed = 0;
    Clustering clustering;
    IndexProfile profile;
    std::map<std::string, std::string> failures;
};

// 2B clusterings per K in {2..K_max}: B stupid-centroid + B stupid-NN,
// each with an IndexProfile for the selected indexes.
struct RandomClusteringCollection {
    std::size_t b = 0;
    std::size_t k_max = 0;
    std::uint64_t master_seed = 0;
    std::vector<RandomClusteringEntry> entries; // ordered by (K, generator, replicate)
    std::map<std::string, std::size_t> exclusion_counts; // index_id -> dropped clusterings

    // Normalised values of one index over the usable pool, restricted to one
    // K (per-K mode) or over all K (k = 0).
    std::vector<double> pool_values(const std::string& index_id, std::size_t k = 0) const;
};

RandomClusteringCollection generate_collection(const DissimilarityMatrix& d,
                                               const ValidationConfig& config,
                                               std::uint64_t master_seed,
                                               const std::vector<std::string>& selected = {},
                                               std::size_t threads = 1);

} // namespace clustval

#endif

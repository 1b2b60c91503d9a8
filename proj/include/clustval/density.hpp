#ifndef CLUSTVAL_DENSITY_HPP
#define CLUSTVAL_DENSITY_HPP

#include <utility>
#include <vector>

#include "clustval/clustering.hpp"
#include "clustval/dataset.hpp"
#include "clustval/indexes.hpp"

namespace clustval {

// Clustering-independent part of the kernel density estimate: bandwidth q
// (p-quantile of the pairwise dissimilarities), per-object density h and its
// max-normalised version h_star. Compute once per (matrix, p) and reuse
// across clusterings.
struct DensityEstimate {
    double q = 0.0;
    std::vector<double> h;
    std::vector<double> h_star;
    double h_max = 0.0;
};

DensityEstimate density_estimate(const DissimilarityMatrix& d, double p);

// Triangular kernel with bandwidth q; q = 0 degenerates to the indicator of
// zero distance so coincident points still count.
double kernel(double dist, double q);

// Per-clustering density profile: the shared estimate plus the cross-cluster
// contributions h_o and h_o_star (normalised by the same max h).
struct DensityProfile {
    double q = 0.0;
    std::vector<double> h;
    std::vector<double> h_star;
    std::vector<double> h_o;
    std::vector<double> h_o_star;
};

DensityProfile density_profile(const DissimilarityMatrix& d, const Clustering& c, double p);
DensityProfile density_profile(const DissimilarityMatrix& d, const Clustering& c,
                               const DensityEstimate& base);

// Density-weighted gap values collected during the densdec traversal; one
// element per non-seed object (|T| = n - K).
struct GapSet {
    std::vector<double> values;
};

// Mode-seeded traversal of each cluster by nearest-neighbour growth;
// penalises density increases and collects the gap multiset T.
std::pair<IndexValue, GapSet> densdec_and_gaps(const DissimilarityMatrix& d,
                                               const Clustering& c,
                                               const DensityProfile& profile);

IndexValue highdgap(const GapSet& gaps, double d_max);

// Penalises high-density points whose density is contributed from other
// clusters.
IndexValue densbound(const Clustering& c, const DensityProfile& profile);

} // namespace clustval

#endif

#include "clustval/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace clustval {

double kernel(double dist, double q) {
    if (q == 0.0) return dist == 0.0 ? 1.0 : 0.0;
    return dist <= q ? 1.0 - dist / q : 0.0;
}

DensityEstimate density_estimate(const DissimilarityMatrix& d, double p) {
    if (!(p > 0.0 && p <= 1.0)) throw MalformedInput("density portion must be in (0,1]");
    const std::size_t n = d.size();
    std::vector<double> pairs = d.pair_values();
    // empirical quantile: smallest order statistic covering ceil(p*m) values
    const std::size_t m = pairs.size();
    std::size_t r = static_cast<std::size_t>(std::ceil(p * static_cast<double>(m)));
    r = std::min(std::max<std::size_t>(r, 1), m);
    std::nth_element(pairs.begin(), pairs.begin() + (r - 1), pairs.end());
    DensityEstimate est;
    est.q = pairs[r - 1];
    est.h.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += kernel(d.at(i, j), est.q);
        est.h[i] = acc; // includes the self-term k(0) = 1
    }
    est.h_max = *std::max_element(est.h.begin(), est.h.end());
    est.h_star.resize(n);
    for (std::size_t i = 0; i < n; ++i) est.h_star[i] = est.h[i] / est.h_max;
    return est;
}

DensityProfile density_profile(const DissimilarityMatrix& d, const Clustering& c, double p) {
    return density_profile(d, c, density_estimate(d, p));
}

DensityProfile density_profile(const DissimilarityMatrix& d, const Clustering& c,
                               const DensityEstimate& base) {
    const std::size_t n = d.size();
    DensityProfile prof;
    prof.q = base.q;
    prof.h = base.h;
    prof.h_star = base.h_star;
    prof.h_o.assign(n, 0.0);
    prof.h_o_star.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (c.label(j) != c.label(i)) acc += kernel(d.at(i, j), base.q);
        prof.h_o[i] = acc;
        prof.h_o_star[i] = acc / base.h_max;
    }
    return prof;
}

std::pair<IndexValue, GapSet> densdec_and_gaps(const DissimilarityMatrix& d,
                                               const Clustering& c,
                                               const DensityProfile& profile) {
    const auto& hs = profile.h_star;
    double penalty = 0.0;
    GapSet gaps;
    gaps.values.reserve(d.size() - c.num_clusters());
    for (int j = 0; j < static_cast<int>(c.num_clusters()); ++j) {
        const auto& mem = c.members(j);
        const std::size_t m = mem.size();
        // seed at the cluster mode, ties to the lowest object index
        std::size_t seed_pos = 0;
        for (std::size_t a = 1; a < m; ++a)
            if (hs[mem[a]] > hs[mem[seed_pos]]) seed_pos = a;
        std::vector<bool> in_s(m, false);
        in_s[seed_pos] = true;
        // best distance of each remaining member to S and the matching y
        // (smallest object index among equal distances)
        std::vector<double> best(m, std::numeric_limits<double>::infinity());
        std::vector<std::size_t> best_y(m, 0);
        for (std::size_t a = 0; a < m; ++a)
            if (a != seed_pos) {
                best[a] = d.at(mem[a], mem[seed_pos]);
                best_y[a] = mem[seed_pos];
            }
        for (std::size_t step = 1; step < m; ++step) {
            // pick x minimising (distance, x, y) lexicographically
            std::size_t pick = m;
            for (std::size_t a = 0; a < m; ++a) {
                if (in_s[a]) continue;
                if (pick == m || best[a] < best[pick] ||
                    (best[a] == best[pick] &&
                     (mem[a] < mem[pick] ||
                      (mem[a] == mem[pick] && best_y[a] < best_y[pick]))))
                    pick = a;
            }
            // max remaining density before x leaves R_j
            double max_r = 0.0;
            for (std::size_t a = 0; a < m; ++a)
                if (!in_s[a]) max_r = std::max(max_r, hs[mem[a]]);
            gaps.values.push_back(max_r * best[pick]);
            const double hx = hs[mem[pick]];
            const double hy = hs[best_y[pick]];
            if (hx > hy) penalty += (hx - hy) * (hx - hy);
            in_s[pick] = true;
            for (std::size_t a = 0; a < m; ++a) {
                if (in_s[a]) continue;
                const double dist = d.at(mem[a], mem[pick]);
                if (dist < best[a] || (dist == best[a] && mem[pick] < best_y[a])) {
                    best[a] = dist;
                    best_y[a] = mem[pick];
                }
            }
        }
    }
    const double raw = std::sqrt(penalty / static_cast<double>(d.size()));
    return {IndexValue{"densdec", raw, 1.0 - raw}, std::move(gaps)};
}

IndexValue highdgap(const GapSet& gaps, double d_max) {
    double raw = 0.0;
    for (double v : gaps.values) raw = std::max(raw, v);
    return {"highdgap", raw, 1.0 - raw / d_max};
}

IndexValue densbound(const Clustering&, const DensityProfile& profile) {
    double raw = 0.0;
    for (std::size_t i = 0; i < profile.h_star.size(); ++i)
        raw += profile.h_star[i] * profile.h_o_star[i];
    raw /= static_cast<double>(profile.h_star.size());
    return {"densbound", raw, 1.0 - raw};
}

} // namespace clustval

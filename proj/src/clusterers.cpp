#include "clustval/clusterers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace clustval {

namespace {

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        acc += diff * diff;
    }
    return acc;
}

struct LloydRun {
    std::vector<int> labels;
    std::vector<std::vector<double>> centers;
    double objective = std::numeric_limits<double>::infinity();
};

LloydRun lloyd(const PointDataset& points, std::size_t k, std::mt19937_64& rng) {
    const std::size_t n = points.size();
    const std::size_t p = points.dimension();

    // K distinct random initial centers
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(perm[i], perm[pick(rng)]);
    }
    LloydRun run;
    run.centers.resize(k);
    for (std::size_t j = 0; j < k; ++j) run.centers[j] = points.point(perm[j]);
    run.labels.assign(n, -1);

    for (;;) {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            int best_j = 0;
            for (std::size_t j = 0; j < k; ++j) {
                const double dist = sq_dist(points.point(i), run.centers[j]);
                if (dist < best) {
                    best = dist;
                    best_j = static_cast<int>(j);
                }
            }
            if (run.labels[i] != best_j) {
                run.labels[i] = best_j;
                changed = true;
            }
        }
        // repair empty clusters with the point farthest from its center
        std::vector<std::size_t> counts(k, 0);
        for (int l : run.labels) counts[l]++;
        bool repaired = false;
        for (std::size_t j = 0; j < k; ++j) {
            if (counts[j] > 0) continue;
            std::size_t farthest = 0;
            double far_dist = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (counts[run.labels[i]] <= 1) continue;
                const double dist = sq_dist(points.point(i), run.centers[run.labels[i]]);
                if (dist > far_dist) {
                    far_dist = dist;
                    farthest = i;
                }
            }
            counts[run.labels[farthest]]--;
            run.labels[farthest] = static_cast<int>(j);
            counts[j] = 1;
            repaired = true;
        }
        if (!changed && !repaired) break;
        for (auto& c : run.centers) std::fill(c.begin(), c.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t dim = 0; dim < p; ++dim)
                run.centers[run.labels[i]][dim] += points.point(i)[dim];
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t dim = 0; dim < p; ++dim)
                run.centers[j][dim] /= static_cast<double>(counts[j]);
    }
    run.objective = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        run.objective += sq_dist(points.point(i), run.centers[run.labels[i]]);
    return run;
}

} // namespace

ClusteringResult kmeans(const PointDataset& points, std::size_t k, std::uint64_t seed,
                        std::size_t restarts) {
    if (points.metric() != Metric::Euclidean)
        throw MalformedInput("kmeans requires the euclidean metric");
    if (k < 1 || k > points.size())
        throw KOutOfRange("K=" + std::to_string(k) + " out of range for n=" +
                          std::to_string(points.size()));
    std::mt19937_64 rng(seed);
    LloydRun best;
    for (std::size_t r = 0; r < std::max<std::size_t>(1, restarts); ++r) {
        LloydRun run = lloyd(points, k, rng);
        if (run.objective < best.objective) best = std::move(run);
    }
    return {Clustering::from_labels(best.labels), "kmeans", best.objective,
            std::move(best.centers), {}};
}

ClusteringResult pam(const DissimilarityMatrix& d, std::size_t k) {
    const std::size_t n = d.size();
    if (k < 1 || k > n)
        throw KOutOfRange("K=" + std::to_string(k) + " out of range for n=" + std::to_string(n));

    auto objective_of = [&](const std::vector<std::size_t>& meds) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t m : meds) best = std::min(best, d.at(i, m));
            total += best;
        }
        return total;
    };

    // BUILD: greedily add the medoid lowering the objective most
    std::vector<std::size_t> meds;
    std::vector<bool> is_med(n, false);
    for (std::size_t step = 0; step < k; ++step) {
        double best_obj = std::numeric_limits<double>::infinity();
        std::size_t best_c = n;
        for (std::size_t cand = 0; cand < n; ++cand) {
            if (is_med[cand]) continue;
            meds.push_back(cand);
            const double obj = objective_of(meds);
            meds.pop_back();
            if (obj < best_obj) {
                best_obj = obj;
                best_c = cand;
            }
        }
        meds.push_back(best_c);
        is_med[best_c] = true;
    }

    // SWAP: steepest descent over single medoid exchanges
    double current = objective_of(meds);
    for (;;) {
        double best_obj = current;
        std::size_t best_m = n, best_c = n;
        for (std::size_t mi = 0; mi < meds.size(); ++mi) {
            const std::size_t old = meds[mi];
            for (std::size_t cand = 0; cand < n; ++cand) {
                if (is_med[cand]) continue;
                meds[mi] = cand;
                const double obj = objective_of(meds);
                if (obj < best_obj) {
                    best_obj = obj;
                    best_m = mi;
                    best_c = cand;
                }
                meds[mi] = old;
            }
        }
        if (best_m == n) break;
        is_med[meds[best_m]] = false;
        meds[best_m] = best_c;
        is_med[best_c] = true;
        current = best_obj;
    }

    std::sort(meds.begin(), meds.end());
    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        int best_j = 0;
        for (std::size_t j = 0; j < meds.size(); ++j) {
            if (d.at(i, meds[j]) < best) {
                best = d.at(i, meds[j]);
                best_j = static_cast<int>(j);
            }
        }
        labels[i] = best_j;
    }
    return {Clustering::from_labels(labels), "pam", current, {}, std::move(meds)};
}

ClusteringResult linkage(const DissimilarityMatrix& d, LinkageMethod method, std::size_t k) {
    const std::size_t n = d.size();
    if (k < 1 || k > n)
        throw KOutOfRange("K=" + std::to_string(k) + " out of range for n=" + std::to_string(n));

    // Lance-Williams on a working copy; active clusters are identified by
    // their smallest member index.
    std::vector<std::vector<double>> w(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i][j] = d.at(i, j);
    std::vector<bool> active(n, true);
    std::vector<std::size_t> count(n, 1);
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 0);

    double last_height = 0.0;
    for (std::size_t clusters = n; clusters > k; --clusters) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = n, bj = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!active[j]) continue;
                if (w[i][j] < best) {
                    best = w[i][j];
                    bi = i;
                    bj = j;
                }
            }
        }
        last_height = best;
        for (std::size_t o = 0; o < n; ++o) {
            if (!active[o] || o == bi || o == bj) continue;
            w[bi][o] = w[o][bi] =
                method == LinkageMethod::Single
                    ? std::min(w[bi][o], w[bj][o])
                    : (static_cast<double>(count[bi]) * w[bi][o] +
                       static_cast<double>(count[bj]) * w[bj][o]) /
                          static_cast<double>(count[bi] + count[bj]);
        }
        active[bj] = false;
        count[bi] += count[bj];
        for (std::size_t o = 0; o < n; ++o)
            if (labels[o] == static_cast<int>(bj)) labels[o] = static_cast<int>(bi);
    }
    return {Clustering::from_labels(labels),
            method == LinkageMethod::Single ? "single" : "average", last_height, {}, {}};
}

double adjusted_rand(const Clustering& a, const Clustering& b) {
    if (a.size() != b.size()) throw MalformedInput("partitions cover different object counts");
    const std::size_t ka = a.num_clusters();
    const std::size_t kb = b.num_clusters();
    std::vector<std::vector<std::size_t>> table(ka, std::vector<std::size_t>(kb, 0));
    for (std::size_t i = 0; i < a.size(); ++i) table[a.label(i)][b.label(i)]++;

    auto choose2 = [](std::size_t x) {
        return static_cast<double>(x) * static_cast<double>(x - 1) / 2.0;
    };
    double sum_cells = 0.0;
    for (const auto& row : table)
        for (std::size_t cell : row) sum_cells += choose2(cell);
    double sum_a = 0.0, sum_b = 0.0;
    for (std::size_t size : a.sizes()) sum_a += choose2(size);
    for (std::size_t size : b.sizes()) sum_b += choose2(size);
    const double total = choose2(a.size());
    const double expected = sum_a * sum_b / total;
    const double max_index = 0.5 * (sum_a + sum_b);
    if (max_index == expected) return 1.0; // both partitions trivial
    return (sum_cells - expected) / (max_index - expected);
}

} // namespace clustval

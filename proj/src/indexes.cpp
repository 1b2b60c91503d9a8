#include "clustval/indexes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace clustval {

const IndexValue& IndexProfile::at(const std::string& id) const {
    auto it = values.find(id);
    if (it == values.end()) throw MissingIndex("index '" + id + "' not in profile");
    return it->second;
}

const std::vector<std::string>& all_index_ids() {
    static const std::vector<std::string> ids = {
        "withindis", "psep",    "centroid",  "pearsongamma", "widestgap", "cvdens",
        "entropy",   "parsimony", "densdec", "densbound",    "highdgap"};
    return ids;
}

bool is_known_index(const std::string& id) {
    const auto& ids = all_index_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

IndexValue within_dis(const DissimilarityMatrix& d, const Clustering& c) {
    double sum = 0.0;
    std::size_t pairs = 0;
    for (int j = 0; j < static_cast<int>(c.num_clusters()); ++j) {
        const auto& mem = c.members(j);
        for (std::size_t a = 0; a < mem.size(); ++a)
            for (std::size_t b = a + 1; b < mem.size(); ++b)
                sum += d.at(mem[a], mem[b]);
        pairs += mem.size() * (mem.size() - 1) / 2;
    }
    if (pairs == 0) throw NoWithinPairs("all clusters are singletons");
    const double raw = sum / static_cast<double>(pairs);
    return {"withindis", raw, 1.0 - raw / d.d_max()};
}

IndexValue p_separation(const DissimilarityMatrix& d, const Clustering& c, double p) {
    if (c.num_clusters() < 2) throw RequiresTwoClusters("psep needs K >= 2");
    const std::size_t n = d.size();
    double sum = 0.0;
    std::size_t count = 0;
    std::vector<double> closest;
    for (int j = 0; j < static_cast<int>(c.num_clusters()); ++j) {
        const auto& mem = c.members(j);
        closest.clear();
        for (std::size_t x : mem) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t y = 0; y < n; ++y)
                if (c.label(y) != j) best = std::min(best, d.at(x, y));
            closest.push_back(best);
        }
        // at least one object per cluster, even when floor(p*n_j) = 0
        std::size_t m_j = static_cast<std::size_t>(std::floor(p * static_cast<double>(mem.size())));
        m_j = std::max<std::size_t>(1, m_j);
        std::partial_sort(closest.begin(), closest.begin() + m_j, closest.end());
        for (std::size_t i = 0; i < m_j; ++i) sum += closest[i];
        count += m_j;
    }
    const double raw = sum / static_cast<double>(count);
    return {"psep", raw, raw / d.d_max()};
}

std::vector<std::size_t> medoids(const DissimilarityMatrix& d, const Clustering& c) {
    std::vector<std::size_t> out(c.num_clusters());
    for (int j = 0; j < static_cast<int>(c.num_clusters()); ++j) {
        const auto& mem = c.members(j);
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_x = mem[0];
        for (std::size_t x : mem) {
            double s = 0.0;
            for (std::size_t y : mem) s += d.at(x, y);
            if (s < best) { // strict: ties keep the lowest index (members ascend)
                best = s;
                best_x = x;
            }
        }
        out[j] = best_x;
    }
    return out;
}

IndexValue centroid_index(const DissimilarityMatrix& d, const Clustering& c) {
    const auto med = medoids(d, c);
    double sum = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) sum += d.at(i, med[c.label(i)]);
    const double raw = sum / static_cast<double>(d.size());
    return {"centroid", raw, 1.0 - raw / d.d_max()};
}

IndexValue pearson_gamma(const DissimilarityMatrix& d, const Clustering& c) {
    if (c.num_clusters() < 2) throw RequiresTwoClusters("pearsongamma needs K >= 2");
    const std::size_t n = d.size();
    // single pass over pairs; c_ij is binary so the correlation reduces to sums
    double s_d = 0.0, s_d2 = 0.0, s_between = 0.0;
    double m = 0.0, m_between = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = d.at(i, j);
            s_d += v;
            s_d2 += v * v;
            m += 1.0;
            if (c.label(i) != c.label(j)) {
                s_between += v;
                m_between += 1.0;
            }
        }
    }
    const double var_d = s_d2 - s_d * s_d / m;
    const double var_c = m_between - m_between * m_between / m;
    if (var_d <= 0.0) throw DegenerateCorrelation("pairwise dissimilarities are constant");
    if (var_c <= 0.0) throw DegenerateCorrelation("cluster indicator vector is constant");
    const double cov = s_between - m_between * s_d / m;
    const double raw = cov / std::sqrt(var_d * var_c);
    return {"pearsongamma", raw, (raw + 1.0) / 2.0};
}

namespace {

// Maximum edge weight of the MST over the given objects (Prim on the dense
// submatrix). Returns 0 for fewer than two objects.
double mst_max_edge(const DissimilarityMatrix& d, const std::vector<std::size_t>& mem) {
    const std::size_t m = mem.size();
    if (m < 2) return 0.0;
    std::vector<double> dist(m, std::numeric_limits<double>::infinity());
    std::vector<bool> in_tree(m, false);
    dist[0] = 0.0;
    double max_edge = 0.0;
    for (std::size_t step = 0; step < m; ++step) {
        std::size_t u = m;
        for (std::size_t v = 0; v < m; ++v)
            if (!in_tree[v] && (u == m || dist[v] < dist[u])) u = v;
        in_tree[u] = true;
        max_edge = std::max(max_edge, dist[u] == std::numeric_limits<double>::infinity() ? 0.0 : dist[u]);
        for (std::size_t v = 0; v < m; ++v)
            if (!in_tree[v]) dist[v] = std::min(dist[v], d.at(mem[u], mem[v]));
    }
    return max_edge;
}

} // namespace

IndexValue widest_gap(const DissimilarityMatrix& d, const Clustering& c) {
    double raw = 0.0;
    for (int j = 0; j < static_cast<int>(c.num_clusters()); ++j)
        raw = std::max(raw, mst_max_edge(d, c.members(j)));
    return {"widestgap", raw, 1.0 - raw / d.d_max()};
}

IndexValue cv_density(const DissimilarityMatrix& d, const Clustering& c, std::size_t k) {
    double weighted = 0.0;
    std::size_t weight = 0;
    std::vector<double> knn;
    std::vector<double> scratch;
    for (int j = 0; j < static_cast<int>(c.num_clusters()); ++j) {
        const auto& mem = c.members(j);
        if (mem.size() <= k) continue;
        knn.clear();
        for (std::size_t x : mem) {
            scratch.clear();
            for (std::size_t y : mem)
                if (y != x) scratch.push_back(d.at(x, y));
            std::nth_element(scratch.begin(), scratch.begin() + (k - 1), scratch.end());
            knn.push_back(scratch[k - 1]);
        }
        const double mean = std::accumulate(knn.begin(), knn.end(), 0.0) /
                            static_cast<double>(knn.size());
        double cv = 0.0;
        if (mean > 0.0) {
            double ss = 0.0;
            for (double v : knn) ss += (v - mean) * (v - mean);
            cv = std::sqrt(ss / static_cast<double>(knn.size() - 1)) / mean;
        }
        weighted += static_cast<double>(mem.size()) * cv;
        weight += mem.size();
    }
    if (weight == 0)
        throw InsufficientClusterSizes("no cluster has more than " + std::to_string(k) +
                                       " members");
    const double raw = weighted / static_cast<double>(weight);
    return {"cvdens", raw, 1.0 - raw / std::sqrt(static_cast<double>(d.size()))};
}

IndexValue entropy(const Clustering& c) {
    const std::size_t k = c.num_clusters();
    if (k < 2) throw RequiresTwoClusters("entropy needs K >= 2");
    const double n = static_cast<double>(c.size());
    double raw = 0.0;
    for (std::size_t size : c.sizes()) {
        const double frac = static_cast<double>(size) / n;
        raw -= frac * std::log(frac);
    }
    return {"entropy", raw, raw / std::log(static_cast<double>(k))};
}

IndexValue parsimony(const Clustering& c, std::size_t k_max) {
    const std::size_t k = c.num_clusters();
    if (k > k_max)
        throw KOutOfRange("K=" + std::to_string(k) + " exceeds K_max=" + std::to_string(k_max));
    const double v = 1.0 - static_cast<double>(k) / static_cast<double>(k_max);
    return {"parsimony", v, v};
}

} // namespace clustval

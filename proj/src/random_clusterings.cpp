#include "clustval/random_clusterings.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

namespace clustval {

Generator generator_from_string(const std::string& name) {
    if (name == "stupidcent") return Generator::StupidCentroids;
    if (name == "stupidnn") return Generator::StupidNN;
    throw MalformedInput("unknown generator '" + name + "' (valid: stupidcent, stupidnn)");
}

std::string to_string(Generator g) {
    return g == Generator::StupidCentroids ? "stupidcent" : "stupidnn";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t SeedPlan::substream(Generator g, std::size_t k, std::size_t replicate) const {
    std::uint64_t h = splitmix64(master_seed);
    h = splitmix64(h ^ (g == Generator::StupidCentroids ? 0x1ULL : 0x2ULL));
    h = splitmix64(h ^ static_cast<std::uint64_t>(k));
    h = splitmix64(h ^ static_cast<std::uint64_t>(replicate));
    return h;
}

std::vector<std::size_t> draw_centroid_set(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k > n) throw KOutOfRange("K=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    // partial Fisher-Yates: first k entries form the uniform subset
    for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(perm[i], perm[pick(rng)]);
    }
    perm.resize(k);
    return perm;
}

Clustering stupid_kcentroids(const DissimilarityMatrix& d, std::size_t k,
                             const std::vector<std::size_t>& centroid_set) {
    const std::size_t n = d.size();
    if (k > n) throw KOutOfRange("K=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
    if (centroid_set.size() != k) throw MalformedInput("centroid set size differs from K");
    std::vector<int> labels(n, -1);
    for (std::size_t j = 0; j < k; ++j) labels[centroid_set[j]] = static_cast<int>(j);
    for (std::size_t i = 0; i < n; ++i) {
        if (labels[i] >= 0) continue; // centroids keep their own cluster
        double best = std::numeric_limits<double>::infinity();
        int best_j = 0;
        for (std::size_t j = 0; j < k; ++j) {
            const double dist = d.at(i, centroid_set[j]);
            if (dist < best) {
                best = dist;
                best_j = static_cast<int>(j);
            }
        }
        labels[i] = best_j;
    }
    return Clustering::from_labels(labels);
}

Clustering stupid_kcentroids(const DissimilarityMatrix& d, std::size_t k, std::uint64_t seed) {
    return stupid_kcentroids(d, k, draw_centroid_set(d.size(), k, seed));
}

Clustering stupid_nn(const DissimilarityMatrix& d, std::size_t k,
                     const std::vector<std::size_t>& seed_set) {
    const std::size_t n = d.size();
    if (k > n) throw KOutOfRange("K=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
    if (seed_set.size() != k) throw MalformedInput("seed set size differs from K");
    std::vector<int> labels(n, -1);
    for (std::size_t j = 0; j < k; ++j) labels[seed_set[j]] = static_cast<int>(j);
    // per-unassigned best (distance, assigned object) with lowest-index ties
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    std::vector<std::size_t> best_y(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (labels[i] >= 0) continue;
        for (std::size_t j = 0; j < k; ++j) {
            const double dist = d.at(i, seed_set[j]);
            if (dist < best[i] || (dist == best[i] && seed_set[j] < best_y[i])) {
                best[i] = dist;
                best_y[i] = seed_set[j];
            }
        }
    }
    for (std::size_t assigned = k; assigned < n; ++assigned) {
        std::size_t pick = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (labels[i] >= 0) continue;
            if (pick == n || best[i] < best[pick] ||
                (best[i] == best[pick] && (i < pick || (i == pick && best_y[i] < best_y[pick]))))
                pick = i;
        }
        labels[pick] = labels[best_y[pick]];
        for (std::size_t i = 0; i < n; ++i) {
            if (labels[i] >= 0) continue;
            const double dist = d.at(i, pick);
            if (dist < best[i] || (dist == best[i] && pick < best_y[i])) {
                best[i] = dist;
                best_y[i] = pick;
            }
        }
    }
    return Clustering::from_labels(labels);
}

Clustering stupid_nn(const DissimilarityMatrix& d, std::size_t k, std::uint64_t seed) {
    return stupid_nn(d, k, draw_centroid_set(d.size(), k, seed));
}

std::vector<double> RandomClusteringCollection::pool_values(const std::string& index_id,
                                                            std::size_t k) const {
    std::vector<double> out;
    for (const auto& e : entries) {
        if (k != 0 && e.k != k) continue;
        auto it = e.profile.values.find(index_id);
        if (it != e.profile.values.end()) out.push_back(it->second.normalised);
    }
    return out;
}

RandomClusteringCollection generate_collection(const DissimilarityMatrix& d,
                                               const ValidationConfig& config,
                                               std::uint64_t master_seed,
                                               const std::vector<std::string>& selected,
                                               std::size_t threads) {
    config.validate();
    if (config.k_max > d.size())
        throw KOutOfRange("K_max=" + std::to_string(config.k_max) + " exceeds n=" +
                          std::to_string(d.size()));
    const SeedPlan plan{master_seed};

    const bool density_needed =
        selected.empty() ||
        std::find(selected.begin(), selected.end(), "densdec") != selected.end() ||
        std::find(selected.begin(), selected.end(), "densbound") != selected.end() ||
        std::find(selected.begin(), selected.end(), "highdgap") != selected.end();
    DensityEstimate density_cache;
    if (density_needed) density_cache = density_estimate(d, config.p_dens);

    RandomClusteringCollection coll;
    coll.b = config.b;
    coll.k_max = config.k_max;
    coll.master_seed = master_seed;

    struct Task {
        Generator g;
        std::size_t k;
        std::size_t rep;
    };
    std::vector<Task> tasks;
    for (std::size_t k = 2; k <= config.k_max; ++k)
        for (Generator g : {Generator::StupidCentroids, Generator::StupidNN})
            for (std::size_t rep = 0; rep < config.b; ++rep) tasks.push_back({g, k, rep});

    std::vector<RandomClusteringEntry> entries(tasks.size(),
                                               RandomClusteringEntry{Generator::StupidCentroids, 0,
                                                                     0, 0,
                                                                     Clustering::from_labels({0}),
                                                                     {}, {}});
    auto run_task = [&](std::size_t t) {
        const Task& task = tasks[t];
        const std::uint64_t seed = plan.substream(task.g, task.k, task.rep);
        Clustering c = task.g == Generator::StupidCentroids
                           ? stupid_kcentroids(d, task.k, seed)
                           : stupid_nn(d, task.k, seed);
        ProfileResult pr = compute_profile(d, c, config, selected,
                                           density_needed ? &density_cache : nullptr);
        entries[t] = RandomClusteringEntry{task.g,       task.k,
                                           task.rep,     seed,
                                           std::move(c), std::move(pr.profile),
                                           std::move(pr.failures)};
    };

    if (threads <= 1) {
        for (std::size_t t = 0; t < tasks.size(); ++t) run_task(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const std::size_t nthreads = std::min(threads, tasks.size());
        pool.reserve(nthreads);
        for (std::size_t w = 0; w < nthreads; ++w)
            pool.emplace_back([&] {
                for (std::size_t t = next.fetch_add(1); t < tasks.size();
                     t = next.fetch_add(1))
                    run_task(t);
            });
        for (auto& th : pool) th.join();
    }

    // assembly order is fixed by the task list, independent of scheduling
    coll.entries = std::move(entries);
    for (const auto& e : coll.entries)
        for (const auto& [id, reason] : e.failures) coll.exclusion_counts[id]++;
    return coll;
}

} // namespace clustval

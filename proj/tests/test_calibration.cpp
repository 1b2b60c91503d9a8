#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "clustval/calibration.hpp"
#include "fixtures.hpp"

using namespace clustval;

namespace {

// hand-built collection with one index and controlled pool values
RandomClusteringCollection make_pool(const std::vector<std::pair<std::size_t, double>>& values) {
    RandomClusteringCollection coll;
    coll.b = values.size() / 2;
    coll.k_max = 2;
    for (std::size_t i = 0; i < values.size(); ++i) {
        RandomClusteringEntry e{Generator::StupidCentroids,
                                values[i].first,
                                i,
                                i,
                                Clustering::from_labels({0, 1}),
                                {},
                                {}};
        e.profile.num_clusters = values[i].first;
        e.profile.values["withindis"] = IndexValue{"withindis", values[i].second,
                                                   values[i].second};
        coll.entries.push_back(std::move(e));
    }
    return coll;
}

IndexProfile make_profile(std::size_t k, double value) {
    IndexProfile p;
    p.num_clusters = k;
    p.values["withindis"] = IndexValue{"withindis", value, value};
    return p;
}

} // namespace

TEST_CASE("per-K z-score basics") {
    const auto coll = make_pool({{2, 0.2}, {2, 0.4}});
    SUBCASE("candidate at the pool mean scores zero") {
        const auto cal = calibrate_per_k(make_profile(2, 0.3), coll);
        CHECK(cal.values.at("withindis") == doctest::Approx(0.0));
    }
    SUBCASE("two-point pool by hand") {
        const auto cal = calibrate_per_k(make_profile(2, 0.4), coll);
        CHECK(cal.values.at("withindis") == doctest::Approx(0.70710678).epsilon(1e-6));
    }
    SUBCASE("missing K") {
        CHECK_THROWS_AS(calibrate_per_k(make_profile(3, 0.4), coll), KNotInCollection);
    }
    SUBCASE("zero spread is reported") {
        const auto degenerate = make_pool({{2, 0.5}, {2, 0.5}});
        const auto cal = calibrate_per_k(make_profile(2, 0.4), degenerate);
        CHECK(cal.values.count("withindis") == 0);
        CHECK(cal.failures.count("withindis") == 1);
    }
}

TEST_CASE("pool calibrated against itself has mean 0 and sd 1") {
    std::mt19937_64 rng(41);
    const auto d = fixtures::random_cloud(rng, 25);
    ValidationConfig config;
    config.b = 5;
    config.k_max = 4;
    const auto coll = generate_collection(d, config, 123);
    for (const auto mode : {CalibrationMode::PerK, CalibrationMode::Pooled}) {
        for (const auto& id : {"withindis", "psep", "entropy"}) {
            for (std::size_t k = 2; k <= (mode == CalibrationMode::PerK ? 4 : 2); ++k) {
                std::vector<double> scores;
                for (const auto& e : coll.entries) {
                    if (mode == CalibrationMode::PerK && e.k != k) continue;
                    const auto cal = mode == CalibrationMode::PerK
                                         ? calibrate_per_k(e.profile, coll)
                                         : calibrate_pooled(e.profile, coll);
                    if (cal.values.count(id)) scores.push_back(cal.values.at(id));
                }
                REQUIRE(scores.size() >= 2);
                double mean = 0.0;
                for (double v : scores) mean += v;
                mean /= static_cast<double>(scores.size());
                double ss = 0.0;
                for (double v : scores) ss += (v - mean) * (v - mean);
                const double sd = std::sqrt(ss / static_cast<double>(scores.size() - 1));
                CHECK(std::fabs(mean) < 1e-10);
                CHECK(std::fabs(sd - 1.0) < 1e-10);
            }
        }
    }
}

TEST_CASE("z-scores are affine invariant") {
    const std::vector<double> base = {0.1, 0.25, 0.4, 0.7, 0.55, 0.3};
    auto build = [&](double shift, double scale) {
        std::vector<std::pair<std::size_t, double>> vals;
        for (double v : base) vals.emplace_back(2, shift + scale * v);
        return make_pool(vals);
    };
    const auto cal_base =
        calibrate_per_k(make_profile(2, 0.5), build(0.0, 1.0));
    const auto cal_shifted =
        calibrate_per_k(make_profile(2, 3.0 + 2.0 * 0.5), build(3.0, 2.0));
    CHECK(cal_base.values.at("withindis") ==
          doctest::Approx(cal_shifted.values.at("withindis")).epsilon(1e-12));
}

TEST_CASE("pooled vs per-K coincide when the pool is K-independent") {
    // same value multiset for K=2 and K=3
    const auto coll = make_pool({{2, 0.2}, {2, 0.6}, {2, 0.4}, {3, 0.2}, {3, 0.6}, {3, 0.4}});
    const auto per_k = calibrate_per_k(make_profile(2, 0.5), coll);
    const auto pooled = calibrate_pooled(make_profile(2, 0.5), coll);
    // same mean, so the values differ only by the sample-sd denominators
    const double sd_per_k = std::sqrt(0.08 / 2.0);
    const double sd_pooled = std::sqrt(0.16 / 5.0);
    CHECK(per_k.values.at("withindis") / pooled.values.at("withindis") ==
          doctest::Approx(sd_pooled / sd_per_k));
}

TEST_CASE("rank calibration") {
    SUBCASE("strict maximum and minimum") {
        const auto coll = make_pool({{2, 0.2}, {2, 0.4}, {2, 0.6}});
        const auto top = calibrate_rank({make_profile(2, 0.9)}, coll);
        CHECK(top[0].values.at("withindis") == doctest::Approx(1.0));
        const auto bottom = calibrate_rank({make_profile(2, 0.1)}, coll);
        CHECK(bottom[0].values.at("withindis") == doctest::Approx(0.0));
    }
    SUBCASE("averaged tied ranks") {
        const auto coll = make_pool({{2, 0.2}, {2, 0.4}, {2, 0.8}});
        const auto cal = calibrate_rank({make_profile(2, 0.4)}, coll);
        // pool {0.2, 0.4, 0.4, 0.8}: tied block ranks 2,3 -> 2.5
        CHECK(cal[0].values.at("withindis") == doctest::Approx(0.5));
    }
    SUBCASE("invariant under strictly increasing transforms") {
        const auto coll = make_pool({{2, 0.1}, {2, 0.3}, {2, 0.7}, {2, 0.5}});
        auto transformed = make_pool({});
        for (double v : {0.1, 0.3, 0.7, 0.5}) {
            auto e = coll.entries[0];
            e.profile.values["withindis"].normalised = std::exp(3.0 * v);
            transformed.entries.push_back(e);
        }
        const auto a = calibrate_rank({make_profile(2, 0.4)}, coll);
        auto cand = make_profile(2, std::exp(3.0 * 0.4));
        const auto b = calibrate_rank({cand}, transformed);
        CHECK(a[0].values.at("withindis") == b[0].values.at("withindis"));
    }
}

TEST_CASE("aggregate") {
    CalibratedProfile cal;
    cal.values = {{"withindis", 0.68}, {"psep", 1.79}, {"pearsongamma", 1.86},
                  {"widestgap", 0.45}};
    SUBCASE("unit weights reproduce the published sum") {
        AggregationSpec spec{{"withindis", "psep", "pearsongamma", "widestgap"},
                             {1, 1, 1, 1}};
        CHECK(aggregate(cal, spec) == doctest::Approx(4.78));
    }
    SUBCASE("single index identity") {
        AggregationSpec spec{{"psep"}, {1.0}};
        CHECK(aggregate(cal, spec) == doctest::Approx(1.79));
    }
    SUBCASE("weighted arithmetic") {
        CalibratedProfile two;
        two.values = {{"withindis", 1.0}, {"psep", -2.0}};
        AggregationSpec spec{{"withindis", "psep"}, {2.0, 0.5}};
        CHECK(aggregate(two, spec) == doctest::Approx(1.0));
    }
    SUBCASE("missing index") {
        AggregationSpec spec{{"entropy"}, {1.0}};
        CHECK_THROWS_AS(aggregate(cal, spec), MissingIndex);
    }
    SUBCASE("nonpositive weight") {
        AggregationSpec spec{{"psep"}, {0.0}};
        CHECK_THROWS_AS(aggregate(cal, spec), BadWeight);
    }
    SUBCASE("ordering invariant under index permutation") {
        AggregationSpec fwd{{"withindis", "psep"}, {1.0, 2.0}};
        AggregationSpec rev{{"psep", "withindis"}, {2.0, 1.0}};
        CHECK(aggregate(cal, fwd) == doctest::Approx(aggregate(cal, rev)));
    }
    SUBCASE("normalised weights sum to one") {
        AggregationSpec spec{{"withindis", "psep"}, {3.0, 1.0}};
        const auto norm = spec.normalised();
        CHECK(norm.weights[0] == doctest::Approx(0.75));
        CHECK(norm.weights[1] == doctest::Approx(0.25));
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "clustval/report.hpp"
#include "fixtures.hpp"

using namespace clustval;

TEST_CASE("run_validate produces raw and normalised values") {
    const auto d = fixtures::d6();
    const auto report =
        run_validate(d, {{"A", fixtures::d6_clustering_a()}}, ValidationConfig{});
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].values.at("withindis").normalised == doctest::Approx(8.0 / 9.0));
    CHECK(report.rows[0].k == 2);
}

TEST_CASE("report JSON round-trips idempotently") {
    std::mt19937_64 rng(51);
    const auto d = fixtures::random_cloud(rng, 20);
    ValidationConfig config;
    config.b = 3;
    config.k_max = 4;
    AggregationSpec spec{{"withindis", "psep"}, {1.0, 1.0}};
    std::vector<Candidate> candidates{
        {"a", Clustering::from_labels(fixtures::random_labels(rng, 20, 3))},
        {"b", Clustering::from_labels(fixtures::random_labels(rng, 20, 2))}};
    const auto report = run_compare(d, candidates, config, spec, CalibrationMode::PerK, 7);
    const std::string json1 = report.to_json();
    const std::string json2 = Report::from_json(json1).to_json();
    CHECK(json1 == json2);
}

TEST_CASE("same seed gives byte-identical reports") {
    std::mt19937_64 rng(53);
    const auto d = fixtures::random_cloud(rng, 25);
    ValidationConfig config;
    config.b = 4;
    config.k_max = 4;
    AggregationSpec spec{{"withindis", "psep", "pearsongamma"}, {1.0, 1.0, 1.0}};
    std::vector<Candidate> candidates{
        {"a", Clustering::from_labels(fixtures::random_labels(rng, 25, 3))}};
    const auto r1 = run_compare(d, candidates, config, spec, CalibrationMode::PerK, 99);
    const auto r2 = run_compare(d, candidates, config, spec, CalibrationMode::PerK, 99);
    CHECK(r1.to_json() == r2.to_json());
}

TEST_CASE("rank calibration keeps all cells in [0,1]") {
    std::mt19937_64 rng(57);
    const auto d = fixtures::random_cloud(rng, 20);
    ValidationConfig config;
    config.b = 3;
    config.k_max = 3;
    std::vector<Candidate> candidates{
        {"a", Clustering::from_labels(fixtures::random_labels(rng, 20, 2))},
        {"b", Clustering::from_labels(fixtures::random_labels(rng, 20, 3))}};
    const auto report =
        run_compare(d, candidates, config, {}, CalibrationMode::Rank, 11);
    for (const auto& row : report.rows)
        for (const auto& [id, v] : row.calibrated) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
}

TEST_CASE("rows are sorted by method then K") {
    std::mt19937_64 rng(59);
    const auto d = fixtures::random_cloud(rng, 15);
    std::vector<Candidate> candidates{
        {"zeta", Clustering::from_labels(fixtures::random_labels(rng, 15, 2))},
        {"alpha", Clustering::from_labels(fixtures::random_labels(rng, 15, 4))},
        {"alpha", Clustering::from_labels(fixtures::random_labels(rng, 15, 2))}};
    const auto report = run_validate(d, candidates, ValidationConfig{});
    REQUIRE(report.rows.size() == 3);
    CHECK(report.rows[0].method == "alpha");
    CHECK(report.rows[0].k == 2);
    CHECK(report.rows[1].method == "alpha");
    CHECK(report.rows[1].k == 4);
    CHECK(report.rows[2].method == "zeta");
}

TEST_CASE("truth labels add an ARI column") {
    std::mt19937_64 rng(61);
    const auto d = fixtures::random_cloud(rng, 15);
    ValidationConfig config;
    config.b = 2;
    config.k_max = 3;
    const auto truth = Clustering::from_labels(fixtures::random_labels(rng, 15, 3));
    std::vector<Candidate> candidates{{"same", truth}};
    const auto report = run_compare(d, candidates, config, {}, CalibrationMode::None, 1,
                                    truth);
    REQUIRE(report.rows.size() == 1);
    REQUIRE(report.rows[0].ari.has_value());
    CHECK(*report.rows[0].ari == doctest::Approx(1.0));
}

#include "clustval/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace clustval {

using nlohmann::json;

namespace {

json row_to_json(const ReportRow& row) {
    json j;
    j["method"] = row.method;
    j["K"] = row.k;
    json vals = json::object();
    for (const auto& [id, v] : row.values)
        vals[id] = {{"raw", v.raw}, {"normalised", v.normalised}};
    j["indexes"] = vals;
    if (!row.calibrated.empty()) j["calibrated"] = row.calibrated;
    if (!row.failures.empty()) j["failures"] = row.failures;
    if (row.aggregate) j["aggregate"] = *row.aggregate;
    if (row.ari) j["ari"] = *row.ari;
    return j;
}

ReportRow row_from_json(const json& j) {
    ReportRow row;
    row.method = j.at("method").get<std::string>();
    row.k = j.at("K").get<std::size_t>();
    for (const auto& [id, v] : j.at("indexes").items())
        row.values[id] = IndexValue{id, v.at("raw").get<double>(),
                                    v.at("normalised").get<double>()};
    if (j.contains("calibrated"))
        row.calibrated = j.at("calibrated").get<std::map<std::string, double>>();
    if (j.contains("failures"))
        row.failures = j.at("failures").get<std::map<std::string, std::string>>();
    if (j.contains("aggregate")) row.aggregate = j.at("aggregate").get<double>();
    if (j.contains("ari")) row.ari = j.at("ari").get<double>();
    return row;
}

} // namespace

std::string Report::to_json() const {
    json j;
    j["schema_version"] = schema_version;
    j["command"] = command;
    j["calibration"] = calibration;
    j["seed"] = seed;
    j["config"] = {{"p_sep", config.p_sep}, {"p_dens", config.p_dens},
                   {"k_cv", config.k_cv},   {"K_max", config.k_max},
                   {"B", config.b}};
    j["selected_indexes"] = selected_indexes;
    if (!aggregation.index_ids.empty()) {
        json agg = json::object();
        for (std::size_t i = 0; i < aggregation.index_ids.size(); ++i)
            agg[aggregation.index_ids[i]] = aggregation.weights[i];
        j["weights"] = agg;
    }
    if (!exclusion_counts.empty()) j["exclusion_counts"] = exclusion_counts;
    if (!random_aggregate_by_k.empty()) {
        json byk = json::object();
        for (const auto& [k, a] : random_aggregate_by_k) byk[std::to_string(k)] = a;
        j["random_aggregate_by_k"] = byk;
    }
    json rows_json = json::array();
    for (const auto& row : rows) rows_json.push_back(row_to_json(row));
    j["rows"] = rows_json;
    return j.dump(2);
}

Report Report::from_json(const std::string& text) {
    const json j = json::parse(text);
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    r.command = j.at("command").get<std::string>();
    r.calibration = j.at("calibration").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.config.p_sep = j.at("config").at("p_sep").get<double>();
    r.config.p_dens = j.at("config").at("p_dens").get<double>();
    r.config.k_cv = j.at("config").at("k_cv").get<std::size_t>();
    r.config.k_max = j.at("config").at("K_max").get<std::size_t>();
    r.config.b = j.at("config").at("B").get<std::size_t>();
    r.selected_indexes = j.at("selected_indexes").get<std::vector<std::string>>();
    if (j.contains("weights"))
        for (const auto& [id, w] : j.at("weights").items()) {
            r.aggregation.index_ids.push_back(id);
            r.aggregation.weights.push_back(w.get<double>());
        }
    if (j.contains("exclusion_counts"))
        r.exclusion_counts = j.at("exclusion_counts").get<std::map<std::string, std::size_t>>();
    if (j.contains("random_aggregate_by_k"))
        for (const auto& [k, a] : j.at("random_aggregate_by_k").items())
            r.random_aggregate_by_k[std::stoul(k)] = a.get<double>();
    for (const auto& row : j.at("rows")) r.rows.push_back(row_from_json(row));
    return r;
}

std::string Report::to_table() const {
    std::ostringstream out;
    const bool calibrated = !rows.empty() && !rows.front().calibrated.empty();
    out << std::left << std::setw(16) << "method" << std::right << std::setw(4) << "K";
    for (const auto& id : selected_indexes) out << std::setw(14) << id;
    bool any_a = std::any_of(rows.begin(), rows.end(),
                             [](const ReportRow& r) { return r.aggregate.has_value(); });
    bool any_ari = std::any_of(rows.begin(), rows.end(),
                               [](const ReportRow& r) { return r.ari.has_value(); });
    if (any_a) out << std::setw(14) << "A";
    if (any_ari) out << std::setw(14) << "ARI";
    out << "\n";
    for (const auto& row : rows) {
        out << std::left << std::setw(16) << row.method << std::right << std::setw(4) << row.k;
        for (const auto& id : selected_indexes) {
            std::ostringstream cell;
            if (calibrated) {
                auto it = row.calibrated.find(id);
                if (it != row.calibrated.end())
                    cell << std::fixed << std::setprecision(4) << it->second;
                else
                    cell << "--";
            } else {
                auto it = row.values.find(id);
                if (it != row.values.end())
                    cell << std::fixed << std::setprecision(4) << it->second.normalised;
                else
                    cell << "--";
            }
            out << std::setw(14) << cell.str();
        }
        if (any_a) {
            std::ostringstream cell;
            if (row.aggregate) cell << std::fixed << std::setprecision(4) << *row.aggregate;
            else cell << "--";
            out << std::setw(14) << cell.str();
        }
        if (any_ari) {
            std::ostringstream cell;
            if (row.ari) cell << std::fixed << std::setprecision(4) << *row.ari;
            else cell << "--";
            out << std::setw(14) << cell.str();
        }
        out << "\n";
    }
    return out.str();
}

std::string Report::to_csv() const {
    std::ostringstream out;
    out << "method,K,index,raw,normalised,calibrated\n";
    out << std::setprecision(17);
    for (const auto& row : rows) {
        for (const auto& id : selected_indexes) {
            auto it = row.values.find(id);
            if (it == row.values.end()) continue;
            out << row.method << "," << row.k << "," << id << "," << it->second.raw << ","
                << it->second.normalised << ",";
            auto cit = row.calibrated.find(id);
            if (cit != row.calibrated.end()) out << cit->second;
            out << "\n";
        }
    }
    return out.str();
}

namespace {

void sort_rows(std::vector<ReportRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
        return a.method != b.method ? a.method < b.method : a.k < b.k;
    });
}

std::vector<std::string> effective_selection(const std::vector<std::string>& selected) {
    return selected.empty() ? all_index_ids() : selected;
}

} // namespace

Report run_validate(const DissimilarityMatrix& d, const std::vector<Candidate>& candidates,
                    const ValidationConfig& config,
                    const std::vector<std::string>& selected) {
    config.validate();
    Report report;
    report.command = "validate";
    report.calibration = "none";
    report.config = config;
    report.selected_indexes = effective_selection(selected);

    DensityEstimate est = density_estimate(d, config.p_dens);
    for (const auto& cand : candidates) {
        ProfileResult pr = compute_profile(d, cand.clustering, config, selected, &est);
        ReportRow row;
        row.method = cand.method;
        row.k = cand.clustering.num_clusters();
        row.values = pr.profile.values;
        row.failures = pr.failures;
        report.rows.push_back(std::move(row));
    }
    sort_rows(report.rows);
    return report;
}

Report run_compare(const DissimilarityMatrix& d, const std::vector<Candidate>& candidates,
                   const ValidationConfig& config, const AggregationSpec& spec,
                   CalibrationMode mode, std::uint64_t seed,
                   const std::optional<Clustering>& truth, std::size_t threads,
                   bool normalise_weights) {
    config.validate();
    AggregationSpec agg = spec;
    if (!agg.index_ids.empty()) {
        agg.validate();
        if (normalise_weights) agg = agg.normalised();
    }

    // the profile selection must cover both displayed and aggregated indexes
    std::vector<std::string> selected = effective_selection({});
    Report report;
    report.command = "compare";
    report.calibration = to_string(mode);
    report.seed = seed;
    report.config = config;
    report.selected_indexes = selected;
    report.aggregation = agg;

    DensityEstimate est = density_estimate(d, config.p_dens);
    std::vector<ProfileResult> profiles;
    profiles.reserve(candidates.size());
    for (const auto& cand : candidates)
        profiles.push_back(compute_profile(d, cand.clustering, config, selected, &est));

    RandomClusteringCollection collection;
    if (mode != CalibrationMode::None)
        collection = generate_collection(d, config, seed, selected, threads);
    report.exclusion_counts = collection.exclusion_counts;

    auto calibrate_one = [&](const IndexProfile& profile) -> CalibratedProfile {
        switch (mode) {
            case CalibrationMode::PerK: return calibrate_per_k(profile, collection);
            case CalibrationMode::Pooled: return calibrate_pooled(profile, collection);
            case CalibrationMode::None: {
                CalibratedProfile cp;
                cp.mode = CalibrationMode::None;
                for (const auto& [id, v] : profile.values) cp.values[id] = v.normalised;
                return cp;
            }
            case CalibrationMode::Rank: break; // handled batch-wise below
        }
        return {};
    };

    std::vector<CalibratedProfile> calibrated(candidates.size());
    if (mode == CalibrationMode::Rank) {
        std::vector<IndexProfile> cand_profiles;
        for (const auto& pr : profiles) cand_profiles.push_back(pr.profile);
        calibrated = calibrate_rank(cand_profiles, collection);
    } else {
        for (std::size_t i = 0; i < candidates.size(); ++i)
            calibrated[i] = calibrate_one(profiles[i].profile);
    }

    for (std::size_t i = 0; i < candidates.size(); ++i) {
        ReportRow row;
        row.method = candidates[i].method;
        row.k = candidates[i].clustering.num_clusters();
        row.values = profiles[i].profile.values;
        row.calibrated = calibrated[i].values;
        row.failures = profiles[i].failures;
        for (const auto& [id, why] : calibrated[i].failures)
            row.failures.emplace("calibration:" + id, why);
        if (!agg.index_ids.empty()) {
            try {
                row.aggregate = aggregate(calibrated[i], agg);
            } catch (const ValidationError& err) {
                row.failures.emplace("aggregate", err.what());
            }
        }
        if (truth) row.ari = adjusted_rand(candidates[i].clustering, *truth);
        report.rows.push_back(std::move(row));
    }
    sort_rows(report.rows);

    // A(C) of the random pool itself, per K (bias check for the selection)
    if (mode != CalibrationMode::None && !agg.index_ids.empty()) {
        std::map<std::size_t, std::pair<double, std::size_t>> acc;
        for (const auto& e : collection.entries) {
            CalibratedProfile cp;
            if (mode == CalibrationMode::Rank)
                cp = calibrate_rank({e.profile}, collection)[0];
            else
                cp = mode == CalibrationMode::PerK ? calibrate_per_k(e.profile, collection)
                                                   : calibrate_pooled(e.profile, collection);
            try {
                const double a = aggregate(cp, agg);
                acc[e.k].first += a;
                acc[e.k].second++;
            } catch (const ValidationError&) {
                // degenerate random clustering: skip from the bias column
            }
        }
        for (const auto& [k, sum_count] : acc)
            if (sum_count.second > 0)
                report.random_aggregate_by_k[k] =
                    sum_count.first / static_cast<double>(sum_count.second);
    }
    return report;
}

} // namespace clustval

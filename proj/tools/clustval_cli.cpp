#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clustval/io.hpp"
#include "clustval/report.hpp"

namespace {

using namespace clustval;

struct InputOpts {
    std::string dissim_path;
    std::string points_path;
    std::string metric = "euclidean";
};

DissimilarityMatrix load_input(const InputOpts& in) {
    if (!in.dissim_path.empty() && !in.points_path.empty())
        throw MalformedInput("give either --dissim or --points, not both");
    if (!in.dissim_path.empty())
        return DissimilarityMatrix::from_matrix(read_matrix_csv(in.dissim_path));
    if (!in.points_path.empty())
        return DissimilarityMatrix::from_points(
            read_points_csv(in.points_path, metric_from_string(in.metric)));
    throw MalformedInput("an input is required: --dissim FILE or --points FILE");
}

std::optional<PointDataset> load_points(const InputOpts& in) {
    if (in.points_path.empty()) return std::nullopt;
    return read_points_csv(in.points_path, metric_from_string(in.metric));
}

std::vector<Candidate> load_label_candidates(const std::vector<std::string>& paths,
                                             std::size_t n) {
    std::vector<Candidate> out;
    for (const auto& path : paths) {
        const auto raw = read_labels(path);
        if (raw.size() != n)
            throw MalformedInput("label file '" + path + "' has " +
                                 std::to_string(raw.size()) + " labels, expected " +
                                 std::to_string(n));
        out.push_back({path, Clustering::from_labels(raw)});
    }
    return out;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<std::string> parse_indexes(const std::string& csv) {
    auto ids = split_list(csv);
    for (const auto& id : ids) {
        if (!is_known_index(id)) {
            std::string valid;
            for (const auto& v : all_index_ids()) valid += (valid.empty() ? "" : ", ") + v;
            throw MalformedInput("unknown index id '" + id + "' (valid: " + valid + ")");
        }
    }
    return ids;
}

AggregationSpec parse_weights(const std::string& spec_str) {
    AggregationSpec spec;
    for (const auto& item : split_list(spec_str)) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw MalformedInput("weight entry '" + item + "' is not of the form id=w");
        const std::string id = item.substr(0, eq);
        if (!is_known_index(id)) throw MalformedInput("unknown index id '" + id + "' in weights");
        spec.index_ids.push_back(id);
        try {
            spec.weights.push_back(std::stod(item.substr(eq + 1)));
        } catch (const std::exception&) {
            throw MalformedInput("bad weight in '" + item + "'");
        }
    }
    spec.validate();
    return spec;
}

std::pair<std::size_t, std::size_t> parse_k_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos)
        throw MalformedInput("--k-range must look like A..B");
    try {
        const std::size_t a = std::stoul(s.substr(0, dots));
        const std::size_t b = std::stoul(s.substr(dots + 2));
        if (a < 1 || b < a) throw MalformedInput("empty K range '" + s + "'");
        return {a, b};
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw MalformedInput("bad K range '" + s + "'");
    }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
    if (seed) return *seed;
    std::random_device rd;
    const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::cerr << "note: no --seed given, using entropy-derived seed " << s << "\n";
    return s;
}

void emit(const Report& report, const std::string& format, const std::string& output) {
    std::string text;
    if (format == "json") text = report.to_json() + "\n";
    else if (format == "csv") text = report.to_csv();
    else text = report.to_table();
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw MalformedInput("cannot write output file '" + output + "'");
        out << text;
    }
}

std::vector<Candidate> run_method_sweep(const DissimilarityMatrix& d,
                                        const std::optional<PointDataset>& points,
                                        const std::vector<std::string>& methods,
                                        std::size_t k_lo, std::size_t k_hi,
                                        std::uint64_t seed) {
    std::vector<Candidate> out;
    for (const auto& method : methods) {
        for (std::size_t k = k_lo; k <= k_hi; ++k) {
            const std::string tag = method + "-" + std::to_string(k);
            if (method == "kmeans") {
                if (!points)
                    throw MalformedInput("method 'kmeans' needs --points input");
                out.push_back({tag, kmeans(*points, k, seed).clustering});
            } else if (method == "pam") {
                out.push_back({tag, pam(d, k).clustering});
            } else if (method == "single") {
                out.push_back({tag, linkage(d, LinkageMethod::Single, k).clustering});
            } else if (method == "average") {
                out.push_back({tag, linkage(d, LinkageMethod::Average, k).clustering});
            } else {
                throw MalformedInput("unknown method '" + method +
                                     "' (valid: kmeans, pam, single, average)");
            }
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multidimensional cluster validation profiles with random-baseline calibration"};
    app.require_subcommand(1);

    InputOpts input;
    std::vector<std::string> label_files;
    std::string truth_file, indexes_csv, weights_csv, calibration = "per-k";
    std::string format = "table", output, methods_csv, k_range_str;
    std::optional<std::uint64_t> seed_opt;
    std::size_t threads = 1;
    bool normalise_weights = false;
    ValidationConfig config;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--dissim", input.dissim_path, "dissimilarity matrix CSV");
        cmd->add_option("--points", input.points_path, "points CSV");
        cmd->add_option("--metric", input.metric, "euclidean|manhattan")
            ->check(CLI::IsMember({"euclidean", "manhattan"}));
        cmd->add_option("--format", format, "table|json|csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        cmd->add_option("--output,-o", output, "write report to file instead of stdout");
        cmd->add_option("--p-sep", config.p_sep, "separation portion");
        cmd->add_option("--p-dens", config.p_dens, "density quantile portion");
        cmd->add_option("--k-cv", config.k_cv, "neighbour order for cvdens");
        cmd->add_option("--kmax", config.k_max, "maximum number of clusters of interest");
    };

    auto* validate = app.add_subcommand("validate", "normalised index profiles for clusterings");
    add_common(validate);
    validate->add_option("--labels", label_files, "label file, one integer per line (repeatable)")
        ->required();
    validate->add_option("--indexes", indexes_csv, "comma-separated index ids");

    auto* compare = app.add_subcommand(
        "compare", "calibrate against random clusterings and aggregate");
    add_common(compare);
    compare->add_option("--labels", label_files, "candidate label file (repeatable)");
    compare->add_option("--methods", methods_csv, "method sweep: kmeans,pam,single,average");
    compare->add_option("--k-range", k_range_str, "A..B cluster counts for the sweep");
    compare->add_option("--truth", truth_file, "reference labels for the ARI column");
    compare->add_option("--indexes", indexes_csv, "comma-separated index ids to display");
    compare->add_option("--weights", weights_csv, "aggregation weights: id=w,id=w,...");
    compare->add_option("--calibration", calibration, "per-k|pooled|rank|none")
        ->check(CLI::IsMember({"per-k", "pooled", "rank", "none"}));
    compare->add_option("--B", config.b, "random clusterings per generator per K");
    compare->add_option("--seed", seed_opt, "master seed for all randomness");
    compare->add_option("--threads", threads, "worker threads for the random collection");
    compare->add_flag("--normalise-weights", normalise_weights, "rescale weights to sum 1");

    std::string generator = "stupidcent";
    std::size_t random_k = 2;
    auto* random_cmd = app.add_subcommand("random", "emit one random baseline clustering");
    add_common(random_cmd);
    random_cmd->add_option("--K", random_k, "number of clusters")->required();
    random_cmd->add_option("--generator", generator, "stupidcent|stupidnn");
    random_cmd->add_option("--seed", seed_opt, "master seed");

    CLI11_PARSE(app, argc, argv);

    try {
        const DissimilarityMatrix d = load_input(input);

        if (validate->parsed()) {
            const auto selected = indexes_csv.empty() ? std::vector<std::string>{}
                                                      : parse_indexes(indexes_csv);
            const auto candidates = load_label_candidates(label_files, d.size());
            Report report = run_validate(d, candidates, config, selected);
            emit(report, format, output);
            return 0;
        }

        if (compare->parsed()) {
            std::vector<Candidate> candidates = load_label_candidates(label_files, d.size());
            const std::uint64_t seed = resolve_seed(seed_opt);
            if (!methods_csv.empty()) {
                auto [k_lo, k_hi] = k_range_str.empty()
                                        ? std::pair<std::size_t, std::size_t>{2, config.k_max}
                                        : parse_k_range(k_range_str);
                auto points = load_points(input);
                auto swept = run_method_sweep(d, points, split_list(methods_csv), k_lo, k_hi, seed);
                candidates.insert(candidates.end(), swept.begin(), swept.end());
            }
            if (candidates.empty())
                throw MalformedInput("compare needs --labels files and/or --methods");
            if (!indexes_csv.empty()) parse_indexes(indexes_csv); // validate ids early
            AggregationSpec spec;
            if (!weights_csv.empty()) spec = parse_weights(weights_csv);
            std::optional<Clustering> truth;
            if (!truth_file.empty()) {
                const auto raw = read_labels(truth_file);
                if (raw.size() != d.size())
                    throw MalformedInput("truth file '" + truth_file + "' has wrong length");
                truth = Clustering::from_labels(raw);
            }
            Report report = run_compare(d, candidates, config, spec,
                                        calibration_mode_from_string(calibration), seed, truth,
                                        threads, normalise_weights);
            if (!indexes_csv.empty()) report.selected_indexes = parse_indexes(indexes_csv);
            emit(report, format, output);
            return 0;
        }

        if (random_cmd->parsed()) {
            const std::uint64_t seed = resolve_seed(seed_opt);
            const Generator g = generator_from_string(generator);
            const SeedPlan plan{seed};
            const std::uint64_t sub = plan.substream(g, random_k, 0);
            const Clustering c = g == Generator::StupidCentroids
                                     ? stupid_kcentroids(d, random_k, sub)
                                     : stupid_nn(d, random_k, sub);
            std::ostream* out = &std::cout;
            std::ofstream file;
            if (!output.empty()) {
                file.open(output);
                if (!file) throw MalformedInput("cannot write '" + output + "'");
                out = &file;
            }
            for (int l : c.one_based_labels()) *out << l << "\n";
            return 0;
        }
    } catch (const ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}

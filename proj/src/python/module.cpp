#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clustval/report.hpp"

namespace py = pybind11;
using namespace clustval;

namespace {

DissimilarityMatrix matrix_from_rows(const std::vector<std::vector<double>>& rows,
                                     double tolerance) {
    return DissimilarityMatrix::from_matrix(rows, tolerance);
}

py::dict profile_to_dict(const ProfileResult& pr) {
    py::dict values;
    for (const auto& [id, v] : pr.profile.values)
        values[py::str(id)] = py::make_tuple(v.raw, v.normalised);
    py::dict failures;
    for (const auto& [id, why] : pr.failures) failures[py::str(id)] = why;
    py::dict out;
    out["K"] = pr.profile.num_clusters;
    out["values"] = values;
    out["failures"] = failures;
    return out;
}

} // namespace

PYBIND11_MODULE(_clustval, m) {
    m.doc() = "Cluster validation profiles with random-baseline calibration";

    py::register_exception<ValidationError>(m, "ValidationError");

    py::class_<DissimilarityMatrix>(m, "DissimilarityMatrix")
        .def_static("from_matrix", &matrix_from_rows, py::arg("rows"),
                    py::arg("tolerance") = 1e-9)
        .def_static("from_points",
                    [](const std::vector<std::vector<double>>& pts, const std::string& metric) {
                        return DissimilarityMatrix::from_points(
                            PointDataset(pts, metric_from_string(metric)));
                    },
                    py::arg("points"), py::arg("metric") = "euclidean")
        .def("__len__", &DissimilarityMatrix::size)
        .def("at", &DissimilarityMatrix::at)
        .def_property_readonly("d_max", &DissimilarityMatrix::d_max);

    py::class_<Clustering>(m, "Clustering")
        .def_static("from_labels", &Clustering::from_labels)
        .def("__len__", &Clustering::size)
        .def_property_readonly("K", &Clustering::num_clusters)
        .def_property_readonly("labels", &Clustering::one_based_labels)
        .def_property_readonly("sizes", [](const Clustering& c) { return c.sizes(); });

    m.def("index_ids", [] { return all_index_ids(); });

    m.def("profile",
          [](const DissimilarityMatrix& d, const Clustering& c, double p_sep, double p_dens,
             std::size_t k_cv, std::size_t k_max, const std::vector<std::string>& indexes) {
              ValidationConfig config;
              config.p_sep = p_sep;
              config.p_dens = p_dens;
              config.k_cv = k_cv;
              config.k_max = k_max;
              return profile_to_dict(compute_profile(d, c, config, indexes));
          },
          py::arg("dissim"), py::arg("clustering"), py::arg("p_sep") = 0.1,
          py::arg("p_dens") = 0.1, py::arg("k_cv") = 4, py::arg("k_max") = 10,
          py::arg("indexes") = std::vector<std::string>{},
          "Raw and normalised index values for one clustering");

    m.def("stupid_kcentroids",
          [](const DissimilarityMatrix& d, std::size_t k, std::uint64_t seed) {
              return stupid_kcentroids(d, k, seed);
          },
          py::arg("dissim"), py::arg("K"), py::arg("seed"));
    m.def("stupid_nn",
          [](const DissimilarityMatrix& d, std::size_t k, std::uint64_t seed) {
              return stupid_nn(d, k, seed);
          },
          py::arg("dissim"), py::arg("K"), py::arg("seed"));

    m.def("pam", [](const DissimilarityMatrix& d, std::size_t k) {
        auto r = pam(d, k);
        return py::make_tuple(r.clustering, r.objective, r.medoid_ids);
    });
    m.def("linkage",
          [](const DissimilarityMatrix& d, const std::string& method, std::size_t k) {
              const LinkageMethod lm = method == "single" ? LinkageMethod::Single
                                                          : LinkageMethod::Average;
              if (method != "single" && method != "average")
                  throw MalformedInput("linkage method must be single or average");
              return linkage(d, lm, k).clustering;
          });
    m.def("kmeans",
          [](const std::vector<std::vector<double>>& pts, std::size_t k, std::uint64_t seed,
             std::size_t restarts) {
              auto r = kmeans(PointDataset(pts, Metric::Euclidean), k, seed, restarts);
              return py::make_tuple(r.clustering, r.objective, r.centers);
          },
          py::arg("points"), py::arg("K"), py::arg("seed"), py::arg("restarts") = 10);
    m.def("adjusted_rand", &adjusted_rand);

    m.def("compare",
          [](const DissimilarityMatrix& d, const std::vector<std::vector<int>>& label_sets,
             const std::map<std::string, double>& weights, const std::string& calibration,
             std::size_t k_max, std::size_t b, std::uint64_t seed, std::size_t threads) {
              ValidationConfig config;
              config.k_max = k_max;
              config.b = b;
              std::vector<Candidate> candidates;
              for (std::size_t i = 0; i < label_sets.size(); ++i)
                  candidates.push_back({"labels-" + std::to_string(i),
                                        Clustering::from_labels(label_sets[i])});
              AggregationSpec spec;
              for (const auto& [id, w] : weights) {
                  spec.index_ids.push_back(id);
                  spec.weights.push_back(w);
              }
              Report r = run_compare(d, candidates, config, spec,
                                     calibration_mode_from_string(calibration), seed,
                                     std::nullopt, threads);
              return r.to_json();
          },
          py::arg("dissim"), py::arg("label_sets"), py::arg("weights"),
          py::arg("calibration") = "per-k", py::arg("k_max") = 10, py::arg("B") = 100,
          py::arg("seed") = 1, py::arg("threads") = 1,
          "Full compare pipeline; returns the JSON report");
}

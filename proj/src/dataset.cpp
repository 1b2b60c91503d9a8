#include "clustval/dataset.hpp"

#include <algorithm>
#include <cmath>

namespace clustval {

Metric metric_from_string(const std::string& name) {
    if (name == "euclidean") return Metric::Euclidean;
    if (name == "manhattan") return Metric::Manhattan;
    throw MalformedInput("unknown metric '" + name + "' (valid: euclidean, manhattan)");
}

std::string to_string(Metric m) {
    return m == Metric::Euclidean ? "euclidean" : "manhattan";
}

PointDataset::PointDataset(std::vector<std::vector<double>> coords, Metric metric)
    : coords_(std::move(coords)), metric_(metric) {
    if (coords_.empty()) throw MalformedInput("point dataset is empty");
    const std::size_t p = coords_[0].size();
    if (p < 1) throw MalformedInput("points must have dimension >= 1");
    for (const auto& row : coords_) {
        if (row.size() != p)
            throw MalformedInput("points have inconsistent dimensions");
    }
}

double PointDataset::distance(std::size_t i, std::size_t j) const {
    const auto& a = coords_[i];
    const auto& b = coords_[j];
    double acc = 0.0;
    if (metric_ == Metric::Euclidean) {
        for (std::size_t k = 0; k < a.size(); ++k) {
            const double diff = a[k] - b[k];
            acc += diff * diff;
        }
        return std::sqrt(acc);
    }
    for (std::size_t k = 0; k < a.size(); ++k) acc += std::fabs(a[k] - b[k]);
    return acc;
}

DissimilarityMatrix::DissimilarityMatrix(std::size_t n, std::vector<double> data)
    : n_(n), data_(std::move(data)), d_max_(0.0) {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            d_max_ = std::max(d_max_, data_[i * n_ + j]);
}

DissimilarityMatrix DissimilarityMatrix::from_points(const PointDataset& points) {
    const std::size_t n = points.size();
    if (n < 2) throw InputTooSmall("need at least 2 points, got " + std::to_string(n));
    std::vector<double> data(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = points.distance(i, j);
            data[i * n + j] = d;
            data[j * n + i] = d;
        }
    }
    return DissimilarityMatrix(n, std::move(data));
}

DissimilarityMatrix DissimilarityMatrix::from_matrix(
    const std::vector<std::vector<double>>& matrix, double tolerance) {
    const std::size_t n = matrix.size();
    if (n < 2) throw InputTooSmall("dissimilarity matrix must be at least 2x2");
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i].size() != n)
            throw MalformedInput("dissimilarity matrix is not square (row " +
                                 std::to_string(i) + " has " +
                                 std::to_string(matrix[i].size()) + " entries)");
    }
    std::vector<double> data(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (std::fabs(matrix[i][i]) > tolerance)
            throw BadDiagonal("nonzero diagonal entry " + std::to_string(matrix[i][i]) +
                              " at position " + std::to_string(i));
        for (std::size_t j = i + 1; j < n; ++j) {
            const double a = matrix[i][j];
            const double b = matrix[j][i];
            if (a < 0.0 || b < 0.0)
                throw NegativeDissimilarity("negative dissimilarity at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
            if (std::fabs(a - b) > tolerance)
                throw AsymmetricInput("entries (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") differ by " +
                                      std::to_string(std::fabs(a - b)));
            const double d = 0.5 * (a + b);
            data[i * n + j] = d;
            data[j * n + i] = d;
        }
    }
    return DissimilarityMatrix(n, std::move(data));
}

std::vector<double> DissimilarityMatrix::pair_values() const {
    std::vector<double> out;
    out.reserve(n_ * (n_ - 1) / 2);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            out.push_back(data_[i * n_ + j]);
    return out;
}

} // namespace clustval

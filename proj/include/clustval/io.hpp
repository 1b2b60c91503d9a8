#ifndef CLUSTVAL_IO_HPP
#define CLUSTVAL_IO_HPP

#include <string>
#include <vector>

#include "clustval/clustering.hpp"
#include "clustval/dataset.hpp"

namespace clustval {

// n x n numeric CSV; a header row/column is auto-detected by a non-numeric
// first cell.
std::vector<std::vector<double>> read_matrix_csv(const std::string& path);

// n rows x p numeric columns.
PointDataset read_points_csv(const std::string& path, Metric metric);

// One integer label per line.
std::vector<int> read_labels(const std::string& path);

void write_labels(const std::string& path, const std::vector<int>& labels);

} // namespace clustval

#endif

#include "clustval/io.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace clustval {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        // trim whitespace
        std::size_t b = 0, e = field.size();
        while (b < e && std::isspace(static_cast<unsigned char>(field[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(field[e - 1]))) --e;
        out.push_back(field.substr(b, e - b));
    }
    return out;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

std::vector<std::vector<std::string>> read_csv_cells(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open file '" + path + "'");
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        rows.push_back(split_csv_line(line));
    }
    if (rows.empty()) throw MalformedInput("file '" + path + "' is empty");
    return rows;
}

} // namespace

std::vector<std::vector<double>> read_matrix_csv(const std::string& path) {
    auto cells = read_csv_cells(path);
    double tmp;
    bool header_row = false;
    for (const auto& cell : cells[0])
        if (!parse_double(cell, tmp)) header_row = true;
    std::size_t first_row = header_row ? 1 : 0;
    if (first_row >= cells.size()) throw MalformedInput("no data rows in '" + path + "'");
    const bool header_col = !parse_double(cells[first_row][0], tmp);
    const std::size_t first_col = header_col ? 1 : 0;

    std::vector<std::vector<double>> matrix;
    for (std::size_t r = first_row; r < cells.size(); ++r) {
        std::vector<double> row;
        for (std::size_t col = first_col; col < cells[r].size(); ++col) {
            double v;
            if (!parse_double(cells[r][col], v))
                throw MalformedInput("non-numeric cell '" + cells[r][col] + "' in '" + path +
                                     "' row " + std::to_string(r + 1));
            row.push_back(v);
        }
        matrix.push_back(std::move(row));
    }
    return matrix;
}

PointDataset read_points_csv(const std::string& path, Metric metric) {
    auto cells = read_csv_cells(path);
    double tmp;
    const std::size_t first_row = parse_double(cells[0][0], tmp) ? 0 : 1;
    std::vector<std::vector<double>> coords;
    for (std::size_t r = first_row; r < cells.size(); ++r) {
        std::vector<double> row;
        for (const auto& cell : cells[r]) {
            double v;
            if (!parse_double(cell, v))
                throw MalformedInput("non-numeric cell '" + cell + "' in '" + path + "'");
            row.push_back(v);
        }
        coords.push_back(std::move(row));
    }
    return PointDataset(std::move(coords), metric);
}

std::vector<int> read_labels(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open label file '" + path + "'");
    std::vector<int> labels;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            labels.push_back(std::stoi(line));
        } catch (const std::exception&) {
            throw MalformedInput("non-integer label '" + line + "' in '" + path + "'");
        }
    }
    if (labels.empty()) throw MalformedInput("label file '" + path + "' is empty");
    return labels;
}

void write_labels(const std::string& path, const std::vector<int>& labels) {
    std::ofstream out(path);
    if (!out) throw MalformedInput("cannot write label file '" + path + "'");
    for (int l : labels) out << l << "\n";
}

} // namespace clustval

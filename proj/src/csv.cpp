#include "exlasso/csv.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>

namespace exlasso {

namespace {

struct Row {
    int line = 0;  // 1-based position in the file
    std::vector<std::string> fields;
};

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else if (c != '\r') {
            current += c;
        }
    }
    fields.push_back(current);
    return fields;
}

std::string trimmed(const std::string& s) {
    std::size_t begin = 0, end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

std::optional<double> parse_double(const std::string& raw) {
    const std::string field = trimmed(raw);
    if (field.empty()) return std::nullopt;
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value)) return std::nullopt;
    return value;
}

std::vector<Row> read_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CsvError("cannot open file: " + path, path);
    std::vector<Row> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trimmed(line).empty()) continue;
        rows.push_back(Row{line_no, split_fields(line)});
    }
    if (rows.empty()) throw CsvError("empty file: " + path, path);
    return rows;
}

bool fully_numeric(const Row& row) {
    for (const std::string& f : row.fields) {
        if (!parse_double(f)) return false;
    }
    return true;
}

}  // namespace

Matrix read_csv_matrix(const std::string& path) {
    const std::vector<Row> rows = read_rows(path);

    std::size_t first = 0;
    if (!fully_numeric(rows[0])) {
        first = 1;  // header row
        if (rows.size() == 1) {
            throw CsvError("no data rows after header: " + path, path, rows[0].line);
        }
    }

    const std::size_t cols = rows[first].fields.size();
    Matrix out(static_cast<Eigen::Index>(rows.size() - first), static_cast<Eigen::Index>(cols));
    for (std::size_t r = first; r < rows.size(); ++r) {
        const Row& row = rows[r];
        if (row.fields.size() != cols) {
            throw CsvError("ragged row in " + path + " at line " + std::to_string(row.line) +
                               ": expected " + std::to_string(cols) + " fields, found " +
                               std::to_string(row.fields.size()),
                           path, row.line);
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const std::optional<double> value = parse_double(row.fields[c]);
            if (!value) {
                throw CsvError("non-numeric field in " + path + " at line " +
                                   std::to_string(row.line) + ", column " +
                                   std::to_string(c + 1) + ": '" + trimmed(row.fields[c]) + "'",
                               path, row.line, static_cast<int>(c + 1));
            }
            out(static_cast<Eigen::Index>(r - first), static_cast<Eigen::Index>(c)) = *value;
        }
    }
    return out;
}

Vector read_csv_vector(const std::string& path) {
    const Matrix m = read_csv_matrix(path);
    if (m.cols() == 1) return m.col(0);
    if (m.rows() == 1) return m.row(0).transpose();
    throw CsvError("expected a single column (or row) in " + path + ", found " +
                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()),
                   path);
}

std::vector<std::vector<int>> read_group_file(const std::string& path, int p) {
    const Matrix m = read_csv_matrix(path);
    if (m.cols() != 2) {
        throw CsvError("group file " + path + " must have two columns (column_index,group_id)",
                       path);
    }
    std::map<long, std::vector<int>> by_id;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        const double raw_index = m(r, 0);
        const double raw_id = m(r, 1);
        if (raw_index != std::floor(raw_index) || raw_id != std::floor(raw_id)) {
            throw CsvError("group file " + path + " row " + std::to_string(r + 1) +
                               ": entries must be integers",
                           path, static_cast<int>(r + 1));
        }
        const int index = static_cast<int>(raw_index);
        if (index < 1 || index > p) {
            throw CsvError("group file " + path + " row " + std::to_string(r + 1) +
                               ": column index " + std::to_string(index) + " outside 1.." +
                               std::to_string(p),
                           path, static_cast<int>(r + 1));
        }
        by_id[static_cast<long>(raw_id)].push_back(index - 1);
    }
    std::vector<std::vector<int>> groups;
    groups.reserve(by_id.size());
    for (auto& [id, members] : by_id) groups.push_back(std::move(members));
    return groups;
}

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

}  // namespace exlasso

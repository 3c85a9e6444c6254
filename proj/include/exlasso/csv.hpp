#pragma once

#include <string>
#include <vector>

#include "exlasso/errors.hpp"
#include "exlasso/types.hpp"

namespace exlasso {

struct CsvError : Error {
    std::string path;
    int line = 0;    // 1-based; 0 when not tied to a line
    int column = 0;  // 1-based; 0 when not tied to a column
    CsvError(const std::string& msg, std::string file, int ln = 0, int col = 0)
        : Error(msg), path(std::move(file)), line(ln), column(col) {}
};

/// Comma-separated numeric matrix. A non-numeric first row is treated as a
/// header and skipped; ragged or non-numeric rows are rejected with the
/// offending file, line, and column named.
Matrix read_csv_matrix(const std::string& path);

/// Single-column (or single-row) CSV as a vector.
Vector read_csv_vector(const std::string& path);

/// Group file: one "column_index,group_id" line per predictor, 1-based
/// indices, optional header. Returns 0-based per-group index lists ordered
/// by ascending group id.
std::vector<std::vector<int>> read_group_file(const std::string& path, int p);

/// Shortest text that round-trips a double (17 significant digits).
std::string format_double(double value);

}  // namespace exlasso

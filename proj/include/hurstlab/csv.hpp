#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <string>
#include <system_error>
#include <vector>

#include "hurstlab/errors.hpp"

namespace hurstlab {

/// One numeric column read from CSV, with per-value source line numbers so
/// diagnostics can point at the offending line.  Accepted layouts: a single
/// value per line, or `timestamp,value` where the timestamp is kept for
/// reports but ignored for computation.  Lines starting with '#' and blank
/// lines are skipped; an optional non-numeric first row is treated as a
/// header.
struct CsvSeries {
    std::vector<double> values;
    std::vector<std::size_t> line_numbers;  // 1-based
    std::vector<std::string> timestamps;    // empty unless two-column input
    std::optional<std::string> header;
};

namespace detail {

inline bool parse_double(const std::string& text, double& out) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end && !text.empty();
}

inline std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace detail

inline CsvSeries read_series_csv(std::istream& in) {
    CsvSeries out;
    std::string line;
    std::size_t lineno = 0;
    bool first_content = true;
    int n_columns = 0;  // fixed by the first data row

    while (std::getline(in, line)) {
        ++lineno;
        line = detail::strip_cr(line);
        if (lineno == 1 && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0)
            line.erase(0, 3);  // UTF-8 BOM
        if (line.empty() || line[0] == '#') continue;

        const std::size_t comma = line.find(',');
        if (comma != std::string::npos && line.find(',', comma + 1) != std::string::npos)
            throw CsvParseError(lineno, "expected at most 2 columns");

        const int cols = comma == std::string::npos ? 1 : 2;
        const std::string value_field = cols == 1 ? line : line.substr(comma + 1);
        const std::string time_field = cols == 1 ? std::string() : line.substr(0, comma);

        double v = 0.0;
        if (!detail::parse_double(value_field, v)) {
            if (first_content) {  // header row
                out.header = line;
                first_content = false;
                continue;
            }
            throw CsvParseError(lineno, "cannot parse '" + value_field + "' as a number");
        }
        if (!std::isfinite(v))
            throw CsvParseError(lineno, "non-finite value '" + value_field + "'");

        if (out.values.empty())
            n_columns = cols;
        else if (cols != n_columns)
            throw CsvParseError(lineno, "inconsistent column count");

        first_content = false;
        out.values.push_back(v);
        out.line_numbers.push_back(lineno);
        if (cols == 2) out.timestamps.push_back(time_field);
    }
    return out;
}

inline CsvSeries read_series_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file '" + path.string() + "'");
    return read_series_csv(in);
}

/// Writes via a temp file in the target directory and renames into place,
/// so an aborted run never leaves a truncated file at `path`.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open output file '" + tmp.string() + "'");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            out.close();
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw Error("failed while writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignore;
        std::filesystem::remove(tmp, ignore);
        throw Error("cannot move output into place at '" + path.string() + "': " + ec.message());
    }
}

/// Fixed numeric formatting shared by every emitter, so identical doubles
/// always print identically.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace hurstlab

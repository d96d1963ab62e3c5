#pragma once

// Result documents for the command-line tool. Every number goes through
// `rounded` so JSON and CSV carry identical 12-significant-digit values.

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unistd.h>
#include <vector>

namespace cli {

using Json = nlohmann::ordered_json;

/// x rounded to 12 significant digits; non-finite values become null.
inline Json rounded(double x) {
    if (!std::isfinite(x)) return nullptr;
    if (x == 0.0) return 0.0;  // no "-0.0"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

/// A table of records with a fixed column order, the CSV view of a result.
struct Table {
    std::vector<std::string> columns;
    std::vector<Json> rows;  // ordered objects keyed by `columns`
};

inline std::string csv_cell(const Json& v) {
    if (v.is_null()) return "nan";
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }
    return v.dump();
}

/// CSV: optional "# key=value" summary lines, then a header and the rows.
inline std::string to_csv(const Json& summary, const Table& table) {
    std::ostringstream os;
    for (const auto& [k, v] : summary.items()) os << "# " << k << "=" << csv_cell(v) << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            const auto it = row.find(table.columns[i]);
            os << (i ? "," : "") << (it == row.end() ? std::string() : csv_cell(*it));
        }
        os << "\n";
    }
    return os.str();
}

/// Writes to `path` through a temporary file and a rename; "-" or empty is stdout.
inline void write_atomically(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
        std::fflush(stdout);
        return;
    }
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << text;
        out.flush();
        if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename onto " + target.string() + ": " + ec.message());
    }
}

}  // namespace cli

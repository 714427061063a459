#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qchaos::io {

// Shortest decimal form that round-trips the exact double.
inline std::string fmt(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string fmt(int v) { return std::to_string(v); }
inline std::string fmt(std::uint64_t v) { return std::to_string(v); }

inline std::string fmt(const std::string& v) { return v; }
inline std::string fmt(const char* v) { return v; }

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    template <typename... Vals>
    void add_row(Vals... vals) {
        rows.push_back({fmt(vals)...});
    }
};

inline bool is_json_number(const std::string& cell) {
    double parsed = 0.0;
    const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), parsed);
    return res.ec == std::errc() && res.ptr == cell.data() + cell.size();
}

inline void write_table(const Table& t, const std::filesystem::path& base, bool as_json) {
    std::filesystem::path path = base;
    path += as_json ? ".json" : ".csv";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path.string());
    if (as_json) {
        out << "[\n";
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            out << "  {";
            for (std::size_t c = 0; c < t.columns.size(); ++c) {
                const std::string& cell = t.rows[r][c];
                out << '"' << t.columns[c] << "\": ";
                if (is_json_number(cell))
                    out << cell;
                else
                    out << '"' << cell << '"';
                if (c + 1 < t.columns.size()) out << ", ";
            }
            out << (r + 1 < t.rows.size() ? "},\n" : "}\n");
        }
        out << "]\n";
    } else {
        for (std::size_t c = 0; c < t.columns.size(); ++c)
            out << t.columns[c] << (c + 1 < t.columns.size() ? "," : "\n");
        for (const auto& row : t.rows)
            for (std::size_t c = 0; c < row.size(); ++c)
                out << row[c] << (c + 1 < row.size() ? "," : "\n");
    }
}

} // namespace qchaos::io

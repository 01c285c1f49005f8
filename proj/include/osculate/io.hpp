#pragma once

// Problem files (JSON), result emission (JSON / CSV) and grid specs.
//
// Every double written by this library goes through format_double(), which
// emits the shortest decimal string that parses back to the same value.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "osculate/core.hpp"
#include "osculate/error.hpp"

namespace osculate {

inline std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw Error(ErrorKind::ValidationError, "cannot format number");
    return std::string(buf, end);
}

struct ProblemFile {
    std::vector<double> nodes;
    std::size_t m = 0;
    std::vector<std::vector<double>> derivatives;
    std::optional<std::string> label;

    NodeSet node_set() const { return NodeSet(nodes); }
    OsculatoryData data() const { return OsculatoryData(Matrix::from_rows(derivatives)); }

    friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

namespace detail {

inline std::string line_col(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < byte; ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

inline double json_number(const nlohmann::json& v, const std::string& where) {
    if (!v.is_number()) throw Error(ErrorKind::SchemaError, where + ": expected a number, got " + v.type_name());
    return v.get<double>();
}

inline std::string json_list(std::span<const double> xs) {
    std::string out = "[";
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k) out += ", ";
        out += format_double(xs[k]);
    }
    return out + "]";
}

inline std::string json_rows(const Matrix& m, std::string_view indent) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += i ? ",\n" : "\n";
        out += indent;
        out += "  ";
        out += json_list(m.row(i));
    }
    out += m.rows() ? "\n" + std::string(indent) + "]" : "]";
    return out;
}

}  // namespace detail

/// Parses and validates problem JSON. `source` names the input in messages.
inline ProblemFile parse_problem(std::string_view text, const std::string& source = "<input>") {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, source + ":" + detail::line_col(text, e.byte) + ": " + e.what());
    } catch (const nlohmann::json::out_of_range& e) {
        throw Error(ErrorKind::ValidationError, source + ": " + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorKind::SchemaError, source + ": top level must be an object");
    for (const char* key : {"nodes", "m", "derivatives"})
        if (!doc.contains(key)) throw Error(ErrorKind::SchemaError, source + ": missing field \"" + key + "\"");

    ProblemFile p;
    const auto& nodes = doc["nodes"];
    if (!nodes.is_array() || nodes.empty())
        throw Error(ErrorKind::SchemaError, source + ": \"nodes\" must be a non-empty array");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        p.nodes.push_back(detail::json_number(nodes[i], source + ": nodes[" + std::to_string(i) + "]"));

    const auto& m = doc["m"];
    if (!m.is_number_unsigned())
        throw Error(ErrorKind::SchemaError, source + ": \"m\" must be a non-negative integer");
    p.m = m.get<std::size_t>();
    if (p.m > kMaxOrder)
        throw Error(ErrorKind::ValidationError, source + ": m = " + std::to_string(p.m) + " exceeds limit " +
                                                    std::to_string(kMaxOrder));

    const auto& rows = doc["derivatives"];
    if (!rows.is_array()) throw Error(ErrorKind::SchemaError, source + ": \"derivatives\" must be an array");
    if (rows.size() != p.nodes.size())
        throw Error(ErrorKind::SchemaError, source + ": \"derivatives\" has " + std::to_string(rows.size()) +
                                                " rows but there are " + std::to_string(p.nodes.size()) + " nodes");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string where = source + ": derivatives[" + std::to_string(i) + "]";
        if (!rows[i].is_array() || rows[i].size() != p.m + 1)
            throw Error(ErrorKind::SchemaError, where + " must be an array of m+1 = " + std::to_string(p.m + 1) +
                                                    " numbers", i);
        auto& row = p.derivatives.emplace_back();
        for (std::size_t k = 0; k < rows[i].size(); ++k)
            row.push_back(detail::json_number(rows[i][k], where + "[" + std::to_string(k) + "]"));
    }

    if (doc.contains("label")) {
        if (!doc["label"].is_string()) throw Error(ErrorKind::SchemaError, source + ": \"label\" must be a string");
        p.label = doc["label"].get<std::string>();
    }

    try {
        (void)p.node_set();
        (void)p.data();
    } catch (const Error& e) {
        throw Error(ErrorKind::ValidationError, source + ": " + e.what(), e.index());
    }
    return p;
}

inline ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str(), path);
}

inline std::string problem_to_json(const ProblemFile& p) {
    std::string out = "{\n";
    if (p.label) out += "  \"label\": " + nlohmann::json(*p.label).dump() + ",\n";
    out += "  \"nodes\": " + detail::json_list(p.nodes) + ",\n";
    out += "  \"m\": " + std::to_string(p.m) + ",\n";
    out += "  \"derivatives\": " + detail::json_rows(Matrix::from_rows(p.derivatives), "  ") + "\n}\n";
    return out;
}

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::ParseError, path + ": cannot open for writing");
    out << text;
}

inline void save_problem(const std::string& path, const ProblemFile& p) { write_text(path, problem_to_json(p)); }

/// Coefficient dump of a built interpolant, keys in fixed order.
inline std::string fit_to_json(const Interpolant& f, const std::optional<std::string>& label = std::nullopt) {
    std::string out = "{\n";
    if (label) out += "  \"label\": " + nlohmann::json(*label).dump() + ",\n";
    out += "  \"m\": " + std::to_string(f.order()) + ",\n";
    out += "  \"nodes\": " + detail::json_list(f.nodes().values()) + ",\n";
    out += "  \"delta\": " + detail::json_list(f.weights().delta) + ",\n";
    out += "  \"delta_pow\": " + detail::json_list(f.weights().delta_pow) + ",\n";
    out += "  \"small_l\": " + detail::json_rows(f.basis().small_l, "  ") + ",\n";
    out += "  \"big_L\": " + detail::json_rows(f.basis().big_L, "  ") + ",\n";
    out += "  \"A\": " + detail::json_rows(f.a_table().a, "  ") + ",\n";
    out += "  \"B\": " + detail::json_rows(f.b_table().b, "  ") + "\n}\n";
    return out;
}

/// Header plus one LF-terminated line per row.
inline std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
    std::string out;
    for (std::size_t k = 0; k < header.size(); ++k) out += (k ? "," : "") + header[k];
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) out += ',';
            out += format_double(row[k]);
        }
        out += '\n';
    }
    return out;
}

struct GridSpec {
    std::optional<double> from, to;
    std::optional<std::size_t> points;
    std::optional<std::vector<double>> at;
};

inline std::vector<double> parse_number_list(std::string_view text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        std::string_view item = text.substr(start, comma - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw Error(ErrorKind::BadGridSpec, "cannot parse \"" + std::string(item) + "\" as a number");
        out.push_back(v);
        start = comma + 1;
    }
    return out;
}

/// `from/to/points` gives N equispaced points with both ends included;
/// `at` gives an explicit list. Exactly one form must be present.
inline std::vector<double> make_grid(const GridSpec& spec) {
    const bool range = spec.from || spec.to || spec.points;
    if (range == spec.at.has_value())
        throw Error(ErrorKind::BadGridSpec, "give either --from/--to/--points or --at");
    std::vector<double> xs;
    if (spec.at) {
        xs = *spec.at;
    } else {
        if (!spec.from || !spec.to || !spec.points)
            throw Error(ErrorKind::BadGridSpec, "--from, --to and --points are all required");
        const std::size_t n = *spec.points;
        if (n < 1) throw Error(ErrorKind::BadGridSpec, "--points must be at least 1");
        const double a = *spec.from, b = *spec.to;
        xs.resize(n);
        for (std::size_t k = 0; k < n; ++k)
            xs[k] = n == 1 ? a : (k + 1 == n ? b : a + (b - a) * static_cast<double>(k) / static_cast<double>(n - 1));
    }
    for (std::size_t k = 0; k < xs.size(); ++k)
        if (!std::isfinite(xs[k])) throw Error(ErrorKind::BadGridSpec, "grid point " + std::to_string(k) + " is not finite", k);
    return xs;
}

}  // namespace osculate

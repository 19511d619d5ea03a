#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace stochel {

/// Deterministic float formatting: 17 significant digits, locale-free.
inline std::string format_double(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    (void)ec;
    return std::string(buf, ptr);
}

namespace detail {

inline void escape_json_string(const std::string& s, std::string& out) {
    out.push_back('"');
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    out.push_back('"');
}

inline void dump_json_value(const nlohmann::json& j, std::string& out) {
    switch (j.type()) {
        case nlohmann::json::value_t::null:
            out += "null";
            break;
        case nlohmann::json::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            break;
        case nlohmann::json::value_t::number_integer:
            out += std::to_string(j.get<std::int64_t>());
            break;
        case nlohmann::json::value_t::number_unsigned:
            out += std::to_string(j.get<std::uint64_t>());
            break;
        case nlohmann::json::value_t::number_float: {
            const double v = j.get<double>();
            if (std::isfinite(v)) {
                out += format_double(v);
            } else {
                out += "null";  // JSON has no inf/nan
            }
            break;
        }
        case nlohmann::json::value_t::string:
            escape_json_string(j.get<std::string>(), out);
            break;
        case nlohmann::json::value_t::array: {
            out.push_back('[');
            bool first = true;
            for (const auto& item : j) {
                if (!first) out.push_back(',');
                first = false;
                dump_json_value(item, out);
            }
            out.push_back(']');
            break;
        }
        case nlohmann::json::value_t::object: {
            out.push_back('{');
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {  // std::map: key-sorted
                if (!first) out.push_back(',');
                first = false;
                escape_json_string(it.key(), out);
                out.push_back(':');
                dump_json_value(it.value(), out);
            }
            out.push_back('}');
            break;
        }
        default:
            out += "null";
    }
}

}  // namespace detail

/// Serialize with sorted object keys and 17-significant-digit floats.
/// Byte-stable across runs, platforms with IEEE doubles, and worker counts.
inline std::string dump_sorted_json(const nlohmann::json& j) {
    std::string out;
    detail::dump_json_value(j, out);
    out.push_back('\n');
    return out;
}

/// Minimal CSV assembly: header row, comma separators, '.' decimal point.
class CsvTable {
  public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

    std::string str() const {
        std::string out = join(header_);
        for (const auto& r : rows_) out += join(r);
        return out;
    }

  private:
    static std::string join(const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) line.push_back(',');
            line += cells[i];
        }
        line.push_back('\n');
        return line;
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace stochel

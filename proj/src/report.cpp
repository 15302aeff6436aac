#include "bornrule/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "bornrule/error.hpp"

namespace bornrule {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size()) throw InvalidArgument("Table: row width does not match columns");
    rows_.push_back(std::move(row));
}

void Table::set_meta(std::string key, Cell value) { meta_.emplace_back(std::move(key), std::move(value)); }

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string format_cell(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_double(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::string>) {
                return v;
            } else {
                return std::to_string(v);
            }
        },
        cell);
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

nlohmann::ordered_json to_json(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                // JSON has no inf/nan literals.
                if (!std::isfinite(v)) return format_double(v);
            }
            return v;
        },
        cell);
}

}  // namespace

void Table::write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << csv_field(columns_[i]);
    os << '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(format_cell(row[i]));
        os << '\n';
    }
    os << '#';
    for (const auto& [key, value] : meta_) os << ' ' << key << '=' << format_cell(value);
    os << '\n';
}

void Table::write_json(std::ostream& os) const {
    nlohmann::ordered_json doc;
    doc["columns"] = columns_;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[columns_[i]] = to_json(row[i]);
        doc["rows"].push_back(std::move(obj));
    }
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [key, value] : meta_) meta[key] = to_json(value);
    doc["meta"] = std::move(meta);
    os << doc.dump(2) << '\n';
}

void Table::write(std::ostream& os, Format format) const {
    if (format == Format::Json) {
        write_json(os);
    } else {
        write_csv(os);
    }
}

}  // namespace bornrule

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bornrule {

using Cell = std::variant<std::int64_t, std::uint64_t, double, bool, std::string>;

enum class Format { Csv, Json };

/// Fixed-column result table with a trailing provenance record
/// (tool version, seed, parameters).
class Table {
public:
    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    /// Throws InvalidArgument if the row width differs from the column count.
    void add_row(std::vector<Cell> row);
    void set_meta(std::string key, Cell value);

    [[nodiscard]] const std::vector<std::string>& columns() const noexcept { return columns_; }
    [[nodiscard]] const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }

    /// CSV: header line, one line per row, then a "# key=value ..." footer.
    void write_csv(std::ostream& os) const;
    /// JSON: {"columns": [...], "rows": [{...}, ...], "meta": {...}}.
    void write_json(std::ostream& os) const;
    void write(std::ostream& os, Format format) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
    std::vector<std::pair<std::string, Cell>> meta_;
};

/// Shortest decimal text that parses back to exactly `x`.
std::string format_double(double x);
std::string format_cell(const Cell& cell);

}  // namespace bornrule

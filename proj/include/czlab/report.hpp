#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace czlab {

/// Version tag written into every CSV metadata block.
inline constexpr const char* csv_schema = "czlab-csv/1";

using Cell = std::variant<long long, double, std::string, bool>;

struct ReportRow {
    std::vector<Cell> cells;  ///< one per column, without the pass column
    bool pass = true;
};

/// A property of the whole sequence (monotonicity, final tolerance, ...).
struct SummaryCheck {
    std::string name;
    double value = 0.0;
    std::string relation;  ///< "<", "<=", ">=", ... against `threshold`
    double threshold = 0.0;
    bool pass = true;
};

struct SequenceReport {
    std::string experiment;
    std::vector<std::string> columns;  ///< data columns; "pass" is appended on output
    std::vector<ReportRow> rows;
    std::vector<SummaryCheck> checks;
    std::vector<std::pair<std::string, std::string>> metadata;
    bool verdict = true;
    bool accurate = true;  ///< every quadrature behind the numbers converged

    bool empty() const { return rows.empty(); }

    /// verdict = every row passes and every summary check passes.
    void finalize();

    void add_check(std::string name, double value, std::string relation, double threshold);

    /// Column index by name; ConfigError when absent.
    std::size_t column(const std::string& name) const;
    double number(std::size_t row, const std::string& name) const;
};

/// Shortest round-trip text of a double with 17 significant digits.
std::string format_double(double x);

/// CSV with a header row, one line per row, and a trailing `#` metadata block
/// (schema, the report metadata, summary checks and the verdict, which is
/// "empty" when there are no rows).
std::string to_csv(const SequenceReport& report);

/// Writes to_csv(report) to `path`; IoError names the path on failure.
void emit_csv(const SequenceReport& report, const std::filesystem::path& path);

/// Aligned plain-text table for the terminal.
std::string to_text(const SequenceReport& report);

}  // namespace czlab

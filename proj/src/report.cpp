#include "czlab/report.hpp"

#include "czlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace czlab {

namespace {

std::string cell_text(const Cell& c)
{
    struct Visitor {
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(const std::string& v) const { return v; }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
    };
    return std::visit(Visitor{}, c);
}

bool holds(double value, const std::string& relation, double threshold)
{
    if (relation == "<") return value < threshold;
    if (relation == "<=") return value <= threshold;
    if (relation == ">") return value > threshold;
    if (relation == ">=") return value >= threshold;
    if (relation == "==") return value == threshold;
    throw ConfigError("unknown relation '" + relation + "'");
}

std::string verdict_text(const SequenceReport& r)
{
    if (r.empty()) return "empty";
    return r.verdict ? "true" : "false";
}

}  // namespace

void SequenceReport::finalize()
{
    verdict = std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; }) &&
              std::all_of(checks.begin(), checks.end(), [](const SummaryCheck& c) { return c.pass; });
}

void SequenceReport::add_check(std::string name, double value, std::string relation, double threshold)
{
    const bool pass = holds(value, relation, threshold);
    checks.push_back({std::move(name), value, std::move(relation), threshold, pass});
}

std::size_t SequenceReport::column(const std::string& name) const
{
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw ConfigError(experiment + ": no column '" + name + "'");
    return static_cast<std::size_t>(it - columns.begin());
}

double SequenceReport::number(std::size_t row, const std::string& name) const
{
    const Cell& c = rows.at(row).cells.at(column(name));
    if (const auto* d = std::get_if<double>(&c)) return *d;
    if (const auto* i = std::get_if<long long>(&c)) return static_cast<double>(*i);
    throw ConfigError(experiment + ": column '" + name + "' is not numeric");
}

std::string format_double(double x)
{
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string to_csv(const SequenceReport& report)
{
    std::ostringstream os;
    for (const auto& c : report.columns) os << c << ',';
    os << "pass\n";
    for (const auto& row : report.rows) {
        for (const auto& cell : row.cells) os << cell_text(cell) << ',';
        os << (row.pass ? "true" : "false") << '\n';
    }
    os << "# schema=" << csv_schema << '\n';
    os << "# experiment=" << report.experiment << '\n';
    for (const auto& [key, value] : report.metadata) os << "# " << key << '=' << value << '\n';
    for (const auto& c : report.checks)
        os << "# check " << c.name << ": " << format_double(c.value) << ' ' << c.relation << ' '
           << format_double(c.threshold) << " -> " << (c.pass ? "true" : "false") << '\n';
    os << "# accurate=" << (report.accurate ? "true" : "false") << '\n';
    os << "# verdict=" << verdict_text(report) << '\n';
    return os.str();
}

void emit_csv(const SequenceReport& report, const std::filesystem::path& path)
{
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << to_csv(report);
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
}

std::string to_text(const SequenceReport& report)
{
    std::vector<std::string> header = report.columns;
    header.push_back("pass");
    std::vector<std::vector<std::string>> table;
    for (const auto& row : report.rows) {
        std::vector<std::string> line;
        for (const auto& cell : row.cells) {
            if (const auto* d = std::get_if<double>(&cell)) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.6g", *d);
                line.emplace_back(buf);
            } else {
                line.push_back(cell_text(cell));
            }
        }
        line.emplace_back(row.pass ? "yes" : "NO");
        table.push_back(std::move(line));
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& line : table) width[c] = std::max(width[c], line[c].size());
    }

    std::ostringstream os;
    os << "== " << report.experiment << " ==\n";
    auto emit_line = [&](const std::vector<std::string>& line) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            os << std::string(width[c] - line[c].size(), ' ') << line[c];
            os << (c + 1 < line.size() ? "  " : "\n");
        }
    };
    emit_line(header);
    for (const auto& line : table) emit_line(line);
    for (const auto& c : report.checks)
        os << "check " << c.name << ": " << format_double(c.value) << ' ' << c.relation << ' '
           << format_double(c.threshold) << (c.pass ? "  ok" : "  FAILED") << '\n';
    os << "accurate: " << (report.accurate ? "yes" : "no") << "\n";
    os << "verdict: " << verdict_text(report) << "\n";
    return os.str();
}

}  // namespace czlab

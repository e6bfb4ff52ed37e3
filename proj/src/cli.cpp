#include "czlab/cli.hpp"

#include "czlab/errors.hpp"
#include "czlab/experiments.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace czlab {

namespace {

const std::vector<std::string> experiment_names = {"counterexample", "mollify", "interpolate",
                                                   "weakderiv",      "czratio", "all"};

const std::vector<std::string> setting_keys = {"nu_max",          "epsilons",       "p",           "k",
                                               "n_radial",        "n_angular",      "r_min",       "tol",
                                               "max_refinements", "test_functions", "polynomials", "seed",
                                               "out",             "csv"};

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string normalize_key(std::string key)
{
    std::replace(key.begin(), key.end(), '-', '_');
    return key;
}

double to_double(const std::string& key, const std::string& text)
{
    const std::string t = trim(text);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || *end != '\0' || errno == ERANGE)
        throw UsageError("malformed number for " + key + ": '" + text + "'");
    return v;
}

long long to_integer(const std::string& key, const std::string& text)
{
    const std::string t = trim(text);
    char* end = nullptr;
    errno = 0;
    const long long v = std::strtoll(t.c_str(), &end, 10);
    if (t.empty() || *end != '\0' || errno == ERANGE)
        throw UsageError("malformed integer for " + key + ": '" + text + "'");
    return v;
}

int to_int(const std::string& key, const std::string& text)
{
    const long long v = to_integer(key, text);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw UsageError("integer out of range for " + key + ": '" + text + "'");
    return static_cast<int>(v);
}

bool to_bool(const std::string& key, const std::string& text)
{
    const std::string t = trim(text);
    if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
    if (t == "false" || t == "0" || t == "no" || t == "off") return false;
    throw UsageError("malformed boolean for " + key + ": '" + text + "'");
}

void apply(RunConfig& c, const std::string& key, const std::string& value)
{
    if (key == "nu_max") c.nu_max = to_int(key, value);
    else if (key == "epsilons") {
        c.epsilons.clear();
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) c.epsilons.push_back(to_double(key, item));
    }
    else if (key == "p") c.p = to_double(key, value);
    else if (key == "k") c.k = to_int(key, value);
    else if (key == "n_radial") c.n_radial = to_int(key, value);
    else if (key == "n_angular") c.n_angular = to_int(key, value);
    else if (key == "r_min") c.r_min = to_double(key, value);
    else if (key == "tol") c.tol = to_double(key, value);
    else if (key == "max_refinements") c.max_refinements = to_int(key, value);
    else if (key == "test_functions") c.test_functions = to_int(key, value);
    else if (key == "polynomials") c.polynomials = to_int(key, value);
    else if (key == "seed") {
        const long long s = to_integer(key, value);
        if (s < 0) throw UsageError("seed must be nonnegative");
        c.seed = static_cast<unsigned long long>(s);
    }
    else if (key == "out") c.out = trim(value);
    else if (key == "csv") c.csv = to_bool(key, value);
    else throw UsageError("unknown setting '" + key + "'");
}

RunConfig defaults_for(const std::string& experiment)
{
    RunConfig c;
    c.experiment = experiment;
    if (experiment == "interpolate") c.nu_max = 6;
    if (experiment == "czratio") c.nu_max = 8;
    if (experiment == "mollify") {
        c.n_radial = 40;
        c.n_angular = 16;
    }
    return c;
}

RunConfig resolve(const std::string& experiment, const std::vector<std::pair<std::string, std::string>>& settings)
{
    RunConfig c = defaults_for(experiment);
    for (const auto& [key, value] : settings) apply(c, key, value);
    c.settings = settings;
    return c;
}

DiscGrid make_grid(const RunConfig& c, const std::vector<double>& mandatory)
{
    return DiscGrid::make(0.5, c.n_radial, c.n_angular, c.r_min, mandatory);
}

QuadratureScheme make_scheme(const RunConfig& c)
{
    return {QuadratureKind::polar_adaptive, c.tol, c.max_refinements};
}

std::string csv_name(const RunConfig& c, const SequenceReport& r)
{
    if (r.experiment == "counterexample" && c.k != 0) return r.experiment + "_k" + std::to_string(c.k) + ".csv";
    return r.experiment + ".csv";
}

SequenceReport run_one(const RunConfig& c)
{
    const std::string& e = c.experiment;
    if (e == "counterexample") return run_counterexample(c.k, c.nu_max, make_grid(c, dyadic_radii(c.nu_max)));
    if (e == "mollify") return run_mollification(c.epsilons, make_grid(c, {}), make_scheme(c));
    if (e == "interpolate") return run_interpolation(c.nu_max, make_grid(c, interpolation_radii(c.nu_max)));
    if (e == "weakderiv")
        return run_weak_derivative_check(FieldSpec::sikorav(), c.test_functions, make_scheme(c), c.seed);
    if (e == "czratio") {
        CzOptions o;
        o.p = c.p;
        o.nu_max = c.nu_max;
        o.polynomials = c.polynomials;
        o.seed = c.seed;
        return run_cz_estimator(o, make_grid(c, dyadic_radii(c.nu_max)), make_scheme(c));
    }
    throw UsageError("unknown experiment '" + e + "'");
}

}  // namespace

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file " + path);
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = normalize_key(trim(line.substr(0, eq)));
        if (std::find(setting_keys.begin(), setting_keys.end(), key) == setting_keys.end())
            throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        out.emplace_back(key, trim(line.substr(eq + 1)));
    }
    return out;
}

RunConfig parse_config(const std::vector<std::string>& args, std::optional<std::string> env_out)
{
    CLI::App app{"Numerical checks of C^k and Sobolev estimates for the dbar operator", "czlab"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    std::string config_path;
    std::map<std::string, std::string> raw;
    std::map<std::string, CLI::Option*> opts;
    bool csv_flag = true;
    CLI::Option* csv_opt = nullptr;

    const std::map<std::string, std::string> help = {
        {"nu_max", "largest nu (counterexample 12, interpolate 6, czratio 8)"},
        {"epsilons", "comma-separated decreasing mollification radii in (0, 0.1)"},
        {"p", "Sobolev exponent, > 2 (czratio)"},
        {"k", "derivative order of the counterexample, 0 or 1"},
        {"n_radial", "radial grid points"},
        {"n_angular", "angular grid points"},
        {"r_min", "innermost grid radius, <= 5e-9"},
        {"tol", "quadrature target tolerance"},
        {"max_refinements", "quadrature refinement levels, 1..10"},
        {"test_functions", "number of bumps (weakderiv)"},
        {"polynomials", "number of cutoff polynomials (czratio)"},
        {"seed", "random seed for test functions and polynomials"},
        {"out", "output directory for CSV files"},
    };

    app.add_option("--config", config_path, "flat key = value config file")->check(CLI::ExistingFile);
    for (const std::string& key : setting_keys) {
        if (key == "csv") continue;
        std::string flag = "--" + key;
        std::replace(flag.begin(), flag.end(), '_', '-');
        opts[key] = app.add_option(flag, raw[key], help.at(key));
    }
    csv_opt = app.add_flag("--csv,!--no-csv", csv_flag, "write CSV files (default on)");

    for (const std::string& name : experiment_names) {
        auto* sub = app.add_subcommand(name, "run " + name)->fallthrough();
        if (name == "mollify") sub->alias("mollification");
        if (name == "interpolate") sub->alias("interpolation");
    }

    // A leading "run" is accepted: "run counterexample ..." equals "counterexample ...".
    auto first = args.begin();
    if (first != args.end() && *first == "run") ++first;
    std::vector<std::string> reversed(std::make_reverse_iterator(args.end()), std::make_reverse_iterator(first));
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    std::string experiment;
    for (const auto* sub : app.get_subcommands()) experiment = sub->get_name();

    std::vector<std::pair<std::string, std::string>> settings;
    if (!config_path.empty()) settings = read_config_file(config_path);
    if (env_out && !env_out->empty()) settings.emplace_back("out", *env_out);
    for (const std::string& key : setting_keys) {
        if (key == "csv") continue;
        if (opts[key]->count() > 0) settings.emplace_back(key, raw[key]);
    }
    if (csv_opt->count() > 0) settings.emplace_back("csv", csv_flag ? "true" : "false");

    RunConfig c = resolve(experiment, settings);
    validate(c);
    return c;
}

void validate(const RunConfig& c)
{
    if (std::find(experiment_names.begin(), experiment_names.end(), c.experiment) == experiment_names.end())
        throw UsageError("unknown experiment '" + c.experiment + "'");
    if (c.experiment == "all") {
        for (const std::string& e : experiment_names)
            if (e != "all") validate(resolve(e, c.settings));
        return;
    }
    if (c.n_radial < 2) throw UsageError("n_radial must be >= 2");
    if (c.n_angular < 1) throw UsageError("n_angular must be >= 1");
    if (!(c.r_min > 0.0 && c.r_min <= 1e-8 * 0.5)) throw UsageError("r_min must lie in (0, 5e-9]");
    if (!(c.tol > 0.0 && c.tol < 1.0)) throw UsageError("tol must lie in (0, 1)");
    if (c.max_refinements < 1 || c.max_refinements > 10) throw UsageError("max_refinements must lie in 1..10");
    if (c.nu_max < 0) throw UsageError("nu_max must be >= 0");

    const std::string& e = c.experiment;
    if (e == "counterexample") {
        if (c.k < 0 || c.k > 1)
            throw UsageError("k = " + std::to_string(c.k) + " is unsupported; the counterexample has k = 0 or 1");
        if (c.nu_max > 40) throw UsageError("nu_max must be <= 40 for the counterexample");
    }
    if (e == "interpolate" && c.nu_max > 10) throw UsageError("nu_max must be <= 10 for interpolate");
    if (e == "mollify") {
        if (c.epsilons.empty()) throw UsageError("epsilons must not be empty");
        for (std::size_t i = 0; i < c.epsilons.size(); ++i) {
            if (!(c.epsilons[i] > 0.0 && c.epsilons[i] < 0.1))
                throw UsageError("every epsilon must lie in (0, 0.1)");
            if (i > 0 && !(c.epsilons[i] < c.epsilons[i - 1]))
                throw UsageError("epsilons must be strictly decreasing");
        }
    }
    if (e == "weakderiv" && c.test_functions < 1) throw UsageError("test_functions must be >= 1");
    if (e == "czratio") {
        if (!(c.p > 2.0) || !std::isfinite(c.p)) throw UsageError("p must be a finite real > 2");
        if (c.nu_max < 1) throw UsageError("nu_max must be >= 1 for czratio");
        if (c.nu_max > 40) throw UsageError("nu_max must be <= 40 for czratio");
        if (c.polynomials < 0) throw UsageError("polynomials must be >= 0");
    }
}

std::string echo(const RunConfig& c)
{
    std::ostringstream os;
    os << "experiment=" << c.experiment << ";nu_max=" << c.nu_max << ";epsilons=";
    for (std::size_t i = 0; i < c.epsilons.size(); ++i) os << (i ? "," : "") << format_double(c.epsilons[i]);
    os << ";p=" << format_double(c.p) << ";k=" << c.k << ";n_radial=" << c.n_radial << ";n_angular=" << c.n_angular
       << ";r_min=" << format_double(c.r_min) << ";tol=" << format_double(c.tol)
       << ";max_refinements=" << c.max_refinements << ";test_functions=" << c.test_functions
       << ";polynomials=" << c.polynomials << ";seed=" << c.seed << ";out=" << c.out
       << ";csv=" << (c.csv ? "true" : "false");
    return os.str();
}

int run(const RunConfig& config, std::ostream& out)
{
    std::vector<RunConfig> jobs;
    if (config.experiment == "all") {
        for (const std::string& e : experiment_names)
            if (e != "all") jobs.push_back(resolve(e, config.settings));
    } else {
        jobs.push_back(config);
    }

    bool ok = true;
    for (const RunConfig& c : jobs) {
        SequenceReport report = run_one(c);
        report.metadata.insert(report.metadata.begin(), {"config", echo(c)});
        out << "# config: " << echo(c) << '\n' << to_text(report);
        if (c.csv) {
            const std::filesystem::path path = std::filesystem::path(c.out) / csv_name(c, report);
            emit_csv(report, path);
            out << "csv: " << path.string() << '\n';
        }
        out << '\n';
        ok = ok && report.verdict && report.accurate;
    }
    return ok ? 0 : 1;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> env_out;
    if (const char* e = std::getenv("CZLAB_OUT")) env_out = e;
    try {
        const RunConfig config = parse_config(args, env_out);
        return run(config, out);
    } catch (const HelpRequested& h) {
        out << h.what();
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\nrun with --help for the list of options\n";
        return 2;
    } catch (const ParameterError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const UnsupportedError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace czlab

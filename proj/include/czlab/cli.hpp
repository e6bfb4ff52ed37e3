#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace czlab {

/// Bad command line or config file; the front end exits with status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// --help was requested; what() holds the help text.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Effective settings of one run. Defaults that depend on the experiment
/// (nu_max, grid size) are filled in by parse_config.
struct RunConfig {
    std::string experiment;  ///< counterexample, mollify, interpolate, weakderiv, czratio, all
    int nu_max = 12;
    std::vector<double> epsilons{0.08, 0.04, 0.02, 0.01};
    double p = 4.0;
    int k = 0;
    int n_radial = 120;
    int n_angular = 64;
    double r_min = 1e-12;
    double tol = 1e-10;
    int max_refinements = 8;
    int test_functions = 16;
    int polynomials = 8;
    unsigned long long seed = 20240611;
    std::string out = "czlab_out";
    bool csv = true;

    /// Explicit settings in increasing precedence (file, environment, flags);
    /// `all` re-resolves them against each experiment's defaults.
    std::vector<std::pair<std::string, std::string>> settings;
};

/// Flat "key = value" config file; '#' starts a comment. Keys are the long
/// flag names with '-' or '_'. Unknown keys and malformed values raise
/// UsageError.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

/// args excludes the program name. Precedence: flags > CZLAB_OUT (output
/// directory only) > config file > defaults. `env_out` is the value of
/// CZLAB_OUT or nullopt.
RunConfig parse_config(const std::vector<std::string>& args, std::optional<std::string> env_out = std::nullopt);

/// Throws UsageError when a parameter violates the experiment's preconditions.
void validate(const RunConfig& config);

/// One line "key=value;key=value;..." with every effective setting.
std::string echo(const RunConfig& config);

/// Runs the configured experiment(s), prints the reports to `out` and writes
/// CSV files. Returns 0 iff every verdict holds and every quadrature converged.
int run(const RunConfig& config, std::ostream& out);

/// Complete front end: parse, run, map errors to exit codes
/// (0 ok, 1 verdict failed or inaccurate, 2 usage error, 3 runtime error).
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace czlab

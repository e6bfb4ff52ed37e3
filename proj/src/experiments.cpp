#include "czlab/experiments.hpp"

#include "czlab/detail/disc_quadrature.hpp"
#include "czlab/errors.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace czlab {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
const double log2_ = std::numbers::ln2;
const double log4 = 2.0 * std::numbers::ln2;
const double log16 = 4.0 * std::numbers::ln2;

constexpr double psi_lo = 1.0 / 16.0;
constexpr double psi_hi = 3.0 / 16.0;

// sup of |g| over n + 1 equispaced points of [a, b]
template <class G>
double scan_sup(G&& g, double a, double b, int n)
{
    double best = 0.0;
    for (int i = 0; i <= n; ++i) best = std::max(best, std::abs(g(a + (b - a) * i / n)));
    return best;
}

std::string num(double x) { return format_double(x); }

void require_radii(const DiscGrid& grid, std::span<const double> radii, const std::string& who)
{
    for (double r : radii) {
        if (!(r < grid.radius)) continue;
        if (!grid.contains_radius(r)) {
            std::ostringstream os;
            os << who << ": grid lacks the mandatory radius " << r;
            throw ConfigError(os.str());
        }
    }
}

void check_nu_max(int nu_max, int cap = 1000)
{
    if (nu_max < 0 || nu_max > cap)
        throw ParameterError("nu_max must lie in [0, " + std::to_string(cap) + "]");
}

}  // namespace

CounterexampleBound counterexample_bound(int k)
{
    if (k < 0 || k > 1) throw UnsupportedError("uniform bound is implemented for k = 0 and k = 1");
    CounterexampleBound b;
    b.k = k;
    b.c1 = std::exp(-1.0);
    b.c2 = 1.0 / log4;
    b.c3 = 1.0 / (log4 * log4);
    constexpr int samples = 200000;
    if (k == 0) {
        const double psi_sup = scan_sup([](double t) { return cutoff_psi(t).derivative * std::sqrt(t); },
                                        psi_lo, psi_hi, samples);
        const double f_sup = scan_sup([](double r) { return r * std::log(-2.0 * std::log(r)); }, 1e-6, 0.5,
                                      samples);
        b.psi_term = psi_sup * f_sup;
        b.total = b.c1 + b.c2 + b.psi_term;
    } else {
        auto lambda = [](double rho) { return std::log(-std::log(rho)); };
        b.s1 = scan_sup([&](double t) { return t * cutoff_psi(t).derivative * lambda(t); }, psi_lo, psi_hi,
                        samples);
        b.s2 = scan_sup(
            [&](double t) {
                const Profile p = cutoff_psi(t);
                return (t * p.derivative + t * t * p.second) * lambda(t);
            },
            psi_lo, psi_hi, samples);
        const double d1 = b.s1 + b.c1 + b.c2;
        const double d2 = b.s2 + 2.0 * b.s1 * (b.c1 + b.c2) + 0.5 * b.c1 + b.c2 + b.c3;
        // sup r|DG| + sup|D^2G - DG| + sup|2DG + D^2G|
        b.total = 0.5 * d1 + (d2 + d1) + (2.0 * d1 + d2);
    }
    return b;
}

double counterexample_lower_bound(int k, int nu)
{
    if (nu < 2) return 0.0;  // 2^{-1} lies on the rim
    const double s = -nu * log2_;
    const double lam = std::log(-2.0 * s);
    if (k == 0) return 0.5 * lam;
    if (k != 1) throw UnsupportedError("lower bound is implemented for k = 0 and k = 1");
    const double a = 1.0 / nu;
    const double e = 0.5;  // |z|^{1/nu} at |z| = 2^{-nu}
    const double g = e * lam;
    const double dg = 0.5 * a * e * lam + e * (0.5 / s);
    const double d2g = 0.25 * a * a * e * lam + a * e * (0.5 / s) + e * (-0.25 / (s * s));
    return std::abs(2.0 * g + 3.0 * dg + d2g);
}

std::vector<double> dyadic_radii(int nu_max)
{
    std::vector<double> out;
    for (int nu = 1; nu <= nu_max; ++nu) out.push_back(std::ldexp(1.0, -nu));
    return out;
}

std::vector<double> interpolation_radii(int nu_max)
{
    std::vector<double> out;
    for (int nu = 1; nu <= nu_max; ++nu) {
        const double t_hi = std::pow(16.0, -nu);
        const double t_lo = 1.0 / (std::pow(16.0, nu) + 1.0);
        const double r4 = std::sqrt(t_hi);
        out.push_back(r4);
        for (int i = 1; i <= 32; ++i) out.push_back(r4 * std::pow(2.0, -4.0 * i / 32.0));
        for (int i = 0; i < 64; ++i) out.push_back(std::sqrt(t_lo + (t_hi - t_lo) * (i + 0.5) / 64.0));
    }
    return out;
}

SequenceReport run_counterexample(int k, int nu_max, const DiscGrid& grid)
{
    if (k < 0 || k > 1) throw UnsupportedError("counterexample is implemented for k = 0 and k = 1");
    check_nu_max(nu_max);
    const auto radii = dyadic_radii(nu_max);
    require_radii(grid, radii, "counterexample");

    const CounterexampleBound bound = counterexample_bound(k);
    SequenceReport report;
    report.experiment = "counterexample";
    const std::string ck = "c" + std::to_string(k);
    const std::string ck1 = "c" + std::to_string(k + 1);
    report.columns = {"nu", ck + "_dbar_u", ck1 + "_u", "ratio", "lower_bound", "bound_B"};

    double prev_ratio = 0.0;
    for (int nu = 1; nu <= nu_max; ++nu) {
        const FieldSpec spec = k == 0 ? FieldSpec::u_nu(nu) : FieldSpec::higher_k(1, nu, true);
        const Field field = make_field(spec);
        const double dbar_norm = ck_norm_dbar(field, k, grid).value;
        const double norm = ck_norm(field, k + 1, grid).value;
        const double ratio = norm / dbar_norm;
        const double lower = counterexample_lower_bound(k, nu);

        ReportRow row;
        row.cells = {static_cast<long long>(nu), dbar_norm, norm, ratio, lower, bound.total};
        row.pass = dbar_norm <= bound.total && norm >= lower - 1e-9 && (nu < 3 || ratio > prev_ratio);
        report.rows.push_back(std::move(row));
        prev_ratio = ratio;
    }

    report.metadata = {{"k", std::to_string(k)},
                       {"nu_max", std::to_string(nu_max)},
                       {"grid", grid.describe()},
                       {"bound_c1", num(bound.c1)},
                       {"bound_c2", num(bound.c2)}};
    if (k == 0) {
        report.metadata.emplace_back("bound_psi_term", num(bound.psi_term));
    } else {
        report.metadata.emplace_back("bound_c3", num(bound.c3));
        report.metadata.emplace_back("bound_s1", num(bound.s1));
        report.metadata.emplace_back("bound_s2", num(bound.s2));
    }
    report.metadata.emplace_back("bound_B", num(bound.total));
    report.finalize();
    return report;
}

SequenceReport run_mollification(std::span<const double> epsilons, const DiscGrid& grid,
                                 const QuadratureScheme& scheme, double final_tol)
{
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        if (!(epsilons[i] > 0.0 && epsilons[i] < 0.1))
            throw ParameterError("mollification radii must lie in (0, 0.1)");
        if (i > 0 && !(epsilons[i] < epsilons[i - 1]))
            throw ParameterError("mollification radii must be strictly decreasing");
    }
    if (grid.radius > 0.5) throw ConfigError("mollification grid must lie in B_1/2");

    SequenceReport report;
    report.experiment = "mollification";
    report.columns = {"epsilon", "sup_f_diff", "sup_dbar_diff", "sup_dbar_u_diff"};
    const FieldSpec source = FieldSpec::sikorav();

    std::array<double, 3> prev{inf, inf, inf};
    for (double eps : epsilons) {
        std::array<double, 3> sup{0.0, 0.0, 0.0};
        for (std::size_t n = 0; n < grid.node_count(); ++n) {
            const Complex z = grid.node(n);
            const WirtingerValue m = mollify(source, eps, z, scheme);
            const WirtingerValue f = eval(source, z);
            report.accurate = report.accurate && m.accurate;
            const Profile psi = cutoff_psi(std::norm(z));
            const Complex dv = m.value - f.value;
            const Complex dd = m.dbar - f.dbar;
            sup[0] = std::max(sup[0], std::abs(dv));
            sup[1] = std::max(sup[1], std::abs(dd));
            sup[2] = std::max(sup[2], std::abs(psi.derivative * z * dv + psi.value * dd));
        }
        ReportRow row;
        row.cells = {eps, sup[0], sup[1], sup[2]};
        row.pass = sup[0] < prev[0] && sup[1] < prev[1] && sup[2] < prev[2];
        report.rows.push_back(std::move(row));
        prev = sup;
    }
    if (!report.rows.empty()) {
        const std::size_t last = report.rows.size() - 1;
        report.add_check("final_sup_f_diff", report.number(last, "sup_f_diff"), "<", final_tol);
        report.add_check("final_sup_dbar_diff", report.number(last, "sup_dbar_diff"), "<", final_tol);
        report.add_check("final_sup_dbar_u_diff", report.number(last, "sup_dbar_u_diff"), "<", final_tol);
    }
    report.metadata = {{"grid", grid.describe()}, {"quadrature", scheme.describe()}, {"final_tol", num(final_tol)}};
    report.finalize();
    return report;
}

SequenceReport run_interpolation(int nu_max, const DiscGrid& grid, int slope_samples)
{
    check_nu_max(nu_max, 10);
    std::vector<double> needed;
    for (int nu = 1; nu <= nu_max; ++nu) needed.push_back(std::pow(4.0, -nu));
    require_radii(grid, needed, "interpolation");

    SequenceReport report;
    report.experiment = "interpolation";
    report.columns = {"nu",        "sup_dbar_diff", "bound_first",      "bound_second",   "bound_sum",
                      "bound_valid", "slope_violations", "slope_max_ratio"};
    const FieldSpec f = FieldSpec::sikorav();

    double prev = inf;
    double worst_valid = 0.0;
    for (int nu = 1; nu <= nu_max; ++nu) {
        const FieldSpec g = FieldSpec::g_nu(nu);
        const SlopeCheck slope = check_phi_slope(nu, slope_samples);
        double sup = 0.0;
        for (std::size_t n = 0; n < grid.node_count(); ++n) {
            const Complex z = grid.node(n);
            sup = std::max(sup, std::abs(eval(g, z).dbar - eval(f, z).dbar));
        }
        const double first = 8.0 * std::pow(16.0, -nu) * nu * log16;
        const double second = 1.0 / (2.0 * nu * log16);
        const double valid = std::log(2.0 * nu * log4) / nu + 1.0 / (nu * log16);
        worst_valid = std::max(worst_valid, sup / valid);

        ReportRow row;
        row.cells = {static_cast<long long>(nu), sup, first, second, first + second, valid,
                     static_cast<long long>(slope.violations), slope.max_ratio};
        row.pass = sup <= first + second && sup < prev && slope.violations == 0;
        report.rows.push_back(std::move(row));
        prev = sup;
    }
    if (!report.rows.empty()) report.add_check("max_sup_over_bound_valid", worst_valid, "<=", 1.0);
    report.metadata = {{"nu_max", std::to_string(nu_max)},
                       {"grid", grid.describe()},
                       {"slope_samples", std::to_string(slope_samples)}};
    report.finalize();
    return report;
}

std::vector<TestBump> make_test_bumps(int count, std::uint64_t seed)
{
    if (count < 0) throw ParameterError("bump count must be nonnegative");
    std::vector<TestBump> out;
    if (count == 0) return out;
    out.push_back({Complex{}, 0.2});
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    while (static_cast<int>(out.size()) < count) {
        const double radius = 0.03 + 0.12 * unit(rng);
        const double dist = (0.5 - radius - 0.01) * unit(rng);
        const double angle = 2.0 * std::numbers::pi * unit(rng);
        out.push_back({std::polar(dist, angle), radius});
    }
    return out;
}

SequenceReport run_weak_derivative_check(const FieldSpec& spec, std::span<const TestBump> bumps,
                                         const QuadratureScheme& scheme)
{
    const Field field = make_field(spec);
    using V = detail::CVec<4>;

    // Components: dbar f phi, f dbar phi, del f phi, f del phi.
    auto integrate = [&](const TestBump& b, const QuadratureScheme& s) {
        auto integrand = [&](Complex z) {
            V out;
            const WirtingerValue phi = mollifier_bump(z, b.center, b.radius);
            if (phi.value == 0.0) return out;
            const WirtingerValue w = field.first(z);
            out[0] = w.dbar * phi.value;
            out[1] = w.value * phi.dbar;
            out[2] = w.del * phi.value;
            out[3] = w.value * phi.del;
            return out;
        };
        // Supports near the origin are integrated around it, so that a
        // singularity of the derivatives sits at the polar center.
        const double d = std::abs(b.center);
        return d < 2.0 * b.radius ? detail::integrate_disc_impl<V>(integrand, d + b.radius, s, Complex{})
                                  : detail::integrate_disc_impl<V>(integrand, b.radius, s, b.center);
    };
    // int |dbar phi| + int |del phi|; |del phi| = |dbar phi| for the radial bump.
    auto scale_of = [&](const TestBump& b, const QuadratureScheme& s) {
        auto g = [&](double r) { return 2.0 * std::abs(mollifier_bump(b.center + r, b.center, b.radius).dbar); };
        auto q = integrate_radial(g, b.radius, s, 1);
        q.value *= 2.0 * std::numbers::pi;
        return q;
    };

    SequenceReport report;
    report.experiment = "weak_derivative";
    report.columns = {"index",    "center_re",  "center_im",          "radius",
                      "residual_dbar", "residual_del", "scale",       "tolerance",
                      "fine_residual_dbar", "fine_residual_del"};
    QuadratureScheme fine = scheme;
    fine.target_tol = scheme.target_tol / 100.0;

    for (std::size_t i = 0; i < bumps.size(); ++i) {
        const TestBump& b = bumps[i];
        if (!(b.radius > 0.0) || !(std::abs(b.center) + b.radius < std::min(0.5, field.radius)))
            throw ConfigError("test function support escapes the disc");
        const auto coarse = integrate(b, scheme);
        const auto refined = integrate(b, fine);
        const auto size = scale_of(b, scheme);
        report.accurate = report.accurate && coarse.accurate && refined.accurate && size.accurate;

        const double res_dbar = std::abs(coarse.value[0] + coarse.value[1]);
        const double res_del = std::abs(coarse.value[2] + coarse.value[3]);
        const double fine_dbar = std::abs(refined.value[0] + refined.value[1]);
        const double fine_del = std::abs(refined.value[2] + refined.value[3]);
        const double scale = size.value;
        const double tol = 1e-5 * (1.0 + scale);
        const double slack = coarse.est_error;

        ReportRow row;
        row.cells = {static_cast<long long>(i), b.center.real(), b.center.imag(), b.radius, res_dbar, res_del,
                     scale, tol, fine_dbar, fine_del};
        row.pass = res_dbar < tol && res_del < tol && fine_dbar < tol && fine_del < tol &&
                   fine_dbar <= res_dbar + slack && fine_del <= res_del + slack;
        report.rows.push_back(std::move(row));
    }
    report.metadata = {{"field", describe(spec)},
                       {"test_functions", std::to_string(bumps.size())},
                       {"quadrature", scheme.describe()},
                       {"refined_quadrature", fine.describe()}};
    report.finalize();
    return report;
}

SequenceReport run_weak_derivative_check(const FieldSpec& spec, int count, const QuadratureScheme& scheme,
                                         std::uint64_t seed)
{
    const auto bumps = make_test_bumps(count, seed);
    SequenceReport report = run_weak_derivative_check(spec, bumps, scheme);
    report.metadata.emplace_back("seed", std::to_string(seed));
    return report;
}

SequenceReport run_cz_estimator(const CzOptions& options, const DiscGrid& grid, const QuadratureScheme& scheme)
{
    if (!(options.p > 2.0)) throw ParameterError("the Sobolev ratio needs p > 2");
    check_nu_max(options.nu_max);
    if (options.polynomials < 0) throw ParameterError("polynomial count must be nonnegative");

    struct Entry {
        std::string label;
        long long index;
        Field field;
        bool u_nu;
    };
    std::vector<Entry> family;
    for (int nu = 1; nu <= options.nu_max; ++nu)
        family.push_back({"u_nu", nu, make_field(FieldSpec::u_nu(nu)), true});

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> power(0, 3);
    std::uniform_int_distribution<int> term_count(1, 3);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < options.polynomials; ++i) {
        std::vector<Monomial> terms;
        if (i == 0) {
            terms.push_back({Complex{1.0, 0.0}, 0, 1});  // psi(|z|^2) conj(z)
        } else {
            const int n = term_count(rng);
            for (int t = 0; t < n; ++t) {
                const double re = gauss(rng);
                const double im = gauss(rng);
                const int a = power(rng);
                const int b = power(rng);
                terms.push_back({Complex{re, im}, a, b});
            }
        }
        family.push_back({"cutoff_polynomial", i, cutoff_polynomial(std::move(terms)), false});
    }

    // Compact support inside B_1/2: the field must vanish on the outer rings.
    for (const Entry& e : family) {
        for (double r : {0.45, 0.47, 0.49, 0.499}) {
            for (int j = 0; j < 64; ++j) {
                const Complex z = std::polar(r, 2.0 * std::numbers::pi * j / 64.0);
                const WirtingerValue w = e.field.first(z);
                if (w.value != 0.0 || w.dbar != 0.0 || w.del != 0.0)
                    throw ConfigError(e.field.name + " is not compactly supported in B_1/2");
            }
        }
    }

    SequenceReport report;
    report.experiment = "cz_ratio";
    report.columns = {"field", "index", "w1p_u", "lp_dbar_u", "sobolev_ratio", "c1_u", "c0_dbar_u", "cnorm_ratio"};
    std::vector<double> sob_u, c_u;
    double max_ratio = 0.0;
    for (const Entry& e : family) {
        const NormReport w = wkp_norm(e.field, 1, options.p, 0.5, scheme);
        const auto dbar = [&](Complex z) { return e.field.first(z).dbar; };
        const NormReport l = lp_norm(dbar, options.p, 0.5, scheme);
        const double c1 = ck_norm(e.field, 1, grid).value;
        const double c0 = ck_norm_dbar(e.field, 0, grid).value;
        const double sob = w.value / l.value;
        const double cr = c1 / c0;
        report.accurate = report.accurate && w.accurate && l.accurate;
        max_ratio = std::max(max_ratio, sob);
        if (e.u_nu) {
            sob_u.push_back(sob);
            c_u.push_back(cr);
        }
        ReportRow row;
        row.cells = {e.label, e.index, w.value, l.value, sob, c1, c0, cr};
        row.pass = std::isfinite(sob) && sob > 0.0 && std::isfinite(cr);
        report.rows.push_back(std::move(row));
    }
    if (!sob_u.empty()) {
        const auto [lo, hi] = std::minmax_element(sob_u.begin(), sob_u.end());
        report.add_check("sobolev_ratio_spread_u_nu", *hi / *lo, "<=", options.bounded_factor);
        report.add_check("cnorm_ratio_growth_u_nu", c_u.back() / c_u.front(), ">=", options.growth_factor);
    }
    report.metadata = {{"p", num(options.p)},
                       {"nu_max", std::to_string(options.nu_max)},
                       {"polynomials", std::to_string(options.polynomials)},
                       {"seed", std::to_string(options.seed)},
                       {"empirical_c_lower_bound", num(max_ratio)},
                       {"grid", grid.describe()},
                       {"quadrature", scheme.describe()}};
    report.finalize();
    return report;
}

std::vector<FieldSpec> crosscheck_specs()
{
    auto custom = FieldSpec::custom_field([](Complex z) {
        // z^2 conj(z) + z^2 exp(z)
        WirtingerValue w;
        const Complex zb = std::conj(z);
        const Complex e = std::exp(z);
        w.value = z * z * zb + z * z * e;
        w.dbar = z * z;
        w.del = 2.0 * z * zb + (2.0 * z + z * z) * e;
        return w;
    });
    FieldSpec moll = FieldSpec::mollified(0.05);
    return {FieldSpec::sikorav(),          FieldSpec::f_nu(1),  FieldSpec::f_nu(3),
            FieldSpec::u_nu(2),            FieldSpec::g_nu(1),  FieldSpec::g_nu(3),
            FieldSpec::higher_k(1, 2),     FieldSpec::higher_k(1, 3, true), moll,
            custom};
}

SequenceReport run_derivative_crosscheck(std::span<const FieldSpec> specs, int points, std::uint64_t seed)
{
    if (points < 0) throw ParameterError("point count must be nonnegative");
    SequenceReport report;
    report.experiment = "derivative_crosscheck";
    report.columns = {"field", "points", "max_err_h", "max_err_h2", "worst_ratio", "floor_points"};

    for (const FieldSpec& spec : specs) {
        validate(spec);
        const double noise = spec.family == Family::Mollified ? spec.scheme.target_tol : DBL_EPSILON;
        // Smoothing annulus of phi_nu in |z|, resolved by a smaller step.
        double ring_lo = 0.0, ring_hi = 0.0;
        if (spec.family == Family::GNu) {
            ring_lo = std::sqrt(1.0 / (std::pow(16.0, spec.nu) + 1.0));
            ring_hi = std::pow(4.0, -spec.nu);
        }
        const double ring_width = ring_hi - ring_lo;
        const ComplexFn value = [&](Complex z) { return eval(spec, z).value; };

        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double max_h = 0.0, max_h2 = 0.0, worst = 0.0;
        long long floor_points = 0;
        bool pass = true;
        for (int i = 0; i < points; ++i) {
            const double r = 1e-3 * std::pow(450.0, unit(rng));
            const double angle = 2.0 * std::numbers::pi * unit(rng);
            const Complex z = std::polar(r, angle);
            const WirtingerValue exact = eval(spec, z);
            report.accurate = report.accurate && exact.accurate;

            double h = spec.family == Family::Mollified ? 0.05 * spec.epsilon : 1e-3 * r;
            if (ring_width > 0.0 && r + 2.0 * h > ring_lo - 20.0 * ring_width &&
                r - 2.0 * h < ring_hi + 20.0 * ring_width)
                h = std::min(h, 0.01 * ring_width);

            auto err = [&](double step) {
                const FdWirtinger fd = fd_wirtinger(value, z, step, domain_radius(spec));
                return std::max(std::abs(fd.dbar - exact.dbar), std::abs(fd.del - exact.del));
            };
            const double e1 = err(h);
            const double e2 = err(0.5 * h);
            // Rounding of the closed forms is relative to |value|; quadrature
            // noise of the mollified field is relative to max(1, |value|).
            const double level = spec.family == Family::Mollified ? std::max(1.0, std::abs(exact.value))
                                                                  : std::abs(exact.value);
            const double floor = 100.0 * noise * (level / h + std::abs(exact.dbar) + std::abs(exact.del));
            max_h = std::max(max_h, e1);
            max_h2 = std::max(max_h2, e2);
            if (e1 <= floor) {
                ++floor_points;
                continue;
            }
            const double ratio = e2 / e1;
            worst = std::max(worst, ratio);
            if (!(ratio <= 0.35)) pass = false;
        }
        ReportRow row;
        row.cells = {describe(spec), static_cast<long long>(points), max_h, max_h2, worst, floor_points};
        row.pass = pass;
        report.rows.push_back(std::move(row));
    }
    report.metadata = {{"points", std::to_string(points)}, {"seed", std::to_string(seed)}};
    report.finalize();
    return report;
}

}  // namespace czlab

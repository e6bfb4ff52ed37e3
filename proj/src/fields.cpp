#include "czlab/fields.hpp"

#include "czlab/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace czlab {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// (G, DG, D^2 G) for a real radial profile, D = rho d/drho = (1/2) d/ds.
struct Jet {
    double v = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

Jet operator*(const Jet& a, const Jet& b)
{
    return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}

Jet operator*(double c, const Jet& a) { return {c * a.v, c * a.d1, c * a.d2}; }

// |z|^a = e^{a s}
Jet power_jet(double a, double s)
{
    const double e = std::exp(a * s);
    const double h = 0.5 * a;
    return {e, h * e, h * h * e};
}

// log log |z|^{-2} = log(-2 s); finite for every representable |z| in (0, 1).
Jet loglog_jet(double s) { return {std::log(-2.0 * s), 0.5 / s, -0.25 / (s * s)}; }

Jet rho_profile_jet(const Profile& p, double rho)
{
    return {p.value, rho * p.derivative, rho * p.derivative + rho * rho * p.second};
}

Jet psi_jet(double rho)
{
    if (rho <= 1.0 / 16.0) return {1.0, 0.0, 0.0};
    return rho_profile_jet(cutoff_psi(rho), rho);
}

Jet phi_jet(int nu, double s)
{
    const double rho = std::exp(2.0 * s);
    if (rho <= 1.0 / (std::pow(16.0, nu) + 1.0)) return 4.0 * power_jet(1.0 / nu, s);
    return rho_profile_jet(phi_nu(nu, rho), rho);
}

Complex upow(Complex u, int j)
{
    Complex out{1.0, 0.0};
    const Complex base = j >= 0 ? u : std::conj(u);
    for (int i = 0; i < std::abs(j); ++i) out *= base;
    return out;
}

// z^m G(|z|^2) and its derivatives at z = r u, |u| = 1, r > 0.
WirtingerValue first_from_jet(int m, const Jet& g, double r, Complex u)
{
    WirtingerValue out;
    const double rm1 = std::pow(r, m - 1);
    out.value = r * rm1 * upow(u, m) * g.v;
    out.dbar = rm1 * upow(u, m + 1) * g.d1;
    out.del = rm1 * upow(u, m - 1) * (m * g.v + g.d1);
    return out;
}

SecondWirtinger second_from_jet(int m, const Jet& g, double r, Complex u)
{
    SecondWirtinger out;
    const double rm2 = std::pow(r, m - 2);
    out.dbar_dbar = rm2 * upow(u, m + 2) * (g.d2 - g.d1);
    out.del_dbar = rm2 * upow(u, m) * (m * g.d1 + g.d2);
    out.del_del = rm2 * upow(u, m - 2) * ((m - 1) * (m * g.v + g.d1) + m * g.d1 + g.d2);
    return out;
}

bool is_closed_form(Family f)
{
    return f != Family::Mollified && f != Family::Custom;
}

bool cutoff_applied(const FieldSpec& spec)
{
    return spec.cutoff || spec.family == Family::UNu;
}

// Power of z in front of the radial profile, and the exponent of |z| in G
// near the center (0 for the Sikorav function).
int z_power(const FieldSpec& spec) { return spec.family == Family::HigherK ? spec.k + 1 : 1; }

double center_exponent(const FieldSpec& spec)
{
    return spec.family == Family::Sikorav ? 0.0 : 1.0 / spec.nu;
}

Jet profile_jet(const FieldSpec& spec, double r)
{
    const double s = std::log(r);
    Jet g = loglog_jet(s);
    switch (spec.family) {
    case Family::Sikorav: break;
    case Family::FNu:
    case Family::UNu:
    case Family::HigherK: g = power_jet(1.0 / spec.nu, s) * g; break;
    case Family::GNu: g = phi_jet(spec.nu, s) * g; break;
    default: throw UnsupportedError("no closed form for " + describe(spec));
    }
    if (cutoff_applied(spec)) g = psi_jet(r * r) * g;
    return g;
}

void check_domain(const FieldSpec& spec, Complex z)
{
    const double r = std::abs(z);
    const double R = domain_radius(spec);
    const bool inside = spec.family == Family::Mollified ? r <= R : r < R;
    if (!inside) {
        std::ostringstream os;
        os << describe(spec) << ": |z| = " << r << " outside the disc of radius " << R;
        throw DomainError(os.str());
    }
}

WirtingerValue apply_cutoff(const WirtingerValue& f, Complex z)
{
    const Profile psi = cutoff_psi(std::norm(z));
    WirtingerValue out = f;
    out.value = psi.value * f.value;
    out.dbar = psi.derivative * z * f.value + psi.value * f.dbar;
    out.del = psi.derivative * std::conj(z) * f.value + psi.value * f.del;
    return out;
}

}  // namespace

FieldSpec FieldSpec::sikorav(bool cutoff)
{
    FieldSpec s;
    s.family = Family::Sikorav;
    s.cutoff = cutoff;
    return s;
}

FieldSpec FieldSpec::f_nu(int nu)
{
    FieldSpec s;
    s.family = Family::FNu;
    s.nu = nu;
    return s;
}

FieldSpec FieldSpec::u_nu(int nu)
{
    FieldSpec s;
    s.family = Family::UNu;
    s.nu = nu;
    s.cutoff = true;
    return s;
}

FieldSpec FieldSpec::g_nu(int nu)
{
    FieldSpec s;
    s.family = Family::GNu;
    s.nu = nu;
    return s;
}

FieldSpec FieldSpec::higher_k(int k, int nu, bool cutoff)
{
    FieldSpec s;
    s.family = Family::HigherK;
    s.k = k;
    s.nu = nu;
    s.cutoff = cutoff;
    return s;
}

FieldSpec FieldSpec::mollified(double epsilon, bool cutoff)
{
    FieldSpec s;
    s.family = Family::Mollified;
    s.epsilon = epsilon;
    s.cutoff = cutoff;
    return s;
}

FieldSpec FieldSpec::custom_field(std::function<WirtingerValue(Complex)> fn, bool cutoff)
{
    FieldSpec s;
    s.family = Family::Custom;
    s.custom = std::move(fn);
    s.cutoff = cutoff;
    return s;
}

std::string describe(const FieldSpec& spec)
{
    std::ostringstream os;
    switch (spec.family) {
    case Family::Sikorav: os << "sikorav"; break;
    case Family::FNu: os << "f_nu(nu=" << spec.nu << ")"; break;
    case Family::UNu: os << "u_nu(nu=" << spec.nu << ")"; break;
    case Family::GNu: os << "g_nu(nu=" << spec.nu << ")"; break;
    case Family::HigherK: os << "higher_k(k=" << spec.k << ",nu=" << spec.nu << ")"; break;
    case Family::Mollified: os << "mollified(eps=" << spec.epsilon << ")"; break;
    case Family::Custom: os << "custom"; break;
    }
    if (spec.cutoff && spec.family != Family::UNu) os << "*psi";
    return os.str();
}

void validate(const FieldSpec& spec)
{
    switch (spec.family) {
    case Family::Sikorav: break;
    case Family::FNu:
    case Family::UNu:
    case Family::GNu:
        if (spec.nu < 1) throw ParameterError(describe(spec) + ": nu must be >= 1");
        if (spec.family == Family::GNu && spec.nu > 10)
            throw ParameterError(describe(spec) + ": nu > 10 is below double resolution of the smoothing interval");
        break;
    case Family::HigherK:
        if (spec.nu < 1) throw ParameterError(describe(spec) + ": nu must be >= 1");
        if (spec.k < 0) throw ParameterError(describe(spec) + ": k must be >= 0");
        break;
    case Family::Mollified:
        if (!(spec.epsilon > 0.0 && spec.epsilon < 0.1))
            throw ParameterError(describe(spec) + ": epsilon must lie in (0, 0.1)");
        break;
    case Family::Custom:
        if (!spec.custom) throw ParameterError("custom field without an evaluator");
        break;
    }
}

double domain_radius(const FieldSpec& spec)
{
    if (spec.family == Family::Sikorav && !spec.cutoff) return 0.6;
    return 0.5;
}

WirtingerValue eval(const FieldSpec& spec, Complex z)
{
    validate(spec);
    check_domain(spec, z);

    if (spec.family == Family::Mollified) {
        const WirtingerValue m = mollify(FieldSpec::sikorav(), spec.epsilon, z, spec.scheme);
        return spec.cutoff ? apply_cutoff(m, z) : m;
    }
    if (spec.family == Family::Custom) {
        const WirtingerValue c = spec.custom(z);
        return spec.cutoff ? apply_cutoff(c, z) : c;
    }

    const double r = std::abs(z);
    if (r == 0.0) {
        WirtingerValue out;
        if (z_power(spec) == 1 && center_exponent(spec) == 0.0) {
            out.del = inf;
            out.del_defined = false;
        }
        return out;
    }
    return first_from_jet(z_power(spec), profile_jet(spec, r), r, z / r);
}

SecondWirtinger eval_second(const FieldSpec& spec, Complex z)
{
    validate(spec);
    if (!is_closed_form(spec.family))
        throw UnsupportedError("second derivatives are not implemented for " + describe(spec));
    check_domain(spec, z);

    const double r = std::abs(z);
    const int m = z_power(spec);
    if (r == 0.0) {
        SecondWirtinger out;
        if (m == 1 || (m == 2 && center_exponent(spec) == 0.0)) {
            out = {inf, inf, inf, false};
        }
        return out;
    }
    return second_from_jet(m, profile_jet(spec, r), r, z / r);
}

Field make_field(const FieldSpec& spec)
{
    validate(spec);
    Field f;
    f.name = describe(spec);
    f.radius = std::min(domain_radius(spec), 0.5);
    f.first = [spec](Complex z) { return eval(spec, z); };
    if (is_closed_form(spec.family)) f.second = [spec](Complex z) { return eval_second(spec, z); };
    return f;
}

Field cutoff_polynomial(std::vector<Monomial> terms, std::string name)
{
    Field f;
    f.name = std::move(name);
    f.radius = 0.5;
    f.first = [terms = std::move(terms)](Complex z) {
        const Complex zb = std::conj(z);
        auto ipow = [](Complex b, int e) {
            Complex out{1.0, 0.0};
            for (int i = 0; i < e; ++i) out *= b;
            return out;
        };
        WirtingerValue p;
        for (const Monomial& t : terms) {
            p.value += t.coefficient * ipow(z, t.z_power) * ipow(zb, t.zbar_power);
            if (t.zbar_power > 0)
                p.dbar += t.coefficient * double(t.zbar_power) * ipow(z, t.z_power) * ipow(zb, t.zbar_power - 1);
            if (t.z_power > 0)
                p.del += t.coefficient * double(t.z_power) * ipow(z, t.z_power - 1) * ipow(zb, t.zbar_power);
        }
        return apply_cutoff(p, z);
    };
    return f;
}

}  // namespace czlab

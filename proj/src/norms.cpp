#include "czlab/norms.hpp"

#include "czlab/errors.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace czlab {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// Running sup of one component with its first maximizer in node order.
struct Sup {
    double value = -1.0;
    Complex at{};

    void update(double v, Complex z)
    {
        if (std::isnan(v)) throw DomainError("norm component evaluated to NaN");
        if (v > value) {
            value = v;
            at = z;
        }
    }
};

double magnitude_or_inf(Complex c, bool defined) { return defined ? std::abs(c) : inf; }

std::string scheme_id(const QuadratureScheme& scheme, double radius)
{
    std::ostringstream os;
    os << scheme.describe() << " on B(" << radius << ")";
    return os.str();
}

NormReport integral_norm(NormKind kind, int k, double p, const ComplexFn& power_sum, double radius,
                         const QuadratureScheme& scheme)
{
    const auto q = integrate_disc(power_sum, radius, scheme);
    NormReport out;
    out.kind = kind;
    out.k = k;
    out.p = p;
    const double integral = std::max(0.0, q.value.real());
    out.value = std::pow(integral, 1.0 / p);
    out.est_error = integral > 0.0 ? out.value * q.est_error / (p * integral) : q.est_error;
    out.accurate = q.accurate;
    out.grid_id = scheme_id(scheme, radius);
    return out;
}

void check_p(double p)
{
    if (!(p >= 1.0) || !std::isfinite(p)) throw ParameterError("p must be a finite real >= 1");
}

}  // namespace

NormReport ck_norm(const Field& field, int k, const DiscGrid& grid)
{
    if (k < 0) throw ParameterError("k must be nonnegative");
    if (k > 2 || (k == 2 && !field.second))
        throw UnsupportedError("C^" + std::to_string(k) + " norm needs derivatives not implemented for " +
                               field.name);

    std::array<Sup, 6> sup{};
    for (std::size_t n = 0; n < grid.node_count(); ++n) {
        const Complex z = grid.node(n);
        const WirtingerValue w = field.first(z);
        sup[0].update(std::abs(w.value), z);
        if (k >= 1) {
            sup[1].update(magnitude_or_inf(w.dbar, w.dbar_defined), z);
            sup[2].update(magnitude_or_inf(w.del, w.del_defined), z);
        }
        if (k >= 2) {
            const SecondWirtinger s = field.second(z);
            sup[3].update(magnitude_or_inf(s.dbar_dbar, s.defined), z);
            sup[4].update(magnitude_or_inf(s.del_dbar, s.defined), z);
            sup[5].update(magnitude_or_inf(s.del_del, s.defined), z);
        }
    }

    NormReport out;
    out.kind = NormKind::Ck;
    out.k = k;
    out.grid_id = grid.describe();
    const int components = k == 0 ? 1 : (k == 1 ? 3 : 6);
    const Sup* top = &sup[0];
    for (int c = 0; c < components; ++c) {
        out.value += sup[static_cast<std::size_t>(c)].value;
        if (c > 0 && sup[static_cast<std::size_t>(c)].value > top->value) top = &sup[static_cast<std::size_t>(c)];
    }
    out.argmax = top->at;
    return out;
}

NormReport ck_norm(const FieldSpec& spec, int k, const DiscGrid& grid)
{
    return ck_norm(make_field(spec), k, grid);
}

NormReport ck_norm_dbar(const Field& field, int k, const DiscGrid& grid)
{
    if (k < 0) throw ParameterError("k must be nonnegative");
    if (k > 1 || (k == 1 && !field.second))
        throw UnsupportedError("C^" + std::to_string(k) + " norm of dbar needs derivatives not implemented for " +
                               field.name);

    std::array<Sup, 3> sup{};
    for (std::size_t n = 0; n < grid.node_count(); ++n) {
        const Complex z = grid.node(n);
        const WirtingerValue w = field.first(z);
        sup[0].update(magnitude_or_inf(w.dbar, w.dbar_defined), z);
        if (k == 1) {
            const SecondWirtinger s = field.second(z);
            sup[1].update(magnitude_or_inf(s.dbar_dbar, s.defined), z);
            sup[2].update(magnitude_or_inf(s.del_dbar, s.defined), z);
        }
    }

    NormReport out;
    out.kind = NormKind::Ck;
    out.k = k;
    out.grid_id = grid.describe();
    out.value = sup[0].value;
    out.argmax = sup[0].at;
    if (k == 1) {
        out.value += sup[1].value + sup[2].value;
        out.argmax = sup[1].value >= sup[2].value ? sup[1].at : sup[2].at;
    }
    return out;
}

NormReport lp_norm(const ComplexFn& g, double p, double radius, const QuadratureScheme& scheme)
{
    check_p(p);
    return integral_norm(NormKind::Lp, 0, p, [&](Complex z) { return Complex{std::pow(std::abs(g(z)), p)}; },
                         radius, scheme);
}

NormReport wkp_norm(const Field& field, int k, double p, double radius, const QuadratureScheme& scheme)
{
    check_p(p);
    if (k < 0 || k > 1) throw UnsupportedError("W^{k,p} norms are implemented for k = 0 and k = 1");
    if (radius > field.radius) throw DomainError("integration disc exceeds the domain of " + field.name);
    auto power_sum = [&](Complex z) {
        const WirtingerValue w = field.first(z);
        double s = std::pow(std::abs(w.value), p);
        if (k == 1) s += std::pow(std::abs(w.dbar), p) + std::pow(std::abs(w.del), p);
        return Complex{s};
    };
    return integral_norm(NormKind::Wkp, k, p, power_sum, radius, scheme);
}

NormReport wkp_norm(const FieldSpec& spec, int k, double p, double radius, const QuadratureScheme& scheme)
{
    return wkp_norm(make_field(spec), k, p, radius, scheme);
}

}  // namespace czlab

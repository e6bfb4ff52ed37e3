#pragma once

// Radial/disc quadrature core shared by the scalar entry points in grids.hpp
// and the vector-valued integrals used by mollification and the weak
// derivative check.
//
// Layout of one evaluation of  int_0^R Phi(r) r^w dr :
//   dyadic annuli [R 2^{-(j+1)}, R 2^{-j}], Gauss-Legendre in r on each;
//   inner disc (0, r_in) mapped by r = r_in exp(-u/(w+1)), Gauss-Laguerre in u.
// The substitution turns log r^{-1} into a polynomial in u, so powers of
// log r^{-1} are integrated exactly on the inner disc.

#include "czlab/grids.hpp"
#include "czlab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace czlab::detail {

/// Fixed-size complex vector with the arithmetic the quadrature needs.
template <std::size_t N>
struct CVec {
    std::array<Complex, N> v{};

    Complex& operator[](std::size_t i) { return v[i]; }
    const Complex& operator[](std::size_t i) const { return v[i]; }

    friend CVec operator+(const CVec& a, const CVec& b)
    {
        CVec r;
        for (std::size_t i = 0; i < N; ++i) r.v[i] = a.v[i] + b.v[i];
        return r;
    }
    friend CVec operator-(const CVec& a, const CVec& b)
    {
        CVec r;
        for (std::size_t i = 0; i < N; ++i) r.v[i] = a.v[i] - b.v[i];
        return r;
    }
    friend CVec operator*(const CVec& a, double s)
    {
        CVec r;
        for (std::size_t i = 0; i < N; ++i) r.v[i] = a.v[i] * s;
        return r;
    }
};

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(Complex x) { return std::abs(x); }
template <std::size_t N>
double magnitude(const CVec<N>& x)
{
    double m = 0.0;
    for (const auto& c : x.v) m = std::max(m, std::abs(c));
    return m;
}

// Orders grow strictly with the level up to max_level, so two successive
// levels never coincide and the difference is an honest error estimate.
constexpr int max_level = 10;
inline int legendre_order(int level) { return 8 + 4 * level; }
inline int laguerre_order(int level) { return 12 + 8 * level; }
inline int angular_points(int level) { return 16 << level; }
// Composite panels per annulus, so features narrower than an annulus are
// resolved even where the polynomial order alone converges slowly.
inline int radial_panels(int level) { return 1 << (level / 2); }

constexpr int min_annuli = 4;
constexpr int max_annuli = 60;

/// e^{2 pi i k / M}, k = 0..M-1, cached per M.
const std::vector<Complex>& unit_roots(int m);

template <class T, class Phi>
T annulus_rule(Phi& phi, double a, double b, int w, int level)
{
    const GaussRule& rule = gauss_legendre(legendre_order(level));
    const int panels = radial_panels(level);
    const double width = (b - a) / panels;
    std::vector<T> terms;
    terms.reserve(rule.nodes.size() * static_cast<std::size_t>(panels));
    for (int p = 0; p < panels; ++p) {
        const double half = 0.5 * width;
        const double mid = a + (p + 0.5) * width;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double r = mid + half * rule.nodes[i];
            const double jac = half * rule.weights[i] * (w == 1 ? r : 1.0);
            terms.push_back(phi(r, level) * jac);
        }
    }
    return pairwise_sum(terms);
}

template <class T, class Phi>
T inner_disc_rule(Phi& phi, double r_in, int w, int level)
{
    const GaussRule& rule = gauss_laguerre(laguerre_order(level));
    const double p = static_cast<double>(w + 1);
    const double scale = std::pow(r_in, p) / p;
    std::vector<T> terms;
    terms.reserve(rule.nodes.size());
    // Largest u first so the smallest contributions are summed first.
    for (std::size_t i = rule.nodes.size(); i-- > 0;) {
        if (rule.weights[i] == 0.0) continue;
        const double r = r_in * std::exp(-rule.nodes[i] / p);
        if (r <= 0.0) continue;
        terms.push_back(phi(r, level) * (scale * rule.weights[i]));
    }
    return pairwise_sum(terms);
}

/// Refines `rule(level)` until two successive levels agree to `tol`.
template <class T, class Rule>
T converge(Rule&& rule, double tol, int max_refinements, double& err, bool& ok)
{
    T prev = rule(0);
    for (int level = 1; level <= max_refinements; ++level) {
        T cur = rule(level);
        err = magnitude(cur - prev);
        if (err <= tol) {
            ok = true;
            return cur;
        }
        prev = cur;
    }
    ok = false;
    return prev;
}

template <class T, class Phi>
QuadratureResult<T> integrate_radial_core(Phi&& phi, double r_max, int w,
                                          const QuadratureScheme& scheme)
{
    QuadratureResult<T> out;
    const auto annulus = [&](int j, int level) {
        const double b = std::ldexp(r_max, -j);
        return annulus_rule<T>(phi, 0.5 * b, b, w, level);
    };
    const auto inner = [&](int annuli, int level) {
        return inner_disc_rule<T>(phi, std::ldexp(r_max, -annuli), w, level);
    };
    const auto sum_inner_first = [](std::vector<T> parts) {
        std::reverse(parts.begin(), parts.end());
        return pairwise_sum(parts);
    };

    // Scale for the relative tolerance from a coarse pass.
    std::vector<T> coarse;
    for (int j = 0; j < min_annuli; ++j) coarse.push_back(annulus(j, 0));
    coarse.push_back(inner(min_annuli, 0));
    const double scale = std::max(1.0, magnitude(pairwise_sum(coarse)));
    const double tol = scheme.target_tol * scale;
    const int max_ref = std::clamp(scheme.max_refinements, 1, max_level);

    if (scheme.kind == QuadratureKind::polar_trapezoid) {
        T prev{};
        for (int level = 0; level <= max_ref; ++level) {
            const int annuli = min_annuli + 4 * level;
            std::vector<T> parts;
            for (int j = 0; j < annuli; ++j) parts.push_back(annulus(j, level));
            parts.push_back(inner(annuli, level));
            T cur = sum_inner_first(std::move(parts));
            if (level > 0) {
                out.est_error = magnitude(cur - prev);
                if (out.est_error <= tol) {
                    out.value = cur;
                    out.accurate = true;
                    return out;
                }
            }
            prev = cur;
        }
        out.value = prev;
        out.accurate = false;
        return out;
    }

    // polar_adaptive: annulus j gets tol 2^{-(j+2)}, the inner disc what is left.
    std::vector<T> parts;
    bool all_ok = true;
    for (int j = 0; j < max_annuli; ++j) {
        const double share = std::ldexp(tol, -(j + 2));
        double err = 0.0;
        bool ok = false;
        parts.push_back(converge<T>([&](int level) { return annulus(j, level); }, share,
                                    max_ref, err, ok));
        out.est_error += err;
        all_ok = all_ok && ok;

        const int annuli = j + 1;
        if (annuli < min_annuli) continue;
        double tail_err = 0.0;
        bool tail_ok = false;
        T tail = converge<T>([&](int level) { return inner(annuli, level); }, share, max_ref,
                             tail_err, tail_ok);
        if (tail_ok || annuli == max_annuli) {
            parts.push_back(tail);
            out.est_error += tail_err;
            all_ok = all_ok && tail_ok;
            break;
        }
    }
    out.value = sum_inner_first(std::move(parts));
    out.accurate = all_ok;
    return out;
}

/// Disc integral of a T-valued field around `center` (polar coordinates).
template <class T, class Field>
QuadratureResult<T> integrate_disc_impl(Field&& field, double radius,
                                        const QuadratureScheme& scheme, Complex center)
{
    long evals = 0;
    auto phi = [&](double r, int level) -> T {
        const auto& roots = unit_roots(angular_points(level));
        std::vector<T> terms(roots.size());
        for (std::size_t k = 0; k < roots.size(); ++k) terms[k] = field(center + r * roots[k]);
        evals += static_cast<long>(roots.size());
        return pairwise_sum(terms) * (2.0 * std::numbers::pi / static_cast<double>(roots.size()));
    };
    auto result = integrate_radial_core<T>(phi, radius, 1, scheme);
    result.evaluations = evals;
    return result;
}

}  // namespace czlab::detail

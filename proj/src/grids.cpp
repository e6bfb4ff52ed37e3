#include "czlab/grids.hpp"

#include "czlab/detail/disc_quadrature.hpp"
#include "czlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace czlab {

namespace {

std::vector<double> equispaced_angles(int n)
{
    std::vector<double> angles(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) angles[static_cast<std::size_t>(j)] = 2.0 * std::numbers::pi * j / n;
    return angles;
}

void sort_unique(std::vector<double>& radii)
{
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
}

}  // namespace

DiscGrid DiscGrid::make(double radius, int n_radial, int n_angular, double r_min,
                        std::span<const double> mandatory)
{
    if (!(radius > 0.0)) throw ParameterError("grid radius must be positive");
    if (n_radial < 2 || n_angular < 1)
        throw ParameterError("grid needs n_radial >= 2 and n_angular >= 1");
    if (!(r_min > 0.0) || r_min > 1e-8 * radius)
        throw ParameterError("grid r_min must lie in (0, 1e-8 * radius]");

    DiscGrid grid;
    grid.radius = radius;
    grid.n_radial = n_radial;
    grid.n_angular = n_angular;
    grid.r_min = r_min;

    const double r_max = radius * (1.0 - 1.0 / n_radial);
    const double log_ratio = std::log(r_max / r_min);
    grid.radii.reserve(static_cast<std::size_t>(n_radial) + mandatory.size());
    for (int i = 0; i < n_radial; ++i)
        grid.radii.push_back(r_min * std::exp(log_ratio * i / (n_radial - 1)));
    grid.radii.back() = r_max;
    for (double r : mandatory)
        if (r > 0.0 && r < radius) grid.radii.push_back(r);
    sort_unique(grid.radii);
    grid.angles = equispaced_angles(n_angular);
    return grid;
}

DiscGrid DiscGrid::refined() const
{
    DiscGrid fine = *this;
    fine.n_radial = 2 * n_radial;
    fine.n_angular = 2 * n_angular;
    for (std::size_t i = 0; i + 1 < radii.size(); ++i)
        fine.radii.push_back(std::sqrt(radii[i] * radii[i + 1]));
    // Extend toward the rim: radius (1 - 1/n) for the doubled count.
    const double outer = radius * (1.0 - 1.0 / fine.n_radial);
    if (!radii.empty() && outer > radii.back()) {
        fine.radii.push_back(std::sqrt(radii.back() * outer));
        fine.radii.push_back(outer);
    }
    sort_unique(fine.radii);
    fine.angles = equispaced_angles(fine.n_angular);  // contains the old angles
    for (std::size_t j = 0; j < angles.size(); ++j) fine.angles[2 * j] = angles[j];
    return fine;
}

bool DiscGrid::contains_radius(double r) const
{
    return std::any_of(radii.begin(), radii.end(),
                       [r](double x) { return std::abs(x - r) <= 1e-14 * r; });
}

Complex DiscGrid::node(std::size_t index) const
{
    if (index == 0) return {};
    const std::size_t k = index - 1;
    const std::size_t i = k / angles.size();
    const std::size_t j = k % angles.size();
    if (i >= radii.size()) throw DomainError("grid node index out of range");
    if (j == 0) return {radii[i], 0.0};  // keep real-axis nodes exactly real
    return std::polar(radii[i], angles[j]);
}

std::string DiscGrid::describe() const
{
    std::ostringstream os;
    os.precision(6);
    os << "disc(R=" << radius << ",n_radial=" << n_radial << ",n_angular=" << n_angular
       << ",r_min=" << r_min << ",radii=" << radii.size() << ")";
    return os.str();
}

std::string QuadratureScheme::describe() const
{
    std::ostringstream os;
    os << (kind == QuadratureKind::polar_adaptive ? "polar_adaptive" : "polar_trapezoid")
       << "(tol=" << target_tol << ",max_refinements=" << max_refinements << ")";
    return os.str();
}

namespace detail {

const std::vector<Complex>& unit_roots(int m)
{
    static std::map<int, std::unique_ptr<std::vector<Complex>>> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto& slot = cache[m];
    if (!slot) {
        slot = std::make_unique<std::vector<Complex>>(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k)
            (*slot)[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * k / m);
    }
    return *slot;
}

}  // namespace detail

QuadratureResult<Complex> integrate_disc(const ComplexFn& field, double radius,
                                         const QuadratureScheme& scheme, Complex center)
{
    if (!(radius > 0.0)) throw ParameterError("integration radius must be positive");
    if (!(scheme.target_tol > 0.0)) throw ParameterError("target_tol must be positive");
    return detail::integrate_disc_impl<Complex>(field, radius, scheme, center);
}

QuadratureResult<double> integrate_radial(const std::function<double(double)>& g, double r_max,
                                          const QuadratureScheme& scheme, int weight_power)
{
    if (!(r_max > 0.0)) throw ParameterError("integration radius must be positive");
    if (weight_power != 0 && weight_power != 1) throw ParameterError("weight_power must be 0 or 1");
    if (!(scheme.target_tol > 0.0)) throw ParameterError("target_tol must be positive");
    long evals = 0;
    auto phi = [&](double r, int) {
        ++evals;
        return g(r);
    };
    auto result = detail::integrate_radial_core<double>(phi, r_max, weight_power, scheme);
    result.evaluations = evals;
    return result;
}

FdWirtinger fd_wirtinger(const ComplexFn& field, Complex z, double h, double domain_radius)
{
    if (!(h > 0.0)) throw ParameterError("finite-difference step must be positive");
    const Complex ih{0.0, h};
    const Complex stencil[4] = {z + h, z - h, z + ih, z - ih};
    for (const Complex& p : stencil)
        if (std::abs(p) >= domain_radius) throw DomainError("finite-difference stencil leaves the domain");
    const Complex dx = (field(stencil[0]) - field(stencil[1])) / (2.0 * h);
    const Complex dy = (field(stencil[2]) - field(stencil[3])) / (2.0 * h);
    const Complex i{0.0, 1.0};
    return {0.5 * (dx + i * dy), 0.5 * (dx - i * dy)};
}

SupResult sup_on_grid(const RealFn& field, const DiscGrid& grid)
{
    SupResult best{-1.0, {}};
    for (std::size_t n = 0; n < grid.node_count(); ++n) {
        const Complex z = grid.node(n);
        const double v = std::abs(field(z));
        if (std::isnan(v)) throw DomainError("field evaluated to NaN on a grid node");
        if (v > best.sup) best = {v, z};
    }
    return best;
}

}  // namespace czlab

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace czlab {

using Complex = std::complex<double>;

/// Polar discretization of the open disc B_radius, geometrically refined
/// toward the center. Nodes are (radii[i], angles[j]); the center itself is
/// not a node but every sup taken over a grid includes it.
struct DiscGrid {
    double radius = 0.5;
    int n_radial = 0;
    int n_angular = 0;
    double r_min = 0.0;
    std::vector<double> radii;   ///< strictly increasing, all in (0, radius)
    std::vector<double> angles;  ///< n_angular equispaced angles in [0, 2pi)

    /// Geometric radii from r_min to radius * (1 - 1/n_radial), plus every
    /// entry of `mandatory` lying in (0, radius). Throws ParameterError when
    /// r_min > 1e-8 * radius or the counts are not positive.
    static DiscGrid make(double radius, int n_radial, int n_angular, double r_min,
                         std::span<const double> mandatory = {});

    /// Nested refinement: keeps every node, inserts geometric midpoints between
    /// consecutive radii, extends toward the rim and doubles the angular count.
    DiscGrid refined() const;

    bool contains_radius(double r) const;
    std::size_t node_count() const { return radii.size() * angles.size() + 1; }

    /// Node `index` in [0, node_count()); index 0 is the center.
    Complex node(std::size_t index) const;

    std::string describe() const;
};

enum class QuadratureKind { polar_trapezoid, polar_adaptive };

/// polar_trapezoid refines every annulus together and compares successive
/// global levels; polar_adaptive refines annulus by annulus and grows the
/// number of annuli until the log-substituted inner disc has converged.
struct QuadratureScheme {
    QuadratureKind kind = QuadratureKind::polar_adaptive;
    double target_tol = 1e-10;  ///< relative to max(1, |integral|)
    int max_refinements = 8;

    std::string describe() const;
};

template <class T>
struct QuadratureResult {
    T value{};
    double est_error = 0.0;
    bool accurate = true;  ///< false when max_refinements was hit first
    long evaluations = 0;
};

using ComplexFn = std::function<Complex(Complex)>;
using RealFn = std::function<double(Complex)>;

/// Integral of `field` over the disc of `radius` around `center` with respect
/// to planar Lebesgue measure. The integrand may be unbounded (but integrable)
/// at `center`.
QuadratureResult<Complex> integrate_disc(const ComplexFn& field, double radius,
                                         const QuadratureScheme& scheme,
                                         Complex center = {});

/// One-dimensional integral of g(r) r^weight_power over (0, r_max);
/// weight_power is 0 or 1. g may have an integrable singularity at r = 0.
QuadratureResult<double> integrate_radial(const std::function<double(double)>& g,
                                          double r_max, const QuadratureScheme& scheme,
                                          int weight_power = 0);

struct FdWirtinger {
    Complex dbar;
    Complex del;
};

/// Central-difference Wirtinger derivatives
///   dbar = (d_x + i d_y) / 2,  del = (d_x - i d_y) / 2
/// from the four points z +- h, z +- ih. When `domain_radius` is finite, a
/// stencil point at or beyond it raises DomainError.
FdWirtinger fd_wirtinger(const ComplexFn& field, Complex z, double h,
                         double domain_radius = std::numeric_limits<double>::infinity());

struct SupResult {
    double sup = 0.0;
    Complex argmax{};
};

/// max |field| over the center and all grid nodes; the first maximizer in node
/// order wins ties. A NaN value is reported as DomainError.
SupResult sup_on_grid(const RealFn& field, const DiscGrid& grid);

}  // namespace czlab

#pragma once

// Drivers that combine fields, grids and norms into sequence reports.

#include "czlab/fields.hpp"
#include "czlab/grids.hpp"
#include "czlab/norms.hpp"
#include "czlab/report.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace czlab {

/// Pieces of the uniform bound on ||dbar u_nu||_{C^k}.
///   k = 0:  B = c1 + c2 + psi_term,
///           c1 = 1/e, c2 = 1/log 4,
///           psi_term = sup_t |psi'(t)| sqrt(t) * sup_{r<1/2} r log log r^{-2}.
///   k = 1:  B = 3.5 d1 + 2 d2 with
///           d1 = S1 + c1 + c2,  d2 = S2 + 2 S1 (c1 + c2) + c1/2 + c2 + c3,
///           c3 = 1/(log 4)^2,  S_j = sup |D^j psi| log log rho^{-1}
///           over the transition of psi (D = rho d/drho).
/// The suprema are taken on dense one-dimensional samples.
struct CounterexampleBound {
    int k = 0;
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double psi_term = 0.0;  ///< k = 0 only
    double s1 = 0.0;        ///< k = 1 only
    double s2 = 0.0;        ///< k = 1 only
    double total = 0.0;
};

CounterexampleBound counterexample_bound(int k);

/// Closed-form lower bound for ||u_nu||_{C^{k+1}} from the value of the top
/// derivative at z = 2^{-nu}:  k = 0 gives (1/2) log log 2^{2 nu};
/// k = 1 gives |del del u_nu(2^{-nu})|. Zero when 2^{-nu} is not inside B_1/2.
double counterexample_lower_bound(int k, int nu);

/// 2^{-nu} for nu = 1..nu_max.
std::vector<double> dyadic_radii(int nu_max);

/// Radii resolving the support of dbar g_nu - dbar f for nu = 1..nu_max:
/// 4^{-nu}, a geometric fan below it and points inside the smoothing annulus
/// of phi_nu.
std::vector<double> interpolation_radii(int nu_max);

/// Rows per nu = 1..nu_max (k = 0 uses u_nu, k = 1 the cut-off z^2 family).
/// Row passes when ||dbar u||_{C^k} <= B, ||u||_{C^{k+1}} >= lower bound - 1e-9
/// and, for nu >= 3, the ratio exceeds the previous one. ConfigError when
/// the grid lacks a radius 2^{-nu} inside the disc; UnsupportedError for k > 1.
SequenceReport run_counterexample(int k, int nu_max, const DiscGrid& grid);

/// Rows per epsilon: grid sups of |f^eps - f|, |dbar f^eps - dbar f| and
/// |dbar(psi f^eps) - dbar(psi f)|. Rows pass when every column strictly
/// decreases; summary checks require the last row below `final_tol`.
SequenceReport run_mollification(std::span<const double> epsilons, const DiscGrid& grid,
                                 const QuadratureScheme& scheme, double final_tol = 0.05);

/// Rows per nu: grid sup of |dbar g_nu - dbar f| against the bound
/// 8 16^{-nu} log 16^nu + 1/(2 nu log 16), the valid bound
/// log(2 nu log 4)/nu + 1/(nu log 16), and the slope check of phi_nu.
SequenceReport run_interpolation(int nu_max, const DiscGrid& grid, int slope_samples = 10000);

struct TestBump {
    Complex center;
    double radius = 0.0;
};

/// Bump 0 is centered at the origin with radius 0.2; the others have random
/// radii in [0.03, 0.15] and centers keeping the support inside B_1/2.
std::vector<TestBump> make_test_bumps(int count, std::uint64_t seed = 20240611);

/// Integration-by-parts residuals  |int dbar f phi + int f dbar phi|  and the
/// del analogue for each bump, at `scheme` and at a 100x tighter tolerance.
/// A row passes when both residuals are below 1e-5 (1 + scale), with
/// scale = int |dbar phi| + int |del phi|, and the refined residuals do not
/// exceed the coarse ones by more than their error estimate.
SequenceReport run_weak_derivative_check(const FieldSpec& spec, std::span<const TestBump> bumps,
                                         const QuadratureScheme& scheme);
SequenceReport run_weak_derivative_check(const FieldSpec& spec, int count, const QuadratureScheme& scheme,
                                         std::uint64_t seed = 20240611);

struct CzOptions {
    double p = 4.0;
    int nu_max = 8;
    int polynomials = 8;            ///< seeded psi-cutoff polynomials added to the family
    std::uint64_t seed = 20240611;
    double bounded_factor = 10.0;   ///< max/min of the Sobolev ratio over u_nu
    double growth_factor = 2.0;     ///< last/first of the C ratio over u_nu
};

/// Rows per test field: ||u||_{1,p} / ||dbar u||_{0,p} next to
/// ||u||_{C^1} / ||dbar u||_{C^0}. ConfigError when a field does not vanish
/// on the outer annulus.
SequenceReport run_cz_estimator(const CzOptions& options, const DiscGrid& grid, const QuadratureScheme& scheme);

/// Central differences of the value against the closed-form derivatives at
/// `points` random z with 1e-3 < |z| < 0.45 (log-uniform radius). A point
/// passes when err(h/2) <= 0.35 err(h) or err(h) sits at the rounding floor.
SequenceReport run_derivative_crosscheck(std::span<const FieldSpec> specs, int points,
                                         std::uint64_t seed = 20240611);

/// One representative of every family.
std::vector<FieldSpec> crosscheck_specs();

}  // namespace czlab

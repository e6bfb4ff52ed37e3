#pragma once

// Closed-form evaluation of the counterexample functions and their Wirtinger
// derivatives
//
//   dbar = (d_x + i d_y) / 2,   del = (d_x - i d_y) / 2.
//
// Every closed-form family has the shape  F(z) = z^m G(|z|^2)  with G real,
// which gives
//
//   dbar F = z^m (D G) / conj(z),       del F = z^{m-1} (m G + D G),
//
// where D = rho d/drho = (1/2) d/ds in s = log|z|. G, DG and D^2 G are
// computed in s, so nothing underflows near the singular center.

#include "czlab/grids.hpp"

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace czlab {

using Complex = std::complex<double>;

enum class Family {
    Sikorav,    ///< f(z) = z log log |z|^{-2}
    FNu,        ///< f_nu(z) = z |z|^{1/nu} log log |z|^{-2}
    UNu,        ///< u_nu = psi(|z|^2) f_nu  (cutoff always applied)
    GNu,        ///< g_nu = phi_nu(|z|^2) f
    HigherK,    ///< z^{k+1} |z|^{1/nu} log log |z|^{-2}
    Mollified,  ///< rho_eps * f
    Custom,     ///< caller-supplied closed form
};

struct WirtingerValue {
    Complex value{};
    Complex dbar{};
    Complex del{};
    bool dbar_defined = true;  ///< false where the derivative has no continuous extension
    bool del_defined = true;
    bool accurate = true;      ///< false when a quadrature behind the value did not converge
};

struct SecondWirtinger {
    Complex dbar_dbar{};
    Complex del_dbar{};
    Complex del_del{};
    bool defined = true;
};

struct FieldSpec {
    Family family = Family::Sikorav;
    int nu = 1;
    int k = 0;
    double epsilon = 0.0;
    bool cutoff = false;
    std::function<WirtingerValue(Complex)> custom;
    QuadratureScheme scheme{QuadratureKind::polar_adaptive, 1e-10, 8};  ///< Mollified only

    static FieldSpec sikorav(bool cutoff = false);
    static FieldSpec f_nu(int nu);
    static FieldSpec u_nu(int nu);
    static FieldSpec g_nu(int nu);
    static FieldSpec higher_k(int k, int nu, bool cutoff = false);
    static FieldSpec mollified(double epsilon, bool cutoff = false);
    static FieldSpec custom_field(std::function<WirtingerValue(Complex)> fn, bool cutoff = false);
};

std::string describe(const FieldSpec& spec);

/// Throws ParameterError for out-of-range parameters.
void validate(const FieldSpec& spec);

/// Radius of the disc the family is evaluated on. The bare Sikorav function
/// extends to B_0.6 so that it can be mollified up to the rim of B_1/2.
double domain_radius(const FieldSpec& spec);

/// Value and first Wirtinger derivatives. At z = 0 all closed-form families
/// return 0 with the derivative defined, except del of the Sikorav function,
/// which diverges to +infinity there and is flagged undefined.
WirtingerValue eval(const FieldSpec& spec, Complex z);

/// Second Wirtinger derivatives for the closed-form families (everything
/// but Mollified and Custom, which raise UnsupportedError).
SecondWirtinger eval_second(const FieldSpec& spec, Complex z);

struct Profile {
    double value = 0.0;
    double derivative = 0.0;
    double second = 0.0;
};

/// Smooth cutoff: 1 on [0, 1/16], 0 on [3/16, inf), monotone smooth step
/// built from exp(-1/x) in between.
Profile cutoff_psi(double t);

/// Smoothing of  t -> 4 t^{1/(2 nu)} (t <= 16^{-nu}),  1 (t >= 16^{-nu})
/// on [1/(16^nu + 1), 16^{-nu}]. Domain error for t outside [0, 1/2).
Profile phi_nu(int nu, double t);

struct SlopeCheck {
    int samples = 0;
    int violations = 0;
    double max_ratio = 0.0;  ///< max of phi_nu'(t) / ((4/nu) t^{1/(2nu)-1})
};

/// Samples  0 <= phi_nu' < (4/nu) t^{1/(2nu)-1}  on (0, 16^{-nu}): half the
/// points spread over the smoothing interval, half log-spaced below it.
SlopeCheck check_phi_slope(int nu, int samples = 10000);

/// Normalization C of the standard mollifier  C exp(1/(|z|^2-1)), computed
/// once by quadrature.
double mollifier_constant();

/// rho_eps(z) = eps^{-2} rho(z / eps).
double mollifier_rho(Complex z, double epsilon);

/// Test bump rho_radius(z - center) with its Wirtinger derivatives.
WirtingerValue mollifier_bump(Complex z, Complex center, double radius);

/// (rho_eps * f)(z) and its derivatives computed as rho_eps * dbar f and
/// rho_eps * del f. The source must be the bare Sikorav function; eps must
/// lie in (0, 0.1) and |z| <= 1/2.
WirtingerValue mollify(const FieldSpec& source, double epsilon, Complex z,
                       const QuadratureScheme& scheme = {QuadratureKind::polar_adaptive, 1e-10, 8});

/// Type-erased field for the norm estimators. `second` is empty when the
/// field has no second derivatives.
struct Field {
    std::string name;
    double radius = 0.5;
    std::function<WirtingerValue(Complex)> first;
    std::function<SecondWirtinger(Complex)> second;
};

Field make_field(const FieldSpec& spec);

struct Monomial {
    Complex coefficient;
    int z_power = 0;
    int zbar_power = 0;
};

/// psi(|z|^2) * sum c z^a conj(z)^b, with closed-form first derivatives.
Field cutoff_polynomial(std::vector<Monomial> terms, std::string name = "cutoff_polynomial");

}  // namespace czlab

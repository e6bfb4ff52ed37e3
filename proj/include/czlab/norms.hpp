#pragma once

// Grid and quadrature estimates of C^k, L^p and W^{k,p} norms on discs.
//
// Conventions: ||u||_{C^1} = sup|u| + sup|dbar u| + sup|del u|, and W^{k,p}
// sums the p-th power integrals of all components up to order k before taking
// one p-th root.

#include "czlab/fields.hpp"
#include "czlab/grids.hpp"

#include <optional>
#include <string>

namespace czlab {

enum class NormKind { Ck, Lp, Wkp };

struct NormReport {
    NormKind kind = NormKind::Ck;
    int k = 0;
    std::optional<double> p;   ///< absent for Ck
    double value = 0.0;
    Complex argmax{};          ///< maximizer of the top-order sup (Ck only)
    std::string grid_id;
    bool accurate = true;
    double est_error = 0.0;    ///< quadrature estimate (Lp/Wkp only)
};

/// k = 0: sup|u|; k = 1: adds sup|dbar u| + sup|del u|; k = 2 adds the sups
/// of the three second derivatives and needs `field.second`. A derivative
/// that is undefined at a node counts as +infinity. UnsupportedError for
/// k > 2 or missing second derivatives.
NormReport ck_norm(const Field& field, int k, const DiscGrid& grid);
NormReport ck_norm(const FieldSpec& spec, int k, const DiscGrid& grid);

/// ||dbar u||_{C^k} for k = 0 (sup|dbar u|) or k = 1 (adds sup|dbar dbar u|
/// and sup|del dbar u|).
NormReport ck_norm_dbar(const Field& field, int k, const DiscGrid& grid);

/// (int_{B_radius} |g|^p)^{1/p}, p >= 1.
NormReport lp_norm(const ComplexFn& g, double p, double radius, const QuadratureScheme& scheme);

/// ||u||_{k,p} for k = 0 or 1 over B_radius.
NormReport wkp_norm(const Field& field, int k, double p, double radius, const QuadratureScheme& scheme);
NormReport wkp_norm(const FieldSpec& spec, int k, double p, double radius, const QuadratureScheme& scheme);

}  // namespace czlab

#pragma once

#include "advect/scheme_id.hpp"
#include "advect/shift_operator.hpp"
#include "advect/two_moment.hpp"
#include "advect/xi_polynomial.hpp"

namespace advect {

/// FR correction pair on xi in [0, 1]; gL(0) = 1, gL(1) = 0, gR(0) = 0, gR(1) = 1.
struct CorrectionFunction {
  Correction kind = Correction::radau;
  int order = 1;
  XiPolynomial gL;
  XiPolynomial gR;
};

/// Built from the general Legendre formulas; throws NumericalFailure if an endpoint
/// condition does not hold. Only order N = 1 is supported.
CorrectionFunction correction_function(Correction kind, int order = 1);

/// Two-stage coefficients: stage state at K dt, final flux weights (M0, M1) and
/// flux-derivative weights (N0, N1).
struct S2O4Coefficients {
  Rational K, M0, M1, N0, N1;

  static S2O4Coefficients fourth_order();
  friend bool operator==(const S2O4Coefficients&, const S2O4Coefficients&) = default;
};

/// Semi-discrete operators (h/c) d/dt (ubar, v) for c > 0.
namespace semi_discrete {
/// Upwind flux on the linear trace; slope evolved as in Eq 3.8.
OperatorMatrix cgks();
/// p1 Galerkin with exact mass matrix and upwind flux.
OperatorMatrix dg();
/// N = 1 flux reconstruction with the given correction function (modal form).
OperatorMatrix fr(const CorrectionFunction& g);
}  // namespace semi_discrete

/// I + nu A + nu^2/2 A^2.
OperatorMatrix rk2(const OperatorMatrix& a);
/// I + nu A + nu^2/2 A W, W the Lax-Wendroff time-derivative map (ubar, v) -> (-v, 0).
OperatorMatrix s1o2(const OperatorMatrix& a);

/// Throws UnsupportedScheme for combinations without a stencil (e.g. GRP with RK2).
TwoMomentRule build_rule(const SchemeId& id);

/// CGKS-S2O4 with linear HWENO reconstruction; the slope row is reconstructed.
TwoMomentRule build_s2o4_rule(const S2O4Coefficients& coeffs = S2O4Coefficients::fourth_order());

/// GRP Steps 1-3 for u_t + u_x = 0 (c > 0) on a periodic field; nu in (0, 1].
TwoMomentField grp_step(const TwoMomentField& field, double nu);

}  // namespace advect

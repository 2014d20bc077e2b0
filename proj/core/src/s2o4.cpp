#include "advect/schemes.hpp"

namespace advect {

namespace {

ShiftPolynomial E(int power, Rational scale = Rational(1)) {
  return ShiftPolynomial::shift(power, scale);
}

ShiftPolynomial nu_term(int power, Rational scale) {
  return ShiftPolynomial::constant(NuPolynomial::monomial(scale, power));
}

// Rows give a quantity at x_{j+1/2} from the stencil of cell j.

/// Upwind (left) interface value, exact for quartics.
RowOperator interface_value() {
  return {E(-1, Rational(-23, 120)) + E(0, Rational(19, 30)) + E(1, Rational(67, 120)),
          E(-1, Rational(-3, 40)) + E(1, Rational(-7, 40))};
}

/// h u_x at the interface from averages.
RowOperator interface_slope() {
  return {E(2, Rational(-1, 12)) + E(-1, Rational(1, 12)) + E(1, Rational(5, 4)) +
              E(0, Rational(-5, 4)),
          {}};
}

/// h^2 u_xx at the interface; the point value term uses interface_value().
RowOperator interface_curvature() {
  const RowOperator point = interface_value();
  RowOperator row{E(2, Rational(-1, 8)) + E(-1, Rational(-1, 8)) + E(1, Rational(31, 8)) +
                      E(0, Rational(31, 8)),
                  {}};
  return row - E(0, Rational(15, 2)) * point;
}

/// Quantity at x_{j+1/2} minus the same quantity at x_{j-1/2}.
RowOperator across_cell(const RowOperator& at_interface) {
  return at_interface - E(-1) * at_interface;
}

}  // namespace

TwoMomentRule build_s2o4_rule(const S2O4Coefficients& k) {
  const OperatorMatrix state0 = OperatorMatrix::identity();
  const RowOperator value = interface_value();
  const RowOperator slope = interface_slope();
  const RowOperator curvature = interface_curvature();

  // dt L and dt^2 L_t for linear advection, in units of nu and nu^2.
  auto flux_term = [&](const OperatorMatrix& s) { return E(0, Rational(-1)) * across_cell(value * s); };
  auto flux_rate_term = [&](const OperatorMatrix& s) { return across_cell(slope * s); };
  // Point value along the characteristic after tau = fraction * dt.
  auto evolved_value = [&](const OperatorMatrix& s0, const OperatorMatrix& s1, Rational m0,
                           Rational m1, Rational n0, Rational n1, Rational fraction) {
    return value * s0 - nu_term(1, fraction) * (E(0, m0) * (slope * s0) + E(0, m1) * (slope * s1)) +
           nu_term(2, fraction * fraction / 2) *
               (E(0, n0) * (curvature * s0) + E(0, n1) * (curvature * s1));
  };

  // Stage 1 at t^n + K dt.
  const RowOperator average1 = state0.average_row() + nu_term(1, k.K) * flux_term(state0) +
                               nu_term(2, k.K * k.K / 2) * flux_rate_term(state0);
  const RowOperator value1 =
      evolved_value(state0, state0, Rational(1), Rational(0), Rational(1), Rational(0), k.K);
  const OperatorMatrix state1(average1, across_cell(value1));

  // Stage 2 to t^{n+1}.
  const RowOperator average2 =
      state0.average_row() +
      nu_term(1, Rational(1)) * (E(0, k.M0) * flux_term(state0) + E(0, k.M1) * flux_term(state1)) +
      nu_term(2, Rational(1, 2)) *
          (E(0, k.N0) * flux_rate_term(state0) + E(0, k.N1) * flux_rate_term(state1));
  const RowOperator value2 = evolved_value(state0, state1, k.M0, k.M1, k.N0, k.N1, Rational(1));

  return to_rule(OperatorMatrix(average2, across_cell(value2)), schemes_id::cgks_s2o4,
                 SlopeRow::reconstructed);
}

}  // namespace advect

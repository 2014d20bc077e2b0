#include "advect/schemes.hpp"

#include "advect/errors.hpp"

#include <fmt/format.h>

#include <cmath>

namespace advect {

namespace {

ShiftPolynomial E(int power, Rational scale = Rational(1)) {
  return ShiftPolynomial::shift(power, scale);
}

ShiftPolynomial one() { return ShiftPolynomial::constant(Rational(1)); }

NuPolynomial nu_power(int k, Rational scale = Rational(1)) {
  return NuPolynomial::monomial(scale, k);
}

/// Right trace of cell j: u_j(xi = 1) = ubar_j + v_j / 2.
RowOperator right_trace() { return {one(), E(0, Rational(1, 2))}; }

/// Upwind flux difference -(F_{j+1/2} - F_{j-1/2}) for the given interface row.
RowOperator minus_flux_difference(const RowOperator& interface_row) {
  return E(-1) * interface_row - interface_row;
}

void require_endpoints(const CorrectionFunction& g) {
  const bool ok = g.gL(Rational(0)) == Rational(1) && g.gL(Rational(1)) == Rational(0) &&
                  g.gR(Rational(0)) == Rational(0) && g.gR(Rational(1)) == Rational(1);
  if (!ok) throw NumericalFailure("correction function violates the endpoint conditions");
}

}  // namespace

CorrectionFunction correction_function(Correction kind, int order) {
  if (order != 1) throw DomainError(fmt::format("correction order N = {} is not supported", order));
  if (kind == Correction::none) throw UnsupportedScheme("no correction function for 'none'");
  const int n = order;
  const Rational sign(n % 2 == 0 ? 1 : -1);
  const XiPolynomial ln = shifted_legendre(n);
  const XiPolynomial ln1 = shifted_legendre(n + 1);
  XiPolynomial partner = ln1;
  if (kind == Correction::g2) {
    partner = (shifted_legendre(n - 1) * Rational(n + 1) + ln1 * Rational(n)) * Rational(1, 2 * n + 1);
  }
  CorrectionFunction g;
  g.kind = kind;
  g.order = n;
  g.gL = (ln - partner) * (sign / 2);
  g.gR = (ln + partner) * Rational(1, 2);
  require_endpoints(g);
  return g;
}

S2O4Coefficients S2O4Coefficients::fourth_order() {
  return {Rational(1, 2), Rational(1), Rational(0), Rational(1, 3), Rational(2, 3)};
}

namespace semi_discrete {

OperatorMatrix cgks() {
  return OperatorMatrix(minus_flux_difference(right_trace()), {{}, E(-1) - one()});
}

OperatorMatrix dg() {
  // Test function xi - 1/2 has mass 1/12:
  // (1/12) v_t = ubar_j - (u_j(1) + u_{j-1}(1)) / 2
  const RowOperator trace = right_trace();
  const RowOperator mean_trace = E(0, Rational(1, 2)) * trace + E(-1, Rational(1, 2)) * trace;
  const RowOperator own_average{one(), {}};
  return OperatorMatrix(minus_flux_difference(trace), E(0, Rational(12)) * (own_average - mean_trace));
}

OperatorMatrix fr(const CorrectionFunction& g) {
  if (g.order != 1) throw DomainError("FR operator is built for N = 1 only");
  // u_t = -(c/h) (v + J gL'(xi)),  J = u_{j-1}(1) - u_j(0); the right jump vanishes (upwind).
  const RowOperator left_trace{one(), E(0, Rational(-1, 2))};
  const RowOperator jump = E(-1) * right_trace() - left_trace;
  const Rational mean_gl_prime = g.gL(Rational(1)) - g.gL(Rational(0));
  const Rational gl_second = g.gL.derivative().derivative()(Rational(0));
  const RowOperator slope_value{{}, one()};
  const RowOperator average_rate =
      E(0, Rational(-1)) * slope_value - E(0, mean_gl_prime) * jump;
  const RowOperator slope_rate = E(0, -gl_second) * jump;
  return OperatorMatrix(average_rate, slope_rate);
}

}  // namespace semi_discrete

OperatorMatrix rk2(const OperatorMatrix& a) {
  return OperatorMatrix::identity() + ShiftPolynomial::constant(nu_power(1)) * a +
         ShiftPolynomial::constant(nu_power(2, Rational(1, 2))) * (a * a);
}

OperatorMatrix s1o2(const OperatorMatrix& a) {
  const OperatorMatrix w({{}, -one()}, {{}, {}});
  return OperatorMatrix::identity() + ShiftPolynomial::constant(nu_power(1)) * a +
         ShiftPolynomial::constant(nu_power(2, Rational(1, 2))) * (a * w);
}

TwoMomentRule build_rule(const SchemeId& id) {
  switch (id.family()) {
    case Family::cgks:
      if (id.integrator() == TimeIntegrator::s1o2) return to_rule(s1o2(semi_discrete::cgks()), id);
      if (id.integrator() == TimeIntegrator::rk2) return to_rule(rk2(semi_discrete::cgks()), id);
      return build_s2o4_rule();
    case Family::grp:
      if (id.integrator() == TimeIntegrator::s1o2) return to_rule(s1o2(semi_discrete::cgks()), id);
      break;
    case Family::dg:
      if (id.integrator() == TimeIntegrator::s1o2) return to_rule(s1o2(semi_discrete::dg()), id);
      if (id.integrator() == TimeIntegrator::rk2) return to_rule(rk2(semi_discrete::dg()), id);
      break;
    case Family::fr:
      if (id.integrator() == TimeIntegrator::rk2 && id.correction() != Correction::none) {
        return to_rule(rk2(semi_discrete::fr(correction_function(id.correction()))), id);
      }
      break;
  }
  throw UnsupportedScheme(fmt::format("no stencil construction for {}", id.label()));
}

TwoMomentField grp_step(const TwoMomentField& field, double nu) {
  if (!(nu > 0.0 && nu <= 1.0)) {
    throw DomainError(fmt::format("grp_step needs nu in (0, 1], got {}", nu));
  }
  if (!field.all_finite()) throw InvalidInput("field contains non-finite entries");
  const int n = field.n_cells();
  const double h = field.h();
  const double dt_c = nu * h;  // c dt
  const auto& ubar = field.ubar();
  const auto& v = field.v();

  // Step 1: Riemann value and slope at x_{j+1/2} come from the upwind cell j.
  std::vector<double> value(ubar.size()), slope(ubar.size()), time_derivative(ubar.size());
  for (int j = 0; j < n; ++j) {
    const auto k = static_cast<std::size_t>(j);
    slope[k] = v[k] / h;
    value[k] = ubar[k] + 0.5 * h * slope[k];
    time_derivative[k] = -slope[k];  // -c s_j with c = 1 in units of dt_c
  }

  std::vector<double> ubar_new(ubar.size()), v_new(ubar.size());
  for (int j = 0; j < n; ++j) {
    const auto k = static_cast<std::size_t>(j);
    const auto km = static_cast<std::size_t>(field.wrap(j - 1));
    // Step 2: midpoint flux and average update.
    const double flux_right = value[k] + 0.5 * dt_c * time_derivative[k];
    const double flux_left = value[km] + 0.5 * dt_c * time_derivative[km];
    ubar_new[k] = ubar[k] - nu * (flux_right - flux_left);
    // Step 3: cell-j traces at t^{n+1}, each advanced with its interface time derivative.
    const double trace_right = ubar[k] + 0.5 * v[k] + dt_c * time_derivative[k];
    const double trace_left = ubar[k] - 0.5 * v[k] + dt_c * time_derivative[km];
    v_new[k] = trace_right - trace_left;
  }
  return TwoMomentField(std::move(ubar_new), std::move(v_new), h);
}

}  // namespace advect

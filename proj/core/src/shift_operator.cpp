#include "advect/shift_operator.hpp"

namespace advect {

ShiftPolynomial::ShiftPolynomial(std::initializer_list<std::pair<const int, NuPolynomial>> terms)
    : terms_(terms) {
  prune();
}

ShiftPolynomial ShiftPolynomial::constant(NuPolynomial value) {
  return ShiftPolynomial{{0, std::move(value)}};
}

ShiftPolynomial ShiftPolynomial::constant(Rational value) {
  return constant(NuPolynomial::constant(value));
}

ShiftPolynomial ShiftPolynomial::shift(int power, Rational scale) {
  return ShiftPolynomial{{power, NuPolynomial::constant(scale)}};
}

void ShiftPolynomial::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

ShiftPolynomial& ShiftPolynomial::operator+=(const ShiftPolynomial& rhs) {
  for (const auto& [m, p] : rhs.terms_) terms_[m] += p;
  prune();
  return *this;
}

ShiftPolynomial& ShiftPolynomial::operator-=(const ShiftPolynomial& rhs) {
  for (const auto& [m, p] : rhs.terms_) terms_[m] -= p;
  prune();
  return *this;
}

ShiftPolynomial& ShiftPolynomial::operator*=(const ShiftPolynomial& rhs) {
  std::map<int, NuPolynomial> out;
  for (const auto& [m, p] : terms_) {
    for (const auto& [k, q] : rhs.terms_) out[m + k] += p * q;
  }
  terms_ = std::move(out);
  prune();
  return *this;
}

ShiftPolynomial& ShiftPolynomial::operator*=(const NuPolynomial& rhs) {
  for (auto& [m, p] : terms_) p *= rhs;
  prune();
  return *this;
}

ShiftPolynomial ShiftPolynomial::operator-() const {
  ShiftPolynomial out = *this;
  for (auto& [m, p] : out.terms_) p = -p;
  return out;
}

RowOperator& RowOperator::operator+=(const RowOperator& rhs) {
  on_average += rhs.on_average;
  on_slope += rhs.on_slope;
  return *this;
}

RowOperator& RowOperator::operator-=(const RowOperator& rhs) {
  on_average -= rhs.on_average;
  on_slope -= rhs.on_slope;
  return *this;
}

OperatorMatrix::OperatorMatrix(RowOperator average_row, RowOperator slope_row)
    : rows_{std::move(average_row), std::move(slope_row)} {}

OperatorMatrix OperatorMatrix::identity() {
  const auto one = ShiftPolynomial::constant(Rational(1));
  return OperatorMatrix({one, {}}, {{}, one});
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& rhs) {
  rows_[0] += rhs.rows_[0];
  rows_[1] += rhs.rows_[1];
  return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& rhs) {
  rows_[0] -= rhs.rows_[0];
  rows_[1] -= rhs.rows_[1];
  return *this;
}

RowOperator operator*(const RowOperator& r, const OperatorMatrix& m) {
  return {r.on_average * m.average_row().on_average + r.on_slope * m.slope_row().on_average,
          r.on_average * m.average_row().on_slope + r.on_slope * m.slope_row().on_slope};
}

OperatorMatrix operator*(const OperatorMatrix& l, const OperatorMatrix& r) {
  return {l.rows_[0] * r, l.rows_[1] * r};
}

TwoMomentRule to_rule(const OperatorMatrix& m, SchemeId id, SlopeRow slope_row) {
  return TwoMomentRule(id, m.average_row().on_average.terms(), m.average_row().on_slope.terms(),
                       m.slope_row().on_average.terms(), m.slope_row().on_slope.terms(),
                       slope_row);
}

}  // namespace advect

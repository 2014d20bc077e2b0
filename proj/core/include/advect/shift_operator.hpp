#pragma once

#include "advect/two_moment.hpp"

#include <array>
#include <map>

namespace advect {

/// Laurent polynomial in the shift E (E^m picks the value at cell j+m) with nu-polynomial
/// coefficients. Under a Fourier mode E = e^{i theta}.
class ShiftPolynomial {
 public:
  ShiftPolynomial() = default;
  ShiftPolynomial(std::initializer_list<std::pair<const int, NuPolynomial>> terms);

  static ShiftPolynomial constant(NuPolynomial value);
  static ShiftPolynomial constant(Rational value);
  /// scale * E^power
  static ShiftPolynomial shift(int power, Rational scale = Rational(1));

  const std::map<int, NuPolynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ShiftPolynomial& operator+=(const ShiftPolynomial& rhs);
  ShiftPolynomial& operator-=(const ShiftPolynomial& rhs);
  ShiftPolynomial& operator*=(const ShiftPolynomial& rhs);
  ShiftPolynomial& operator*=(const NuPolynomial& rhs);

  friend ShiftPolynomial operator+(ShiftPolynomial l, const ShiftPolynomial& r) { return l += r; }
  friend ShiftPolynomial operator-(ShiftPolynomial l, const ShiftPolynomial& r) { return l -= r; }
  friend ShiftPolynomial operator*(ShiftPolynomial l, const ShiftPolynomial& r) { return l *= r; }
  friend ShiftPolynomial operator*(ShiftPolynomial l, const NuPolynomial& r) { return l *= r; }
  friend ShiftPolynomial operator*(const NuPolynomial& l, ShiftPolynomial r) { return r *= l; }
  friend ShiftPolynomial operator*(const Rational& l, ShiftPolynomial r) {
    return r *= NuPolynomial::constant(l);
  }
  ShiftPolynomial operator-() const;

  friend bool operator==(const ShiftPolynomial&, const ShiftPolynomial&) = default;

 private:
  void prune();

  std::map<int, NuPolynomial> terms_;
};

/// A linear functional of the two-moment state: (average part, slope part).
struct RowOperator {
  ShiftPolynomial on_average;
  ShiftPolynomial on_slope;

  RowOperator& operator+=(const RowOperator& rhs);
  RowOperator& operator-=(const RowOperator& rhs);
  friend RowOperator operator+(RowOperator l, const RowOperator& r) { return l += r; }
  friend RowOperator operator-(RowOperator l, const RowOperator& r) { return l -= r; }
  friend RowOperator operator*(const ShiftPolynomial& s, const RowOperator& r) {
    return {s * r.on_average, s * r.on_slope};
  }
  friend bool operator==(const RowOperator&, const RowOperator&) = default;
};

/// 2x2 matrix over ShiftPolynomial acting on (ubar, v).
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  OperatorMatrix(RowOperator average_row, RowOperator slope_row);

  static OperatorMatrix identity();

  const RowOperator& average_row() const { return rows_[0]; }
  const RowOperator& slope_row() const { return rows_[1]; }

  OperatorMatrix& operator+=(const OperatorMatrix& rhs);
  OperatorMatrix& operator-=(const OperatorMatrix& rhs);
  friend OperatorMatrix operator+(OperatorMatrix l, const OperatorMatrix& r) { return l += r; }
  friend OperatorMatrix operator-(OperatorMatrix l, const OperatorMatrix& r) { return l -= r; }
  friend OperatorMatrix operator*(const OperatorMatrix& l, const OperatorMatrix& r);
  friend OperatorMatrix operator*(const ShiftPolynomial& s, const OperatorMatrix& m) {
    return {s * m.rows_[0], s * m.rows_[1]};
  }

  friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;

 private:
  std::array<RowOperator, 2> rows_;
};

/// Composition: the functional r applied to the state produced by m.
RowOperator operator*(const RowOperator& r, const OperatorMatrix& m);

TwoMomentRule to_rule(const OperatorMatrix& m, SchemeId id,
                      SlopeRow slope_row = SlopeRow::incremental);

}  // namespace advect

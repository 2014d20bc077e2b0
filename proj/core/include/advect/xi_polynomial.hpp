#pragma once

#include "advect/nu_polynomial.hpp"

#include <vector>

namespace advect {

/// Polynomial in the reference coordinate xi with exact rational coefficients (any degree).
class XiPolynomial {
 public:
  XiPolynomial() = default;
  explicit XiPolynomial(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& xi) const;
  double operator()(double xi) const;
  XiPolynomial derivative() const;

  XiPolynomial& operator+=(const XiPolynomial& rhs);
  XiPolynomial& operator*=(const XiPolynomial& rhs);
  XiPolynomial& operator*=(const Rational& rhs);
  friend XiPolynomial operator+(XiPolynomial l, const XiPolynomial& r) { return l += r; }
  friend XiPolynomial operator-(XiPolynomial l, const XiPolynomial& r) {
    return l += r * Rational(-1);
  }
  friend XiPolynomial operator*(XiPolynomial l, const XiPolynomial& r) { return l *= r; }
  friend XiPolynomial operator*(XiPolynomial l, const Rational& r) { return l *= r; }
  friend XiPolynomial operator*(const Rational& l, XiPolynomial r) { return r *= l; }

  friend bool operator==(const XiPolynomial&, const XiPolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// L_n(2 xi - 1), the Legendre polynomial mapped to [0, 1].
XiPolynomial shifted_legendre(int n);

}  // namespace advect

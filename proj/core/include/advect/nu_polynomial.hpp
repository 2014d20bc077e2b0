#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace advect {

using Rational = boost::rational<std::int64_t>;

double to_double(const Rational& r);
std::string to_string(const Rational& r);

/// Polynomial in the CFL number with exact rational coefficients, degree <= 4.
/// coefficients()[k] multiplies nu^k; trailing zeros are never stored.
class NuPolynomial {
 public:
  static constexpr int kMaxDegree = 4;

  NuPolynomial() = default;
  NuPolynomial(std::initializer_list<Rational> coeffs);
  explicit NuPolynomial(std::vector<Rational> coeffs);

  static NuPolynomial constant(Rational value);
  static NuPolynomial monomial(Rational scale, int power);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;

  Rational operator()(const Rational& nu) const;
  double operator()(double nu) const;

  NuPolynomial& operator+=(const NuPolynomial& rhs);
  NuPolynomial& operator-=(const NuPolynomial& rhs);
  NuPolynomial& operator*=(const NuPolynomial& rhs);
  NuPolynomial& operator*=(const Rational& rhs);

  friend NuPolynomial operator+(NuPolynomial lhs, const NuPolynomial& rhs) { return lhs += rhs; }
  friend NuPolynomial operator-(NuPolynomial lhs, const NuPolynomial& rhs) { return lhs -= rhs; }
  friend NuPolynomial operator*(NuPolynomial lhs, const NuPolynomial& rhs) { return lhs *= rhs; }
  friend NuPolynomial operator*(NuPolynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend NuPolynomial operator*(const Rational& lhs, NuPolynomial rhs) { return rhs *= lhs; }
  NuPolynomial operator-() const;

  friend bool operator==(const NuPolynomial&, const NuPolynomial&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// The polynomial nu itself.
inline NuPolynomial nu_poly() { return NuPolynomial::monomial(Rational(1), 1); }

/// "3/2 nu - 1/4 nu^2" style rendering, "0" for zero.
std::string to_string(const NuPolynomial& p);
std::ostream& operator<<(std::ostream& os, const NuPolynomial& p);

}  // namespace advect

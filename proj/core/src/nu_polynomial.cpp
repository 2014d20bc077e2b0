#include "advect/nu_polynomial.hpp"

#include "advect/errors.hpp"

#include <fmt/format.h>

#include <ostream>
#include <utility>

namespace advect {

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return fmt::format("{}/{}", r.numerator(), r.denominator());
}

NuPolynomial::NuPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

NuPolynomial::NuPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

NuPolynomial NuPolynomial::constant(Rational value) { return NuPolynomial({value}); }

NuPolynomial NuPolynomial::monomial(Rational scale, int power) {
  if (power < 0 || power > kMaxDegree) {
    throw DomainError(fmt::format("nu-polynomial power {} outside [0, {}]", power, kMaxDegree));
  }
  std::vector<Rational> c(static_cast<std::size_t>(power) + 1);
  c.back() = scale;
  return NuPolynomial(std::move(c));
}

void NuPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Rational(0)) coeffs_.pop_back();
  if (degree() > kMaxDegree) {
    throw DomainError(fmt::format("nu-polynomial degree {} exceeds {}", degree(), kMaxDegree));
  }
}

Rational NuPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational NuPolynomial::operator()(const Rational& nu) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * nu + *it;
  return acc;
}

double NuPolynomial::operator()(double nu) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * nu + to_double(*it);
  return acc;
}

NuPolynomial& NuPolynomial::operator+=(const NuPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

NuPolynomial& NuPolynomial::operator-=(const NuPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

NuPolynomial& NuPolynomial::operator*=(const NuPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

NuPolynomial& NuPolynomial::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

NuPolynomial NuPolynomial::operator-() const {
  NuPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string to_string(const NuPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    Rational c = p.coefficient(k);
    if (c == Rational(0)) continue;
    bool negative = c < Rational(0);
    Rational mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    bool unit = mag == Rational(1) && k > 0;
    if (!unit) out += to_string(mag);
    if (k > 0) {
      if (!unit) out += " ";
      out += k == 1 ? std::string("nu") : fmt::format("nu^{}", k);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const NuPolynomial& p) { return os << to_string(p); }

}  // namespace advect

#include "advect/xi_polynomial.hpp"

#include "advect/errors.hpp"

#include <utility>

namespace advect {

XiPolynomial::XiPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void XiPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Rational(0)) coeffs_.pop_back();
}

Rational XiPolynomial::operator()(const Rational& xi) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * xi + *it;
  return acc;
}

double XiPolynomial::operator()(double xi) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * xi + to_double(*it);
  return acc;
}

XiPolynomial XiPolynomial::derivative() const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out.push_back(coeffs_[k] * static_cast<std::int64_t>(k));
  }
  return XiPolynomial(std::move(out));
}

XiPolynomial& XiPolynomial::operator+=(const XiPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

XiPolynomial& XiPolynomial::operator*=(const XiPolynomial& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
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

XiPolynomial& XiPolynomial::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

XiPolynomial shifted_legendre(int n) {
  if (n < 0) throw DomainError("Legendre degree must be non-negative");
  const XiPolynomial x({Rational(-1), Rational(2)});
  XiPolynomial prev({Rational(1)});
  if (n == 0) return prev;
  XiPolynomial cur = x;
  // (k+1) L_{k+1} = (2k+1) x L_k - k L_{k-1}
  for (int k = 1; k < n; ++k) {
    XiPolynomial next = (x * cur) * Rational(2 * k + 1, k + 1) - prev * Rational(k, k + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace advect

#include "advect/fourier.hpp"

#include "advect/errors.hpp"
#include "advect/number_format.hpp"

#include "json.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace advect {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_theta(double theta) {
  if (!(theta >= 0.0 && theta <= kTwoPi)) {
    throw DomainError(fmt::format("theta = {} outside [0, 2 pi]", theta));
  }
}

void require_nu(double nu) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) {
    throw DomainError(fmt::format("nu = {} must be finite and non-negative", nu));
  }
}

double max_modulus(const NumericRule& rule, double theta, double nu) {
  const auto [r1, r2] = eigen2x2(assemble_G(rule, theta, nu));
  return std::max(std::abs(r1), std::abs(r2));
}

/// Golden-section search for a maximum of f on [lo, hi].
template <typename F>
double golden_max(F&& f, double lo, double hi, double tol = 1e-12) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  double best = std::max(f1, f2);
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
    best = std::max({best, f1, f2});
  }
  return best;
}

}  // namespace

AmplificationMatrix assemble_G(const NumericRule& rule, double theta, double nu) {
  AmplificationMatrix g;
  g.theta = theta;
  g.nu = nu;
  for (std::size_t k = 0; k < rule.offsets.size(); ++k) {
    const Complex e = std::polar(1.0, theta * rule.offsets[k]);
    g.g11 += rule.a[k] * e;
    g.g12 += rule.b[k] * e;
    g.g21 += rule.c[k] * e;
    g.g22 += rule.d[k] * e;
  }
  return g;
}

AmplificationMatrix assemble_G(const TwoMomentRule& rule, double theta, double nu) {
  require_theta(theta);
  require_nu(nu);
  return assemble_G(rule.at(nu), theta, nu);
}

std::pair<Complex, Complex> eigen2x2(const AmplificationMatrix& g) {
  const Complex half_trace = 0.5 * g.trace();
  const Complex half_gap = 0.5 * (g.g11 - g.g22);
  const Complex disc = std::sqrt(half_gap * half_gap + g.g12 * g.g21);
  if (disc == Complex(0.0)) return {half_trace, half_trace};
  const Complex plus = half_trace + disc;
  const Complex minus = half_trace - disc;
  const Complex big = std::abs(plus) >= std::abs(minus) ? plus : minus;
  if (big == Complex(0.0)) return {big, big};
  return {big, g.determinant() / big};
}

std::vector<SpectrumSample> spectrum(const TwoMomentRule& rule, double nu, int n_theta) {
  require_nu(nu);
  if (n_theta < 2) throw DomainError("spectrum needs at least 2 theta samples");
  const NumericRule tables = rule.at(nu);
  std::vector<SpectrumSample> out;
  out.reserve(static_cast<std::size_t>(n_theta));
  for (int k = 0; k < n_theta; ++k) {
    const double theta = k == n_theta - 1 ? kTwoPi : kTwoPi * k / (n_theta - 1);
    auto [x, y] = eigen2x2(assemble_G(tables, theta, nu));
    if (out.empty()) {
      if (std::abs(y - 1.0) < std::abs(x - 1.0)) std::swap(x, y);
    } else {
      const auto& prev = out.back();
      const double keep = std::abs(x - prev.rho1) + std::abs(y - prev.rho2);
      const double swap = std::abs(x - prev.rho2) + std::abs(y - prev.rho1);
      if (swap < keep) std::swap(x, y);
    }
    out.push_back({theta, x, y, std::max(std::abs(x), std::abs(y))});
  }
  return out;
}

double spectral_radius(const TwoMomentRule& rule, double nu, int n_theta) {
  require_nu(nu);
  if (n_theta < 256) throw DomainError(fmt::format("n_theta = {} is below 256", n_theta));
  const NumericRule tables = rule.at(nu);
  const double step = kTwoPi / n_theta;
  double best = -1.0;
  int best_k = 0;
  for (int k = 0; k < n_theta; ++k) {
    const double m = max_modulus(tables, k * step, nu);
    if (m > best) {
      best = m;
      best_k = k;
    }
  }
  auto f = [&](double theta) {
    // wrap into [0, 2 pi) so the search may straddle theta = 0
    double t = std::fmod(theta, kTwoPi);
    if (t < 0) t += kTwoPi;
    return max_modulus(tables, t, nu);
  };
  const double refined = golden_max(f, (best_k - 1) * step, (best_k + 1) * step);
  return std::max(best, refined);
}

CflResult cfl_limit(const TwoMomentRule& rule, double tol, double epsilon, int n_theta) {
  if (!(tol > 0.0 && tol <= 1e-3)) throw DomainError("bisection tolerance must lie in (0, 1e-3]");
  if (!(epsilon >= 0.0)) throw DomainError("stability slack must be non-negative");
  constexpr double kUpper = 4.0;
  auto stable = [&](double nu) { return spectral_radius(rule, nu, n_theta) <= 1.0 + epsilon; };

  CflResult result{rule.scheme_id(), 0.0, tol, n_theta, epsilon, false};
  if (!stable(tol)) {
    throw NumericalFailure(fmt::format("{} is unstable at all nu (fails at nu = {})",
                                       rule.scheme_id().label(), tol));
  }
  if (stable(kUpper)) {
    result.nu_star = kUpper;
    result.bracket_exhausted = true;
    return result;
  }
  double lo = tol, hi = kUpper;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (stable(mid) ? lo : hi) = mid;
  }
  result.nu_star = lo;
  return result;
}

Complex s1o2_closed_form(double theta, double nu) {
  return 1.0 - nu * (1.0 - std::polar(1.0, -theta));
}

Complex rk2_closed_form(double theta, double nu) {
  const Complex z = std::polar(1.0, -theta) - 1.0;
  return 1.0 + nu * z + 0.5 * nu * nu * z * z;
}

double rk2_stability_bound(double theta) {
  require_theta(theta);
  if (theta == 0.0 || theta == kTwoPi) return std::numeric_limits<double>::infinity();
  if (theta == std::numbers::pi) return 1.0;
  const double cot = std::cos(theta / 2) / std::sin(theta / 2);
  const double rhs = 1.0 + cot * cot;
  auto p = [rhs](double x) { return ((x - 2.0) * x + 2.0) * x - rhs; };
  auto dp = [](double x) { return (3.0 * x - 4.0) * x + 2.0; };
  // p is increasing and p(1) = -cot^2 <= 0, so the root lies in [1, hi].
  double lo = 1.0, hi = 2.0;
  while (p(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double fx = p(x);
    if (fx == 0.0) return x;
    (fx < 0.0 ? lo : hi) = x;
    double next = x - fx / dp(x);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-16 * std::max(1.0, std::abs(x))) return next;
    x = next;
  }
  return x;
}

double rk2_stability_bound_infimum(int n_theta) {
  if (n_theta < 4) throw DomainError("need at least 4 theta samples");
  const double step = kTwoPi / n_theta;
  double best = std::numeric_limits<double>::infinity();
  int best_k = 1;
  for (int k = 1; k < n_theta; ++k) {
    const double b = rk2_stability_bound(k * step);
    if (b < best) {
      best = b;
      best_k = k;
    }
  }
  auto neg = [](double t) { return -rk2_stability_bound(t); };
  const double lo = std::max((best_k - 1) * step, step * 1e-3);
  const double hi = std::min((best_k + 1) * step, kTwoPi - step * 1e-3);
  return std::min(best, -golden_max(neg, lo, hi));
}

std::string spectrum_csv(const std::vector<SpectrumSample>& samples) {
  std::string out = "theta,re_rho1,im_rho1,re_rho2,im_rho2,max_modulus\n";
  for (const auto& s : samples) {
    out += fmt::format("{},{},{},{},{},{}\n", format_double(s.theta),
                       format_double(s.rho1.real()), format_double(s.rho1.imag()),
                       format_double(s.rho2.real()), format_double(s.rho2.imag()),
                       format_double(s.max_modulus));
  }
  return out;
}

std::string cfl_to_json(const CflResult& result, int indent) {
  nlohmann::ordered_json doc;
  doc["scheme_id"] = result.scheme_id.name();
  doc["nu_star"] = result.nu_star;
  doc["bisection_tol"] = result.bisection_tol;
  doc["n_theta"] = result.n_theta;
  doc["epsilon"] = result.epsilon;
  doc["bracket_exhausted"] = result.bracket_exhausted;
  return doc.dump(indent);
}

}  // namespace advect

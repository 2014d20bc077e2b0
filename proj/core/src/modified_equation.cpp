#include "advect/modified_equation.hpp"

#include "advect/errors.hpp"
#include "advect/number_format.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace advect {

namespace {

NuPolynomial poly(std::initializer_list<Rational> c) { return NuPolynomial(c); }

/// x - 1 without cancellation for x = cos(t).
double cos_minus_one(double t) {
  const double s = std::sin(0.5 * t);
  return -2.0 * s * s;
}

struct RichardsonResult {
  double value;
  double residual;
};

/// Extrapolates y(theta) = c + a theta^2 + b theta^4 + ... from samples at theta0 / 2^k.
RichardsonResult richardson(const std::vector<double>& y) {
  std::vector<std::vector<double>> t(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) {
    t[k].push_back(y[k]);
    double factor = 1.0;
    for (std::size_t l = 1; l <= k; ++l) {
      factor *= 4.0;
      t[k].push_back((factor * t[k][l - 1] - t[k - 1][l - 1]) / (factor - 1.0));
    }
  }
  const auto& last = t.back();
  const double value = last.back();
  // The larger of the last column step and the last diagonal step; the diagonal step
  // picks up rounding amplified at the smallest theta.
  double residual = 0.0;
  if (last.size() > 1) {
    residual = std::max(std::abs(value - last[last.size() - 2]),
                        std::abs(value - t[t.size() - 2].back()));
  }
  return {value, residual};
}

Rational rational_power(const Rational& x, int k) {
  Rational out(1);
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

Rational factorial(int k) {
  Rational out(1);
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

}  // namespace

TruncationPolynomials paper_truncation(const SchemeId& id) {
  using R = Rational;
  // Eq 3.42 / 3.46 dispersion, shared by all but CGKS-RK2.
  const NuPolynomial shared_p3 = poly({R(0), R(-1, 12), R(3, 12), R(-2, 12)});
  if (id == schemes_id::cgks_rk2) {
    return {id, poly({R(0), R(-1, 12), R(0), R(-2, 12)}),
            poly({R(0), R(1, 24), R(5, 24), R(0), R(1, 24)})};
  }
  if (id == schemes_id::cgks_s1o2 || id == schemes_id::dg_s1o2) {
    return {id, shared_p3, poly({R(0), R(1, 24), R(-2, 24), R(0), R(1, 24)})};
  }
  if (id == schemes_id::dg_rk2 || id == schemes_id::fr_radau) {
    return {id, shared_p3, poly({R(0), R(1, 24), R(-4, 24), R(0), R(1, 24)})};
  }
  if (id == schemes_id::fr_g2) {
    return {id, shared_p3, poly({R(0), R(1, 24), R(1, 24), R(0), R(1, 24)})};
  }
  throw UnsupportedScheme(fmt::format("no printed truncation polynomials for {}", id.label()));
}

SymbolExpansion expand_symbol(const TwoMomentRule& rule, double nu,
                              const RichardsonSettings& settings) {
  if (!(nu > 0.0) || !std::isfinite(nu)) {
    throw DomainError(fmt::format("expand_symbol needs nu > 0, got {}", nu));
  }
  if (settings.levels < 2 || !(settings.theta0 > 0.0)) {
    throw DomainError("Richardson settings need >= 2 levels and theta0 > 0");
  }
  const NumericRule r = rule.at(nu);
  // sum a_m - 1 is formed exactly so the theta^0 term does not swamp theta^4.
  NuPolynomial mass_defect = NuPolynomial::constant(Rational(-1));
  for (const auto& [m, p] : rule.a()) mass_defect += p;
  const double defect = mass_defect(nu);

  std::vector<double> y3, y4;
  double theta = settings.theta0;
  for (int k = 0; k < settings.levels; ++k, theta *= 0.5) {
    double re = defect - cos_minus_one(nu * theta);
    double im = std::sin(nu * theta);
    for (std::size_t i = 0; i < r.offsets.size(); ++i) {
      const double mt = r.offsets[i] * theta;
      re += r.a[i] * cos_minus_one(mt) - theta * r.b[i] * std::sin(mt);
      im += r.a[i] * std::sin(mt) + theta * r.b[i] * std::cos(mt);
    }
    const double t2 = theta * theta;
    y3.push_back(-im / (t2 * theta));
    y4.push_back(re / (t2 * t2));
  }
  const RichardsonResult c3 = richardson(y3);
  const RichardsonResult c4 = richardson(y4);

  SymbolExpansion out{rule.scheme_id()};
  out.nu = nu;
  out.c3 = c3.value;
  out.c4 = c4.value;
  out.residual_estimate = std::max(c3.residual, c4.residual);
  out.converged = std::isfinite(out.c3) && std::isfinite(out.c4) &&
                  out.residual_estimate <= 1e-8 * std::max({std::abs(out.c3), std::abs(out.c4), 1.0});
  return out;
}

Rational exact_symbol_coefficient(const TwoMomentRule& rule, const Rational& nu, int k) {
  if (k < 0) throw DomainError("coefficient index must be non-negative");
  Rational out = -rational_power(-nu, k) / factorial(k);
  for (const auto& [m, p] : rule.a()) out += p(nu) * rational_power(Rational(m), k) / factorial(k);
  if (k >= 1) {
    for (const auto& [m, p] : rule.b()) {
      out += p(nu) * rational_power(Rational(m), k - 1) / factorial(k - 1);
    }
  }
  return out;
}

TruncationReport compare_truncation(const TwoMomentRule& rule, const SchemeId& id,
                                    const std::vector<double>& nu_samples,
                                    std::optional<int> convention,
                                    const RichardsonSettings& settings) {
  const TruncationPolynomials printed = paper_truncation(id);
  if (convention && *convention != 1 && *convention != -1) {
    throw DomainError("convention must be +1 or -1");
  }

  std::vector<SymbolExpansion> expansions;
  for (double nu : nu_samples) expansions.push_back(expand_symbol(rule, nu, settings));

  auto rows_for = [&](int sign) {
    std::vector<TruncationRow> rows;
    for (const auto& e : expansions) {
      TruncationRow row{e.nu, e.c3, printed.p3(e.nu), e.c4, printed.p4(e.nu), false};
      const bool ok3 = std::abs(sign * row.c3 - row.p3) <=
                       kTruncationTolerance * std::max(1.0, std::abs(row.p3));
      const bool ok4 = std::abs(sign * row.c4 - row.p4) <=
                       kTruncationTolerance * std::max(1.0, std::abs(row.p4));
      row.pass = e.converged && ok3 && ok4;
      rows.push_back(row);
    }
    return rows;
  };
  auto passes = [](const std::vector<TruncationRow>& rows) {
    return static_cast<long>(std::count_if(rows.begin(), rows.end(),
                                           [](const TruncationRow& r) { return r.pass; }));
  };

  TruncationReport report{id, 0, {}, false};
  if (convention) {
    report.convention = *convention;
    report.rows = rows_for(*convention);
  } else {
    auto plus = rows_for(1);
    auto minus = rows_for(-1);
    if (passes(minus) > passes(plus)) {
      report.convention = -1;
      report.rows = std::move(minus);
    } else {
      report.convention = 1;
      report.rows = std::move(plus);
    }
  }
  report.all_pass = !report.rows.empty() &&
                    passes(report.rows) == static_cast<long>(report.rows.size());
  return report;
}

std::string truncation_csv(const std::vector<TruncationReport>& reports) {
  std::string out = "scheme,nu,c3,p3,c4,p4,pass\n";
  for (const auto& report : reports) {
    for (const auto& r : report.rows) {
      out += fmt::format("{},{},{},{},{},{},{}\n", report.scheme_id.name(), format_double(r.nu),
                         format_double(r.c3), format_double(r.p3), format_double(r.c4),
                         format_double(r.p4), r.pass ? "true" : "false");
    }
  }
  return out;
}

}  // namespace advect

#pragma once

#include "advect/two_moment.hpp"

#include <optional>
#include <string>
#include <vector>

namespace advect {

/// Printed truncation polynomials: p3 multiplies h^3 u_xxx, p4 multiplies h^4 u_xxxx.
struct TruncationPolynomials {
  SchemeId scheme_id;
  NuPolynomial p3;
  NuPolynomial p4;
};

/// Throws UnsupportedScheme for CGKS-S2O4 and GRP.
TruncationPolynomials paper_truncation(const SchemeId& id);

/// Coefficients of (i theta)^3 and (i theta)^4 in sigma(theta) - e^{-i nu theta}, where
/// sigma = g11 + i theta g12 is the average update applied to an exact Fourier mode.
struct SymbolExpansion {
  SchemeId scheme_id;
  double nu = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
  /// Largest change between the last two Richardson columns.
  double residual_estimate = 0.0;
  /// residual_estimate <= 1e-8 max(|c3|, |c4|, 1); false for inconsistent rules.
  bool converged = false;
};

struct RichardsonSettings {
  double theta0 = 0.1;
  int levels = 7;  ///< theta_k = theta0 / 2^k, k = 0 .. levels-1
};

SymbolExpansion expand_symbol(const TwoMomentRule& rule, double nu,
                              const RichardsonSettings& settings = {});

/// Exact (i theta)^k coefficient of sigma - e^{-i nu theta} at rational nu.
Rational exact_symbol_coefficient(const TwoMomentRule& rule, const Rational& nu, int k);

struct TruncationRow {
  double nu = 0.0;
  double c3 = 0.0;  ///< extracted, symbol orientation
  double p3 = 0.0;  ///< printed
  double c4 = 0.0;
  double p4 = 0.0;
  bool pass = false;
};

struct TruncationReport {
  SchemeId scheme_id;
  /// Sign s applied to the extracted coefficients: +1 when c = p, -1 when c = -p.
  int convention = 1;
  std::vector<TruncationRow> rows;
  bool all_pass = false;
};

inline constexpr double kTruncationTolerance = 1e-6;

/// Compares at each nu; rows pass when |s c - p| <= 1e-6 max(1, |p|) for the convention s.
/// Without a fixed convention the orientation passing more rows is chosen (+1 on ties).
TruncationReport compare_truncation(const TwoMomentRule& rule, const SchemeId& id,
                                    const std::vector<double>& nu_samples,
                                    std::optional<int> convention = std::nullopt,
                                    const RichardsonSettings& settings = {});

/// "scheme,nu,c3,p3,c4,p4,pass"; c3, c4 as extracted (symbol orientation), pass under the
/// report convention.
std::string truncation_csv(const std::vector<TruncationReport>& reports);

}  // namespace advect

#pragma once

#include "advect/nu_polynomial.hpp"
#include "advect/scheme_id.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace advect {

using CoefficientMap = std::map<int, NuPolynomial>;

/// How the slope row is formed.
/// incremental: v' = v + (change), identity at nu = 0.
/// reconstructed: v' is re-derived from reconstructed interface values (CGKS-S2O4).
enum class SlopeRow { incremental, reconstructed };

/// Coefficient tables evaluated at one nu, aligned with offsets().
struct NumericRule {
  std::vector<int> offsets;
  std::vector<double> a, b, c, d;
};

/// A fully discrete two-moment scheme:
///   ubar'_j = sum_m a_m(nu) ubar_{j+m} + b_m(nu) v_{j+m}
///   v'_j    = sum_m c_m(nu) ubar_{j+m} + d_m(nu) v_{j+m}
/// Zero entries are dropped; all four rows share the offset set.
class TwoMomentRule {
 public:
  TwoMomentRule(SchemeId id, CoefficientMap a, CoefficientMap b, CoefficientMap c,
                CoefficientMap d, SlopeRow slope_row = SlopeRow::incremental);

  static TwoMomentRule identity(SchemeId id);

  const SchemeId& scheme_id() const { return id_; }
  SlopeRow slope_row() const { return slope_row_; }
  const std::vector<int>& offsets() const { return offsets_; }

  const CoefficientMap& a() const { return a_; }
  const CoefficientMap& b() const { return b_; }
  const CoefficientMap& c() const { return c_; }
  const CoefficientMap& d() const { return d_; }

  /// Zero polynomial when the offset is absent.
  NuPolynomial a(int m) const { return lookup(a_, m); }
  NuPolynomial b(int m) const { return lookup(b_, m); }
  NuPolynomial c(int m) const { return lookup(c_, m); }
  NuPolynomial d(int m) const { return lookup(d_, m); }

  NumericRule at(double nu) const;

  TwoMomentRule with_scheme_id(SchemeId id) const;

  /// Same coefficient tables and slope-row kind; the scheme id is not compared.
  bool same_coefficients(const TwoMomentRule& other) const;

  friend bool operator==(const TwoMomentRule&, const TwoMomentRule&) = default;

 private:
  static NuPolynomial lookup(const CoefficientMap& map, int m);

  SchemeId id_;
  SlopeRow slope_row_;
  CoefficientMap a_, b_, c_, d_;
  std::vector<int> offsets_;
};

/// Periodic cell averages and scaled slopes v_j = h (u_x)_j.
class TwoMomentField {
 public:
  static constexpr int kMinCells = 4;

  TwoMomentField(std::vector<double> ubar, std::vector<double> v, double h);
  /// h = 1 / n_cells (unit period).
  TwoMomentField(std::vector<double> ubar, std::vector<double> v);

  int n_cells() const { return static_cast<int>(ubar_.size()); }
  double h() const { return h_; }
  const std::vector<double>& ubar() const { return ubar_; }
  const std::vector<double>& v() const { return v_; }

  /// Periodic index reduction.
  int wrap(long j) const;

  bool all_finite() const;

  friend bool operator==(const TwoMomentField&, const TwoMomentField&) = default;

 private:
  std::vector<double> ubar_;
  std::vector<double> v_;
  double h_;
};

/// ubar_j = Re(lambda e^{i theta j}), v_j = Re(i theta mu e^{i theta j}).
struct FourierMode {
  double theta = 0.0;
  std::complex<double> lambda{1.0, 0.0};
  std::complex<double> mu{1.0, 0.0};
};

/// Samples the real part of a Fourier mode on n_cells cells.
TwoMomentField sample_mode(const FourierMode& mode, int n_cells);

/// One step of the rule applied to the mode amplitudes.
FourierMode advance_mode(const TwoMomentRule& rule, const FourierMode& mode, double nu);

TwoMomentField apply_rule(const TwoMomentRule& rule, const TwoMomentField& field, double nu);
/// Fast path with pre-evaluated tables; no nu validation.
TwoMomentField apply_rule(const NumericRule& rule, const TwoMomentField& field);

struct ConsistencyReport {
  bool pass = true;
  /// Each violated identity, e.g. "sum a_m != 1".
  std::vector<std::string> violations;
};

/// Symbolic checks on the rational tables: sum a_m = 1 and sum c_m = 0 coefficient-wise,
/// and the nu = 0 identity (the slope row is exempt for SlopeRow::reconstructed).
ConsistencyReport rule_consistency_check(const TwoMomentRule& rule);

}  // namespace advect

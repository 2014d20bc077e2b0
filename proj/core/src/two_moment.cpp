#include "advect/two_moment.hpp"

#include "advect/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace advect {

namespace {

void drop_zeros(CoefficientMap& map) {
  std::erase_if(map, [](const auto& kv) { return kv.second.is_zero(); });
}

NuPolynomial row_sum(const CoefficientMap& map) {
  NuPolynomial sum;
  for (const auto& [m, p] : map) sum += p;
  return sum;
}

}  // namespace

TwoMomentRule::TwoMomentRule(SchemeId id, CoefficientMap a, CoefficientMap b, CoefficientMap c,
                             CoefficientMap d, SlopeRow slope_row)
    : id_(id), slope_row_(slope_row), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)),
      d_(std::move(d)) {
  drop_zeros(a_);
  drop_zeros(b_);
  drop_zeros(c_);
  drop_zeros(d_);
  std::set<int> all;
  for (const auto* map : {&a_, &b_, &c_, &d_}) {
    for (const auto& [m, p] : *map) all.insert(m);
  }
  offsets_.assign(all.begin(), all.end());
}

TwoMomentRule TwoMomentRule::identity(SchemeId id) {
  const NuPolynomial one = NuPolynomial::constant(Rational(1));
  return TwoMomentRule(id, {{0, one}}, {}, {}, {{0, one}});
}

NuPolynomial TwoMomentRule::lookup(const CoefficientMap& map, int m) {
  auto it = map.find(m);
  return it == map.end() ? NuPolynomial{} : it->second;
}

NumericRule TwoMomentRule::at(double nu) const {
  NumericRule out;
  out.offsets = offsets_;
  for (int m : offsets_) {
    out.a.push_back(a(m)(nu));
    out.b.push_back(b(m)(nu));
    out.c.push_back(c(m)(nu));
    out.d.push_back(d(m)(nu));
  }
  return out;
}

TwoMomentRule TwoMomentRule::with_scheme_id(SchemeId id) const {
  TwoMomentRule out = *this;
  out.id_ = id;
  return out;
}

bool TwoMomentRule::same_coefficients(const TwoMomentRule& other) const {
  return slope_row_ == other.slope_row_ && a_ == other.a_ && b_ == other.b_ && c_ == other.c_ &&
         d_ == other.d_;
}

TwoMomentField::TwoMomentField(std::vector<double> ubar, std::vector<double> v, double h)
    : ubar_(std::move(ubar)), v_(std::move(v)), h_(h) {
  if (ubar_.size() != v_.size()) {
    throw InvalidInput(
        fmt::format("ubar has {} cells but v has {}", ubar_.size(), v_.size()));
  }
  if (ubar_.size() < static_cast<std::size_t>(kMinCells)) {
    throw InvalidInput(fmt::format("a field needs at least {} cells, got {}", kMinCells,
                                   ubar_.size()));
  }
  if (!(std::isfinite(h_) && h_ > 0.0)) {
    throw InvalidInput("cell size h must be positive and finite");
  }
}

TwoMomentField::TwoMomentField(std::vector<double> ubar, std::vector<double> v)
    : TwoMomentField(ubar, std::move(v),
                     ubar.empty() ? 1.0 : 1.0 / static_cast<double>(ubar.size())) {}

int TwoMomentField::wrap(long j) const {
  const long n = n_cells();
  long r = j % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

bool TwoMomentField::all_finite() const {
  for (std::size_t j = 0; j < ubar_.size(); ++j) {
    if (!std::isfinite(ubar_[j]) || !std::isfinite(v_[j])) return false;
  }
  return true;
}

TwoMomentField sample_mode(const FourierMode& mode, int n_cells) {
  std::vector<double> ubar(static_cast<std::size_t>(n_cells));
  std::vector<double> v(ubar.size());
  const std::complex<double> i_theta(0.0, mode.theta);
  for (int j = 0; j < n_cells; ++j) {
    const std::complex<double> phase = std::polar(1.0, mode.theta * j);
    ubar[static_cast<std::size_t>(j)] = (mode.lambda * phase).real();
    v[static_cast<std::size_t>(j)] = (i_theta * mode.mu * phase).real();
  }
  return TwoMomentField(std::move(ubar), std::move(v));
}

FourierMode advance_mode(const TwoMomentRule& rule, const FourierMode& mode, double nu) {
  if (!(nu >= 0.0)) throw DomainError("nu must be non-negative");
  const NumericRule r = rule.at(nu);
  std::complex<double> g11, g12, g21, g22;
  double c_moment = 0.0;
  for (std::size_t k = 0; k < r.offsets.size(); ++k) {
    const std::complex<double> e = std::polar(1.0, mode.theta * r.offsets[k]);
    g11 += r.a[k] * e;
    g12 += r.b[k] * e;
    g21 += r.c[k] * e;
    g22 += r.d[k] * e;
    c_moment += r.c[k] * r.offsets[k];
  }
  const std::complex<double> i_theta(0.0, mode.theta);
  const std::complex<double> slope_amp = i_theta * mode.mu;
  FourierMode out;
  out.theta = mode.theta;
  out.lambda = g11 * mode.lambda + g12 * slope_amp;
  if (mode.theta == 0.0) {
    // limit of g21 / (i theta) as theta -> 0
    out.mu = g22 * mode.mu + c_moment * mode.lambda;
  } else {
    out.mu = (g21 * mode.lambda + g22 * slope_amp) / i_theta;
  }
  return out;
}

TwoMomentField apply_rule(const NumericRule& rule, const TwoMomentField& field) {
  const int n = field.n_cells();
  const auto& u = field.ubar();
  const auto& v = field.v();
  std::vector<double> u_new(u.size(), 0.0);
  std::vector<double> v_new(v.size(), 0.0);
  for (std::size_t k = 0; k < rule.offsets.size(); ++k) {
    const int shift = field.wrap(rule.offsets[k]);
    const double a = rule.a[k], b = rule.b[k], c = rule.c[k], d = rule.d[k];
    for (int j = 0; j < n; ++j) {
      int src = j + shift;
      if (src >= n) src -= n;
      u_new[static_cast<std::size_t>(j)] += a * u[static_cast<std::size_t>(src)] +
                                             b * v[static_cast<std::size_t>(src)];
      v_new[static_cast<std::size_t>(j)] += c * u[static_cast<std::size_t>(src)] +
                                             d * v[static_cast<std::size_t>(src)];
    }
  }
  return TwoMomentField(std::move(u_new), std::move(v_new), field.h());
}

TwoMomentField apply_rule(const TwoMomentRule& rule, const TwoMomentField& field, double nu) {
  if (std::isnan(nu) || nu < 0.0) throw DomainError(fmt::format("nu = {} is negative", nu));
  if (!std::isfinite(nu)) throw DomainError("nu must be finite");
  if (!field.all_finite()) throw InvalidInput("field contains non-finite entries");
  return apply_rule(rule.at(nu), field);
}

ConsistencyReport rule_consistency_check(const TwoMomentRule& rule) {
  ConsistencyReport report;
  auto fail = [&report](std::string what) {
    report.pass = false;
    report.violations.push_back(std::move(what));
  };

  const NuPolynomial a_sum = row_sum(rule.a());
  if (a_sum != NuPolynomial::constant(Rational(1))) {
    fail(fmt::format("sum a_m != 1 (sum a_m = {})", to_string(a_sum)));
  }
  const NuPolynomial c_sum = row_sum(rule.c());
  if (!c_sum.is_zero()) fail(fmt::format("sum c_m != 0 (sum c_m = {})", to_string(c_sum)));

  for (int m : rule.offsets()) {
    const Rational delta(m == 0 ? 1 : 0);
    if (rule.a(m).coefficient(0) != delta) {
      fail(fmt::format("a_{}(0) != {} (identity at nu = 0)", m, to_string(delta)));
    }
    if (rule.b(m).coefficient(0) != Rational(0)) {
      fail(fmt::format("b_{}(0) != 0 (identity at nu = 0)", m));
    }
    if (rule.slope_row() == SlopeRow::incremental) {
      if (rule.c(m).coefficient(0) != Rational(0)) {
        fail(fmt::format("c_{}(0) != 0 (identity at nu = 0)", m));
      }
      if (rule.d(m).coefficient(0) != delta) {
        fail(fmt::format("d_{}(0) != {} (identity at nu = 0)", m, to_string(delta)));
      }
    }
  }
  if (!std::binary_search(rule.offsets().begin(), rule.offsets().end(), 0)) {
    fail("a_0(0) != 1 (identity at nu = 0)");
    if (rule.slope_row() == SlopeRow::incremental) fail("d_0(0) != 1 (identity at nu = 0)");
  }
  return report;
}

}  // namespace advect

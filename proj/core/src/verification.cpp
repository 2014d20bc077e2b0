#include "advect/verification.hpp"

#include "advect/advection_lab.hpp"
#include "advect/fourier.hpp"
#include "advect/modified_equation.hpp"
#include "advect/number_format.hpp"
#include "advect/schemes.hpp"
#include "advect/version.hpp"

#include "json.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>

namespace advect {

namespace {

using acceptance::kCflTol;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Per-scheme CFL used for marching checks (well inside every limit).
double safe_cfl(const SchemeId& id) {
  if (id.family() == Family::dg || id == schemes_id::fr_radau) return 0.2;
  if (id == schemes_id::cgks_s2o4) return 0.4;
  return 0.5;
}

class Context {
 public:
  explicit Context(RuleProvider rules) : rules_(std::move(rules)) {}

  const TwoMomentRule& rule(const SchemeId& id) {
    auto it = cache_.find(id);
    if (it == cache_.end()) it = cache_.emplace(id, rules_(id)).first;
    return it->second;
  }

  double cfl(const SchemeId& id) {
    auto it = limits_.find(id);
    if (it == limits_.end()) it = limits_.emplace(id, cfl_limit(rule(id), kCflTol).nu_star).first;
    return it->second;
  }

 private:
  RuleProvider rules_;
  std::map<SchemeId, TwoMomentRule> cache_;
  std::map<SchemeId, double> limits_;
};

/// Runs body; an exception becomes a failing item carrying the message.
template <typename Body>
void guarded(std::vector<CheckItem>& items, const std::string& name, Body&& body) {
  try {
    items.push_back(body());
  } catch (const std::exception& e) {
    items.push_back({name, false, std::numeric_limits<double>::quiet_NaN(), "", e.what()});
  }
}

TwoMomentField random_field(std::mt19937_64& gen, int n, double mean) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> u(static_cast<std::size_t>(n)), v(u.size());
  for (auto& x : u) x = mean + dist(gen);
  for (auto& x : v) x = dist(gen);
  return TwoMomentField(std::move(u), std::move(v));
}

double max_abs_diff(const TwoMomentField& x, const TwoMomentField& y) {
  double out = 0.0;
  for (std::size_t k = 0; k < x.ubar().size(); ++k) {
    out = std::max({out, std::abs(x.ubar()[k] - y.ubar()[k]), std::abs(x.v()[k] - y.v()[k])});
  }
  return out;
}

// 1. CFL limits
std::vector<CheckItem> criterion_cfl(Context& ctx) {
  struct Target {
    SchemeId id;
    double value;
    double tol;
    bool at_least;
  };
  const std::vector<Target> targets{
      {schemes_id::cgks_s1o2, 1.0, acceptance::kCflUnitTol, false},
      {schemes_id::cgks_rk2, 1.0, acceptance::kCflUnitTol, true},
      {schemes_id::dg_rk2, 0.333, acceptance::kCflThirdTol, false},
      {schemes_id::dg_s1o2, 0.333, acceptance::kCflThirdTol, false},
      {schemes_id::fr_radau, 0.333, acceptance::kCflThirdTol, false},
      {schemes_id::fr_g2, 1.0, acceptance::kCflG2Tol, false},
      {schemes_id::cgks_s2o4, acceptance::kS2O4Target, acceptance::kS2O4Tol, false},
  };
  std::vector<CheckItem> items;
  for (const auto& t : targets) {
    const std::string name = fmt::format("cfl_limit({})", t.id.label());
    guarded(items, name, [&] {
      const double nu = ctx.cfl(t.id);
      const bool ok = t.at_least ? nu >= t.value - t.tol : std::abs(nu - t.value) <= t.tol;
      const std::string expected = t.at_least ? fmt::format(">= {} - {}", t.value, t.tol)
                                              : fmt::format("{} +/- {}", t.value, t.tol);
      return CheckItem{name, ok, nu, expected, ""};
    });
  }
  return items;
}

// 2. Closed-form eigenvalues
std::vector<CheckItem> criterion_closed_form(Context& ctx) {
  std::vector<CheckItem> items;
  const std::vector<std::pair<SchemeId, Complex (*)(double, double)>> cases{
      {schemes_id::cgks_s1o2, &s1o2_closed_form}, {schemes_id::cgks_rk2, &rk2_closed_form}};
  for (const auto& [id, closed] : cases) {
    const std::string name = fmt::format("eigenvalues({}) vs closed form", id.label());
    guarded(items, name, [&, id = id, closed = closed] {
      const TwoMomentRule& rule = ctx.rule(id);
      double worst = 0.0;
      for (int j = 0; j < 64; ++j) {
        const double nu = (j + 1) / 64.0;
        const NumericRule tables = rule.at(nu);
        for (int i = 0; i < 64; ++i) {
          const double theta = i == 63 ? kTwoPi : kTwoPi * i / 63.0;
          const auto [r1, r2] = eigen2x2(assemble_G(tables, theta, nu));
          const Complex exact = closed(theta, nu);
          worst = std::max({worst, std::abs(r1 - exact), std::abs(r2 - exact)});
        }
      }
      return CheckItem{name, worst <= acceptance::kClosedFormTol, worst,
                       fmt::format("<= {}", acceptance::kClosedFormTol), "64x64 (theta, nu) grid"};
    });
  }
  return items;
}

// 3. Modified equation
std::vector<CheckItem> criterion_modeq(Context& ctx) {
  std::vector<CheckItem> items;
  std::set<int> conventions;
  for (const auto& id : second_order_schemes()) {
    const std::string name = fmt::format("truncation({})", id.label());
    guarded(items, name, [&] {
      const double limit = ctx.cfl(id);
      std::vector<double> nus;
      for (int k = 1; k <= 9; ++k) {
        if (k / 10.0 <= limit) nus.push_back(k / 10.0);
      }
      const TruncationReport report = compare_truncation(ctx.rule(id), id, nus);
      double worst = 0.0;
      std::string failing;
      for (const auto& r : report.rows) {
        const double d3 = std::abs(report.convention * r.c3 - r.p3) / std::max(1.0, std::abs(r.p3));
        const double d4 = std::abs(report.convention * r.c4 - r.p4) / std::max(1.0, std::abs(r.p4));
        worst = std::max({worst, d3, d4});
        if (!r.pass) failing += fmt::format(" {}", r.nu);
      }
      if (report.all_pass) conventions.insert(report.convention);
      std::string detail = fmt::format("convention {:+d}, {} nu samples", report.convention,
                                       report.rows.size());
      if (!failing.empty()) detail += "; failing nu:" + failing;
      return CheckItem{name, report.all_pass, worst,
                       fmt::format("<= {} relative", kTruncationTolerance), detail};
    });
  }
  const bool uniform = conventions.size() <= 1;
  std::string detail = "conventions of passing schemes:";
  for (int c : conventions) detail += fmt::format(" {:+d}", c);
  items.push_back({"uniform sign convention", uniform,
                   conventions.empty() ? 0.0 : static_cast<double>(*conventions.begin()),
                   "one sign for every scheme", detail});
  return items;
}

// 4. Structural identities
std::vector<CheckItem> criterion_structure(Context& ctx) {
  std::vector<CheckItem> items;
  guarded(items, "FR-Radau-RK2 == DG-RK2 (exact)", [&] {
    const bool same = ctx.rule(schemes_id::fr_radau).same_coefficients(ctx.rule(schemes_id::dg_rk2));
    return CheckItem{"FR-Radau-RK2 == DG-RK2 (exact)", same, same ? 1.0 : 0.0,
                     "identical rational tables", ""};
  });
  guarded(items, "grp_step == CGKS-S1O2 step", [&] {
    const TwoMomentRule& rule = ctx.rule(schemes_id::cgks_s1o2);
    std::mt19937_64 gen(20240611);
    double worst = 0.0;
    for (double nu : {0.1, 0.5, 0.9}) {
      for (int trial = 0; trial < 100; ++trial) {
        const TwoMomentField f = random_field(gen, 32, 0.0);
        worst = std::max(worst, max_abs_diff(grp_step(f, nu), apply_rule(rule, f, nu)));
      }
    }
    return CheckItem{"grp_step == CGKS-S1O2 step", worst <= acceptance::kGrpTol, worst,
                     fmt::format("<= {}", acceptance::kGrpTol),
                     "100 random fields x nu in {0.1, 0.5, 0.9}"};
  });
  return items;
}

// 5. RK2 stability bound
std::vector<CheckItem> criterion_bound(Context&) {
  std::vector<CheckItem> items;
  guarded(items, "inf rk2_stability_bound", [&] {
    const double inf = rk2_stability_bound_infimum();
    return CheckItem{"inf rk2_stability_bound", std::abs(inf - 1.0) <= acceptance::kBoundTol, inf,
                     fmt::format("1 +/- {}", acceptance::kBoundTol), ""};
  });
  return items;
}

// 6. Table 1/2 ladder
std::vector<CheckItem> criterion_ladder(Context& ctx) {
  std::vector<CheckItem> items;
  auto run = [&](const SchemeId& id, double cfl) {
    return march(RunConfig{id, 640, cfl, 1.0}, ctx.rule(id));
  };
  struct Ladder {
    SchemeId id;
    double stable, marginal, unstable;
    double stable_l1;
  };
  for (const Ladder& l :
       {Ladder{schemes_id::cgks_s1o2, 1.0, 1.01, 1.1, acceptance::kLadderStableL1},
        Ladder{schemes_id::dg_rk2, 0.3333, 0.334, 0.34, acceptance::kLadderDgStableL1}}) {
    std::optional<RunResult> base;
    const std::string n1 = fmt::format("{} cfl {}: stable", l.id.label(), l.stable);
    guarded(items, n1, [&] {
      base = run(l.id, l.stable);
      const bool ok = !base->blew_up && base->l1_error <= l.stable_l1;
      return CheckItem{n1, ok, base->l1_error, fmt::format("L1 <= {}, no blow-up", l.stable_l1),
                       fmt::format("steps {}", base->steps_taken)};
    });
    const std::string n2 = fmt::format("{} cfl {}: growth", l.id.label(), l.marginal);
    guarded(items, n2, [&] {
      const RunResult r = run(l.id, l.marginal);
      const double ratio = base ? r.l1_error / base->l1_error : std::nan("");
      const bool ok = base && ratio >= acceptance::kLadderGrowth;
      return CheckItem{n2, ok, ratio,
                       fmt::format("L1 ratio >= {}", acceptance::kLadderGrowth),
                       fmt::format("L1 {} vs {}", format_double(r.l1_error),
                                   base ? format_double(base->l1_error) : "n/a")};
    });
    const std::string n3 = fmt::format("{} cfl {}: blow-up", l.id.label(), l.unstable);
    guarded(items, n3, [&] {
      const RunResult r = run(l.id, l.unstable);
      return CheckItem{n3, r.blew_up, r.max_amplitude,
                       fmt::format("amplitude > {}", kBlowupThreshold),
                       fmt::format("halted at step {}", r.steps_taken)};
    });
  }
  return items;
}

// 7. Convergence orders
std::vector<CheckItem> criterion_orders(Context& ctx) {
  std::vector<CheckItem> items;
  auto study = [&](const SchemeId& id, double cfl, const std::vector<int>& sizes) {
    std::vector<double> orders;
    double previous = 0.0;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      const RunResult r = march(RunConfig{id, sizes[k], cfl, 1.0}, ctx.rule(id));
      if (k > 0) orders.push_back(std::log2(previous / r.l1_error));
      previous = r.l1_error;
    }
    return orders;
  };
  auto listing = [](const std::vector<double>& orders) {
    std::string s;
    for (double o : orders) s += (s.empty() ? "" : ", ") + fmt::format("{:.3f}", o);
    return s;
  };
  for (const auto& id : second_order_schemes()) {
    const std::string name = fmt::format("order({})", id.label());
    guarded(items, name, [&] {
      const auto orders = study(id, safe_cfl(id), {80, 160, 320, 640});
      const bool ok = std::all_of(orders.begin(), orders.end(), [](double o) {
        return o >= acceptance::kOrderLow && o <= acceptance::kOrderHigh;
      });
      return CheckItem{name, ok, *std::min_element(orders.begin(), orders.end()),
                       fmt::format("every pair in [{}, {}]", acceptance::kOrderLow,
                                   acceptance::kOrderHigh),
                       fmt::format("cfl {}, N 80..640: {}", safe_cfl(id), listing(orders))};
    });
  }
  const std::string name = "order(CGKS-S2O4)";
  guarded(items, name, [&] {
    const auto orders = study(schemes_id::cgks_s2o4, 0.4, {40, 80, 160, 320});
    const double worst = *std::min_element(orders.begin(), orders.end());
    return CheckItem{name, worst >= acceptance::kOrderS2O4, worst,
                     fmt::format("every pair >= {}", acceptance::kOrderS2O4),
                     fmt::format("cfl 0.4, N 40..320: {}", listing(orders))};
  });
  return items;
}

// 8. Property suite
std::vector<CheckItem> criterion_properties(Context& ctx) {
  std::vector<CheckItem> items;
  std::mt19937_64 gen(7031);
  for (const auto& id : all_schemes()) {
    const std::string name = fmt::format("conservation({}) over 10 periods", id.label());
    guarded(items, name, [&] {
      const TwoMomentRule& rule = ctx.rule(id);
      const double cfl = safe_cfl(id);
      const int n = 64;
      TwoMomentField f = random_field(gen, n, 1.0);
      auto total = [](const TwoMomentField& x) {
        double s = 0.0;
        for (double u : x.ubar()) s += u;
        return s;
      };
      const double start = total(f);
      const NumericRule tables = rule.at(cfl);
      const long steps = std::lround(10.0 * n / cfl);
      for (long k = 0; k < steps; ++k) f = apply_rule(tables, f);
      const double drift = std::abs(total(f) - start) / std::abs(start);
      return CheckItem{name, drift <= acceptance::kConservationTol, drift,
                       fmt::format("<= {} relative", acceptance::kConservationTol),
                       fmt::format("cfl {}, {} steps", cfl, steps)};
    });
  }
  guarded(items, "CGKS-S1O2 exact shift at nu = 1", [&] {
    const TwoMomentRule& rule = ctx.rule(schemes_id::cgks_s1o2);
    TwoMomentField f = random_field(gen, 40, 0.0);
    const TwoMomentField g = apply_rule(rule, f, 1.0);
    double worst = 0.0;
    for (int j = 0; j < f.n_cells(); ++j) {
      const auto k = static_cast<std::size_t>(j);
      const auto src = static_cast<std::size_t>(f.wrap(j - 1));
      worst = std::max({worst, std::abs(g.ubar()[k] - f.ubar()[src]), std::abs(g.v()[k] - f.v()[src])});
    }
    const RunResult period = march(RunConfig{schemes_id::cgks_s1o2, 640, 1.0, 1.0}, rule);
    worst = std::max(worst, period.l1_error);
    return CheckItem{"CGKS-S1O2 exact shift at nu = 1", worst <= acceptance::kShiftTol, worst,
                     fmt::format("<= {}", acceptance::kShiftTol),
                     "one step on a random field and one period on 640 cells"};
  });
  for (const auto& id : all_schemes()) {
    const std::string name = fmt::format("theta-conjugation symmetry({})", id.label());
    guarded(items, name, [&] {
      const TwoMomentRule& rule = ctx.rule(id);
      const NumericRule tables = rule.at(safe_cfl(id));
      const int n = 1024;
      double worst = 0.0;
      for (int k = 0; k <= n; ++k) {
        const double theta = kTwoPi * k / n;
        auto modulus = [&](double t) {
          const auto [a, b] = eigen2x2(assemble_G(tables, t, safe_cfl(id)));
          return std::max(std::abs(a), std::abs(b));
        };
        worst = std::max(worst, std::abs(modulus(theta) - modulus(kTwoPi - theta)));
      }
      return CheckItem{name, worst <= acceptance::kSymmetryTol, worst,
                       fmt::format("<= {}", acceptance::kSymmetryTol),
                       fmt::format("max |rho| at theta vs 2 pi - theta, nu = {}", safe_cfl(id))};
    });
  }
  for (Correction kind : {Correction::radau, Correction::g2}) {
    const std::string name =
        fmt::format("correction endpoints({})", kind == Correction::radau ? "Radau" : "g2");
    guarded(items, name, [&] {
      const CorrectionFunction g = correction_function(kind);
      const bool ok = g.gL(Rational(0)) == Rational(1) && g.gL(Rational(1)) == Rational(0) &&
                      g.gR(Rational(0)) == Rational(0) && g.gR(Rational(1)) == Rational(1);
      return CheckItem{name, ok, ok ? 1.0 : 0.0, "gL(0)=1, gL(1)=0, gR(0)=0, gR(1)=1 exactly",
                       ""};
    });
  }
  return items;
}

struct CriterionSpec {
  int id;
  const char* title;
  std::vector<CheckItem> (*run)(Context&);
};

const std::vector<CriterionSpec>& criteria() {
  static const std::vector<CriterionSpec> specs{
      {1, "CFL limits via cfl_limit", &criterion_cfl},
      {2, "closed-form eigenvalue oracles", &criterion_closed_form},
      {3, "modified-equation cross-validation", &criterion_modeq},
      {4, "structural identities", &criterion_structure},
      {5, "RK2 stability-bound cubic", &criterion_bound},
      {6, "Table 1/2 qualitative ladder", &criterion_ladder},
      {7, "convergence orders", &criterion_orders},
      {8, "property suite", &criterion_properties},
  };
  return specs;
}

}  // namespace

std::vector<int> VerificationReport::failing_ids() const {
  std::vector<int> out;
  for (const auto& c : criteria) {
    if (!c.pass) out.push_back(c.id);
  }
  return out;
}

VerificationReport run_verification(const VerificationOptions& options) {
  Context ctx(options.rules ? options.rules : RuleProvider(&build_rule));
  VerificationReport report;
  for (const auto& spec : criteria()) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), spec.id) == options.only.end()) {
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result{spec.id, spec.title, false, spec.run(ctx), 0.0};
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.pass = !result.items.empty() &&
                  std::all_of(result.items.begin(), result.items.end(),
                              [](const CheckItem& i) { return i.pass; });
    report.criteria.push_back(std::move(result));
  }
  report.all_pass = !report.criteria.empty() &&
                    std::all_of(report.criteria.begin(), report.criteria.end(),
                                [](const CriterionResult& c) { return c.pass; });
  return report;
}

RuleProvider seeded_fault_provider(const SchemeId& target) {
  return [target](const SchemeId& id) {
    TwoMomentRule rule = build_rule(id);
    if (id != target) return rule;
    CoefficientMap a = rule.a();
    a[0] += NuPolynomial::monomial(Rational(1, 1000), 1);
    return TwoMomentRule(rule.scheme_id(), a, rule.b(), rule.c(), rule.d(), rule.slope_row());
  };
}

std::string report_to_json(const VerificationReport& report, int indent) {
  nlohmann::ordered_json doc;
  doc["library_version"] = kLibraryVersion;
  doc["all_pass"] = report.all_pass;
  doc["failing"] = report.failing_ids();
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& c : report.criteria) {
    nlohmann::ordered_json entry;
    entry["id"] = c.id;
    entry["title"] = c.title;
    entry["pass"] = c.pass;
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const auto& i : c.items) {
      nlohmann::ordered_json item;
      item["name"] = i.name;
      item["pass"] = i.pass;
      if (std::isfinite(i.value)) {
        item["value"] = i.value;
      } else {
        item["value"] = nullptr;
      }
      item["expected"] = i.expected;
      item["detail"] = i.detail;
      items.push_back(std::move(item));
    }
    entry["items"] = std::move(items);
    list.push_back(std::move(entry));
  }
  doc["criteria"] = std::move(list);
  return doc.dump(indent);
}

std::string report_summary(const VerificationReport& report) {
  std::string out;
  for (const auto& c : report.criteria) {
    out += fmt::format("criterion {}: {}  {} ({:.2f} s)\n", c.id, c.pass ? "PASS" : "FAIL", c.title,
                       c.seconds);
    for (const auto& i : c.items) {
      if (i.pass) continue;
      if (i.expected.empty()) {
        out += fmt::format("    failed: {}: {}\n", i.name, i.detail);
      } else {
        out += fmt::format("    failed: {} = {} (expected {}) {}\n", i.name,
                           format_double(i.value), i.expected, i.detail);
      }
    }
  }
  return out;
}

}  // namespace advect

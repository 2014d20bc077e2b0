#include "advect/errors.hpp"
#include "advect/rule_json.hpp"
#include "advect/schemes.hpp"
#include "advect/two_moment.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

namespace advect {
namespace {

using R = Rational;
using testing::max_abs_diff;
using testing::random_field;

TwoMomentField delta_field() { return TwoMomentField({1, 0, 0, 0}, {0, 0, 0, 0}); }

TEST(TwoMomentField, Validates) {
  EXPECT_THROW(TwoMomentField({1, 2, 3, 4}, {1, 2, 3}), InvalidInput);
  EXPECT_THROW(TwoMomentField({1, 2, 3}, {1, 2, 3}), InvalidInput);
  EXPECT_THROW(TwoMomentField({1, 2, 3, 4}, {1, 2, 3, 4}, 0.0), InvalidInput);
  EXPECT_DOUBLE_EQ(TwoMomentField({1, 2, 3, 4}, {1, 2, 3, 4}).h(), 0.25);
}

TEST(TwoMomentField, WrapsPeriodically) {
  const TwoMomentField f = delta_field();
  EXPECT_EQ(f.wrap(-1), 3);
  EXPECT_EQ(f.wrap(-9), 3);
  EXPECT_EQ(f.wrap(5), 1);
}

TEST(ApplyRule, IdentityAtNuZero) {
  std::mt19937_64 rng(7);
  const TwoMomentField f = random_field(rng, 16);
  for (const SchemeId& id : all_schemes()) {
    EXPECT_EQ(apply_rule(build_rule(id), f, 0.0).ubar(), f.ubar()) << id;
    if (build_rule(id).slope_row() == SlopeRow::incremental) {
      EXPECT_EQ(apply_rule(build_rule(id), f, 0.0).v(), f.v()) << id;
    }
  }
}

TEST(ApplyRule, UnitCflShift) {
  const TwoMomentField out = apply_rule(build_rule(schemes_id::cgks_s1o2), delta_field(), 1.0);
  EXPECT_EQ(out.ubar(), (std::vector<double>{0, 1, 0, 0}));
  EXPECT_EQ(out.v(), (std::vector<double>{0, 0, 0, 0}));
}

TEST(ApplyRule, HalfCflSplitsDelta) {
  const TwoMomentField out = apply_rule(build_rule(schemes_id::cgks_s1o2), delta_field(), 0.5);
  EXPECT_EQ(out.ubar(), (std::vector<double>{0.5, 0.5, 0, 0}));
  EXPECT_EQ(out.v(), (std::vector<double>{0, 0, 0, 0}));
}

TEST(ApplyRule, Rejects) {
  const TwoMomentRule rule = build_rule(schemes_id::cgks_s1o2);
  EXPECT_THROW(apply_rule(rule, delta_field(), -0.1), DomainError);
  EXPECT_THROW(apply_rule(rule, delta_field(), std::nan("")), DomainError);
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(apply_rule(rule, TwoMomentField({inf, 0, 0, 0}, {0, 0, 0, 0}), 0.5), InvalidInput);
}

TEST(ApplyRule, LeavesInputUnchanged) {
  std::mt19937_64 rng(3);
  const TwoMomentField f = random_field(rng, 12);
  const TwoMomentField copy = f;
  (void)apply_rule(build_rule(schemes_id::dg_rk2), f, 0.3);
  EXPECT_EQ(f, copy);
}

TEST(ApplyRuleProperty, Linear) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (const SchemeId& id : all_schemes()) {
    const TwoMomentRule rule = build_rule(id);
    for (int trial = 0; trial < 20; ++trial) {
      const TwoMomentField f = random_field(rng, 24), g = random_field(rng, 24);
      const double alpha = coef(rng), beta = coef(rng);
      std::vector<double> u(24), v(24);
      for (std::size_t k = 0; k < 24; ++k) {
        u[k] = alpha * f.ubar()[k] + beta * g.ubar()[k];
        v[k] = alpha * f.v()[k] + beta * g.v()[k];
      }
      const TwoMomentField combined = apply_rule(rule, TwoMomentField(u, v), 0.3);
      const TwoMomentField af = apply_rule(rule, f, 0.3), ag = apply_rule(rule, g, 0.3);
      double scale = 1.0, err = 0.0;
      for (std::size_t k = 0; k < 24; ++k) {
        const double eu = alpha * af.ubar()[k] + beta * ag.ubar()[k];
        const double ev = alpha * af.v()[k] + beta * ag.v()[k];
        scale = std::max({scale, std::abs(eu), std::abs(ev)});
        err = std::max({err, std::abs(eu - combined.ubar()[k]), std::abs(ev - combined.v()[k])});
      }
      EXPECT_LE(err, 1e-13 * scale) << id;
    }
  }
}

TEST(ApplyRuleProperty, CommutesWithCyclicShift) {
  std::mt19937_64 rng(5);
  auto rotate = [](const TwoMomentField& f, int s) {
    std::vector<double> u(f.ubar().size()), v(u.size());
    for (int j = 0; j < f.n_cells(); ++j) {
      u[static_cast<std::size_t>(f.wrap(j + s))] = f.ubar()[static_cast<std::size_t>(j)];
      v[static_cast<std::size_t>(f.wrap(j + s))] = f.v()[static_cast<std::size_t>(j)];
    }
    return TwoMomentField(u, v);
  };
  for (const SchemeId& id : all_schemes()) {
    const TwoMomentRule rule = build_rule(id);
    const TwoMomentField f = random_field(rng, 20);
    for (int s : {1, 3, 7}) {
      EXPECT_EQ(apply_rule(rule, rotate(f, s), 0.4), rotate(apply_rule(rule, f, 0.4), s)) << id;
    }
  }
}

TEST(AdvanceMode, MatchesApplyRule) {
  // A mode with theta = 2 pi k / n is exactly periodic on n cells.
  const int n = 32;
  for (const SchemeId& id : all_schemes()) {
    const TwoMomentRule rule = build_rule(id);
    for (int k : {0, 1, 5}) {
      const FourierMode mode{2.0 * std::numbers::pi * k / n, {0.7, -0.2}, {1.1, 0.4}};
      const TwoMomentField stepped = apply_rule(rule, sample_mode(mode, n), 0.3);
      const TwoMomentField predicted = sample_mode(advance_mode(rule, mode, 0.3), n);
      if (k == 0) {
        EXPECT_LE(max_abs_diff(stepped.ubar(), predicted.ubar()), 1e-13) << id;
      } else {
        EXPECT_LE(max_abs_diff(stepped, predicted), 1e-13) << id;
      }
    }
  }
}

TEST(Consistency, ShippedRulesPass) {
  for (const SchemeId& id : all_schemes()) {
    const ConsistencyReport report = rule_consistency_check(build_rule(id));
    EXPECT_TRUE(report.pass) << id << ": "
                             << (report.violations.empty() ? "" : report.violations.front());
  }
}

TEST(Consistency, IdentityPasses) {
  EXPECT_TRUE(rule_consistency_check(TwoMomentRule::identity(schemes_id::cgks_s1o2)).pass);
}

TEST(Consistency, MassViolationIsNamed) {
  const TwoMomentRule rule(schemes_id::cgks_s1o2, {{0, NuPolynomial{R(1), R(1)}}}, {}, {},
                           {{0, NuPolynomial{R(1)}}});
  const ConsistencyReport report = rule_consistency_check(rule);
  EXPECT_FALSE(report.pass);
  ASSERT_FALSE(report.violations.empty());
  EXPECT_EQ(report.violations.front().rfind("sum a_m != 1", 0), 0u) << report.violations.front();
}

TEST(Consistency, SlopeRowViolations) {
  const TwoMomentRule rule(schemes_id::cgks_s1o2, {{0, NuPolynomial{R(1)}}}, {},
                           {{1, NuPolynomial{R(1)}}}, {{0, NuPolynomial{R(1)}}});
  const ConsistencyReport report = rule_consistency_check(rule);
  EXPECT_FALSE(report.pass);
  EXPECT_EQ(report.violations.size(), 2u);
}

TEST(Consistency, MissingCentreOffset) {
  const TwoMomentRule rule(schemes_id::cgks_s1o2, {{-1, NuPolynomial{R(1)}}}, {}, {},
                           {{-1, NuPolynomial{R(1)}}});
  EXPECT_FALSE(rule_consistency_check(rule).pass);
}

TEST(RuleJson, RoundTripsEveryScheme) {
  for (const SchemeId& id : all_schemes()) {
    const TwoMomentRule rule = build_rule(id);
    EXPECT_EQ(rule_from_json(rule_to_json(rule)), rule) << id;
    EXPECT_EQ(rule_from_json(rule_to_json(rule, -1)), rule) << id;
  }
}

TEST(RuleJson, RejectsMalformed) {
  EXPECT_THROW(rule_from_json("not json"), InvalidInput);
  EXPECT_THROW(rule_from_json("[]"), InvalidInput);
  EXPECT_THROW(rule_from_json(R"({"scheme_id": "grp"})"), InvalidInput);
  EXPECT_THROW(rule_from_json(R"({"scheme_id": "nope", "offsets": [0],
      "a": [[[1, 1]]], "b": [[]], "c": [[]], "d": [[[1, 1]]]})"),
               UnsupportedScheme);
  EXPECT_THROW(rule_from_json(R"({"scheme_id": "grp", "offsets": [0],
      "a": [[[1, 0]]], "b": [[]], "c": [[]], "d": [[[1, 1]]]})"),
               InvalidInput);
  EXPECT_THROW(rule_from_json(R"({"scheme_id": "grp", "offsets": [0, 1],
      "a": [[[1, 1]]], "b": [[]], "c": [[]], "d": [[[1, 1]]]})"),
               InvalidInput);
}

TEST(RuleJson, ReadsPairs) {
  const TwoMomentRule rule = rule_from_json(R"({"scheme_id": "CGKS-S1O2", "offsets": [-1, 0],
      "a": [[[0, 1], [1, 1]], [[1, 1], [-1, 1]]],
      "b": [[], []], "c": [[], []], "d": [[], [[1, 1]]]})");
  EXPECT_EQ(rule.scheme_id(), schemes_id::cgks_s1o2);
  EXPECT_EQ(rule.a(-1), nu_poly());
  EXPECT_EQ(rule.a(0), (NuPolynomial{R(1), R(-1)}));
  EXPECT_EQ(rule.slope_row(), SlopeRow::incremental);
}

}  // namespace
}  // namespace advect

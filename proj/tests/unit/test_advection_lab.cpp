#include "advect/advection_lab.hpp"
#include "advect/errors.hpp"
#include "advect/fourier.hpp"
#include "advect/schemes.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

namespace advect {
namespace {

using testing::max_abs_diff;
using testing::random_field;

double sum(const std::vector<double>& x) { return std::accumulate(x.begin(), x.end(), 0.0); }

TEST(InitField, ZeroMeanAndZeroSlopeSum) {
  for (int n : {4, 8, 33, 640}) {
    const TwoMomentField f = init_field(Profile::sine, n);
    EXPECT_NEAR(sum(f.ubar()), 0.0, 1e-12);
    EXPECT_NEAR(sum(f.v()), 0.0, 1e-12);
  }
}

TEST(InitField, FourCellAverages) {
  // Averages of sin(2 pi x) over quarters: (2/pi)(1, 1, -1, -1).
  const TwoMomentField f = init_field(Profile::sine, 4);
  const double a = 2.0 / std::numbers::pi;
  EXPECT_LE(max_abs_diff(f.ubar(), {a, a, -a, -a}), 1e-15);
  // h times the average of u0' is the jump of u0 across the cell.
  EXPECT_LE(max_abs_diff(f.v(), {1, -1, -1, 1}), 1e-15);
}

TEST(InitField, AverageIsMidpointToSecondOrder) {
  double previous = 0.0;
  for (int n : {32, 64, 128, 256}) {
    const TwoMomentField f = init_field(Profile::sine, n);
    double err = 0.0;
    for (int j = 0; j < n; ++j) {
      const double x = (j + 0.5) / n;
      err = std::max(err, std::abs(f.ubar()[static_cast<std::size_t>(j)] -
                                   std::sin(2.0 * std::numbers::pi * x)));
    }
    if (previous > 0.0) EXPECT_NEAR(previous / err, 4.0, 0.05);
    previous = err;
  }
}

TEST(InitField, ShiftWrapsPeriodically) {
  EXPECT_LE(max_abs_diff(init_field(Profile::sine, 16, 1.25), init_field(Profile::sine, 16, 0.25)),
            1e-14);
  EXPECT_LE(max_abs_diff(init_field(Profile::sine, 16, 1.0), init_field(Profile::sine, 16)), 1e-14);
}

TEST(RunConfig, Validates) {
  EXPECT_THROW((RunConfig{schemes_id::cgks_s1o2, 7}).validate(), InvalidInput);
  EXPECT_THROW((RunConfig{schemes_id::cgks_s1o2, 64, 0.0}).validate(), InvalidInput);
  EXPECT_THROW((RunConfig{schemes_id::cgks_s1o2, 64, 0.5, -1.0}).validate(), InvalidInput);
  RunConfig still{schemes_id::cgks_s1o2, 64, 0.5, 1.0};
  still.advection_speed = 0.0;
  EXPECT_THROW(still.validate(), InvalidInput);
}

TEST(StepCount, LandsOnFinalTime) {
  EXPECT_EQ(step_count({schemes_id::cgks_s1o2, 640, 1.0, 1.0}), 640);
  EXPECT_EQ(step_count({schemes_id::cgks_s1o2, 100, 0.3, 1.0}), 334);
  EXPECT_EQ(step_count({schemes_id::cgks_s1o2, 10, 0.5, 1.0}), 20);
}

TEST(March, UnitCflIsExact) {
  for (const SchemeId& id : {schemes_id::cgks_s1o2, schemes_id::grp}) {
    const RunResult r = march({id, 64, 1.0, 1.0});
    EXPECT_LE(r.l1_error, 1e-13) << id;
    EXPECT_EQ(r.steps_taken, 64);
  }
}

TEST(March, CgksS1o2Table1Scale) {
  const RunResult r = march({schemes_id::cgks_s1o2, 640, 1.0, 1.0});
  EXPECT_LE(r.l1_error, 1e-4);
  EXPECT_FALSE(r.blew_up);
}

TEST(March, DgRk2BlowsUpAboveLimit) {
  const RunResult r = march({schemes_id::dg_rk2, 640, 0.34, 1.0});
  EXPECT_TRUE(r.blew_up);
  EXPECT_GT(r.max_amplitude, kBlowupThreshold);
  EXPECT_LT(r.steps_taken, step_count({schemes_id::dg_rk2, 640, 0.34, 1.0}));
}

TEST(March, TinyCflIsAccurate) {
  for (const SchemeId& id : all_schemes()) {
    const RunResult r = march({id, 64, 1e-3, 0.01});
    EXPECT_FALSE(r.blew_up) << id;
    EXPECT_LE(r.l1_error, 1e-4) << id;
  }
}

TEST(March, ObserverSeesEveryStep) {
  long calls = 0;
  const RunResult r = march({schemes_id::cgks_s1o2, 16, 0.5, 1.0},
                            [&](long step, const TwoMomentField&) { EXPECT_EQ(step, ++calls); });
  EXPECT_EQ(calls, r.steps_taken);
}

TEST(MarchProperty, Conservation) {
  std::mt19937_64 rng(41);
  for (const SchemeId& id : all_schemes()) {
    const TwoMomentRule rule = build_rule(id);
    const double nu = 0.9 * cfl_limit(rule).nu_star;
    TwoMomentField f = random_field(rng, 32, 1.0);
    const double mass = sum(f.ubar());
    for (int step = 0; step < 200; ++step) f = apply_rule(rule, f, std::min(nu, 1.0));
    EXPECT_NEAR(sum(f.ubar()), mass, 1e-12 * std::abs(mass)) << id;
  }
}

TEST(MarchProperty, StableBelowLimitUnstableAbove) {
  for (const SchemeId& id : {schemes_id::dg_rk2, schemes_id::cgks_rk2}) {
    const double limit = cfl_limit(build_rule(id)).nu_star;
    EXPECT_FALSE(march({id, 640, 0.99 * limit, 10.0}).blew_up) << id;
    EXPECT_TRUE(march({id, 640, 1.05 * limit, 10.0}).blew_up) << id;
  }
}

TEST(MarchProperty, GrpTrajectoryMatchesRule) {
  const RunConfig config{schemes_id::cgks_s1o2, 128, 0.7, 1.0};
  std::vector<TwoMomentField> rule_path;
  march(config, [&](long, const TwoMomentField& f) { rule_path.push_back(f); });
  double worst = 0.0;
  march(config, Stepper(grp_step), [&](long step, const TwoMomentField& f) {
    worst = std::max(worst, max_abs_diff(f, rule_path[static_cast<std::size_t>(step - 1)]));
  });
  EXPECT_LE(worst, 1e-13);
}

TEST(Mirror, Involution) {
  std::mt19937_64 rng(2);
  const TwoMomentField f = random_field(rng, 9);
  EXPECT_EQ(mirror(mirror(f)), f);
  EXPECT_EQ(mirror(f).ubar().front(), f.ubar().back());
  EXPECT_EQ(mirror(f).v().front(), -f.v().back());
}

TEST(March, NegativeSpeedMirrorsPositive) {
  RunConfig right{schemes_id::dg_rk2, 64, 0.2, 0.5};
  RunConfig left = right;
  left.advection_speed = -1.0;
  const RunResult a = march(right), b = march(left);
  EXPECT_NEAR(a.l1_error, b.l1_error, 1e-14);
  EXPECT_EQ(a.steps_taken, b.steps_taken);
  EXPECT_LE(b.l1_error, 1e-3);
}

TEST(ConvergenceStudy, SecondOrder) {
  const auto rows = convergence_study(schemes_id::cgks_s1o2, 0.5, {40, 80, 160, 320});
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_FALSE(rows.front().order.has_value());
  for (std::size_t k = 1; k < rows.size(); ++k) {
    ASSERT_TRUE(rows[k].order.has_value());
    EXPECT_GE(*rows[k].order, 1.8);
    EXPECT_LE(*rows[k].order, 2.2);
  }
}

TEST(ConvergenceStudy, Rejects) {
  EXPECT_THROW(convergence_study(schemes_id::cgks_s1o2, 0.5, {40, 80, 160}), InvalidInput);
  EXPECT_THROW(convergence_study(schemes_id::cgks_s1o2, 0.5, {40, 80, 100, 200}), InvalidInput);
  EXPECT_THROW(convergence_study(schemes_id::dg_rk2, 0.5, {40, 80, 160, 320}), DomainError);
}

TEST(BlowupProbe, CgksLadder) {
  const BlowupTable t = blowup_probe(schemes_id::cgks_s1o2, {1.0, 1.01, 1.1}, 640);
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_FALSE(t.rows[0].result.blew_up);
  EXPECT_GE(t.rows[1].result.l1_error, 10.0 * t.rows[0].result.l1_error);
  EXPECT_TRUE(t.rows[2].result.blew_up);
  EXPECT_TRUE(t.monotone_onset);
}

TEST(RunCsv, Format) {
  EXPECT_EQ(run_csv_header(), "scheme,n_cells,cfl,T,l1,l2,blew_up,steps");
  RunResult r;
  r.l1_error = 0.1;
  r.l2_error = 1e-20;
  r.steps_taken = 7;
  EXPECT_EQ(run_csv_row({schemes_id::fr_g2, 80, 0.25, 1.0}, r),
            "fr-rk2-g2,80,0.25,1,0.1,1e-20,false,7");
}

}  // namespace
}  // namespace advect

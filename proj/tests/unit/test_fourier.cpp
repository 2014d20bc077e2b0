#include "advect/errors.hpp"
#include "advect/fourier.hpp"
#include "advect/schemes.hpp"

#include <gtest/gtest.h>
#include "json.hpp"

#include <cmath>
#include <numbers>

namespace advect {
namespace {

constexpr double kPi = std::numbers::pi;

AmplificationMatrix matrix(Complex g11, Complex g12, Complex g21, Complex g22) {
  AmplificationMatrix g;
  g.g11 = g11;
  g.g12 = g12;
  g.g21 = g21;
  g.g22 = g22;
  return g;
}

TEST(AssembleG, IdentityAtNuZero) {
  for (const SchemeId& id : all_schemes()) {
    const TwoMomentRule rule = build_rule(id);
    if (rule.slope_row() != SlopeRow::incremental) continue;
    const AmplificationMatrix g = assemble_G(rule, 1.3, 0.0);
    EXPECT_EQ(g.g11, Complex(1.0));
    EXPECT_EQ(g.g12, Complex(0.0));
    EXPECT_EQ(g.g21, Complex(0.0));
    EXPECT_EQ(g.g22, Complex(1.0));
  }
}

TEST(AssembleG, CgksS1o2AtPi) {
  const AmplificationMatrix g = assemble_G(build_rule(schemes_id::cgks_s1o2), kPi, 0.5);
  EXPECT_NEAR(std::abs(g.g11), 0.0, 1e-15);
}

TEST(AssembleG, ConsistencyAtThetaZero) {
  for (const SchemeId& id : all_schemes()) {
    const AmplificationMatrix g = assemble_G(build_rule(id), 0.0, 0.42);
    EXPECT_NEAR(std::abs(g.g11 - 1.0), 0.0, 1e-14) << id;
    EXPECT_NEAR(std::abs(g.g21), 0.0, 1e-14) << id;
  }
}

TEST(AssembleG, Rejects) {
  const TwoMomentRule rule = build_rule(schemes_id::cgks_s1o2);
  EXPECT_THROW(assemble_G(rule, -0.1, 0.5), DomainError);
  EXPECT_THROW(assemble_G(rule, 7.0, 0.5), DomainError);
  EXPECT_THROW(assemble_G(rule, 1.0, -0.5), DomainError);
}

TEST(Eigen2x2, Examples) {
  auto [a, b] = eigen2x2(matrix(1, 0, 0, 1));
  EXPECT_EQ(a, Complex(1.0));
  EXPECT_EQ(b, Complex(1.0));
  auto [p, q] = eigen2x2(matrix(0, 1, 1, 0));
  EXPECT_NEAR(std::max(p.real(), q.real()), 1.0, 1e-15);
  EXPECT_NEAR(std::min(p.real(), q.real()), -1.0, 1e-15);
  auto [r, s] = eigen2x2(assemble_G(build_rule(schemes_id::cgks_s1o2), kPi, 1.0));
  EXPECT_NEAR(std::abs(r + 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(s + 1.0), 0.0, 1e-14);
}

TEST(Eigen2x2Property, Vieta) {
  for (const SchemeId& id : all_schemes()) {
    const TwoMomentRule rule = build_rule(id);
    for (int i = 0; i <= 32; ++i) {
      for (double nu : {0.1, 0.3, 0.7, 1.0}) {
        const AmplificationMatrix g = assemble_G(rule, 2.0 * kPi * i / 32, nu);
        const auto [l1, l2] = eigen2x2(g);
        const double scale = std::max(1.0, std::abs(g.determinant()));
        EXPECT_LE(std::abs(l1 + l2 - g.trace()), 1e-13 * std::max(1.0, std::abs(g.trace())));
        EXPECT_LE(std::abs(l1 * l2 - g.determinant()), 1e-13 * scale);
      }
    }
  }
}

TEST(ClosedForms, Examples) {
  EXPECT_NEAR(std::abs(s1o2_closed_form(kPi, 1.0) + 1.0), 0.0, 1e-15);
  EXPECT_EQ(s1o2_closed_form(0.0, 0.7), Complex(1.0));
  EXPECT_NEAR(std::abs(s1o2_closed_form(kPi, 0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(rk2_closed_form(kPi, 1.0) - 1.0), 0.0, 1e-15);
  EXPECT_EQ(rk2_closed_form(0.0, 0.7), Complex(1.0));
  EXPECT_NEAR(std::abs(rk2_closed_form(kPi, 0.5) - 0.5), 0.0, 1e-15);
}

TEST(ClosedForms, MatchCgksEigenvalues) {
  const TwoMomentRule s1o2 = build_rule(schemes_id::cgks_s1o2);
  const TwoMomentRule rk2 = build_rule(schemes_id::cgks_rk2);
  for (int i = 0; i < 64; ++i) {
    const double theta = 2.0 * kPi * i / 63;
    for (int k = 1; k <= 64; ++k) {
      const double nu = k / 64.0;
      const auto [a1, a2] = eigen2x2(assemble_G(s1o2, theta, nu));
      const auto [b1, b2] = eigen2x2(assemble_G(rk2, theta, nu));
      const Complex s = s1o2_closed_form(theta, nu), r = rk2_closed_form(theta, nu);
      EXPECT_LE(std::max(std::abs(a1 - s), std::abs(a2 - s)), 1e-12);
      EXPECT_LE(std::max(std::abs(b1 - r), std::abs(b2 - r)), 1e-12);
    }
  }
}

TEST(Spectrum, BranchesAndModulus) {
  const auto samples = spectrum(build_rule(schemes_id::dg_rk2), 0.3, 257);
  ASSERT_EQ(samples.size(), 257u);
  EXPECT_EQ(samples.front().theta, 0.0);
  EXPECT_EQ(samples.back().theta, 2.0 * kPi);
  EXPECT_NEAR(std::abs(samples.front().rho1 - 1.0), 0.0, 1e-14);
  for (const auto& s : samples) {
    EXPECT_EQ(s.max_modulus, std::max(std::abs(s.rho1), std::abs(s.rho2)));
  }
  // The physical branch tracks e^{-i nu theta} at small theta.
  EXPECT_NEAR(std::abs(samples[1].rho1 - std::polar(1.0, -0.3 * samples[1].theta)), 0.0, 1e-4);
}

TEST(Spectrum, CsvHeader) {
  const std::string csv = spectrum_csv(spectrum(build_rule(schemes_id::cgks_s1o2), 0.5, 3));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "theta,re_rho1,im_rho1,re_rho2,im_rho2,max_modulus");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
}

TEST(SpectralRadius, Examples) {
  const TwoMomentRule rule = build_rule(schemes_id::cgks_s1o2);
  EXPECT_NEAR(spectral_radius(rule, 1.0), 1.0, 1e-10);
  EXPECT_NEAR(spectral_radius(rule, 1.1), 1.2, 1e-8);
  for (const SchemeId& id : all_schemes()) {
    if (build_rule(id).slope_row() == SlopeRow::incremental) {
      EXPECT_EQ(spectral_radius(build_rule(id), 0.0), 1.0) << id;
    }
  }
  EXPECT_THROW(spectral_radius(rule, 0.5, 100), DomainError);
}

TEST(SpectralRadius, RefinementIsMonotone) {
  const TwoMomentRule rule = build_rule(schemes_id::dg_rk2);
  const double coarse = spectral_radius(rule, 0.5, 256);
  const double fine = spectral_radius(rule, 0.5, 4096);
  EXPECT_GE(fine, coarse - 1e-12);
}

TEST(SpectralRadiusProperty, ConjugateSymmetry) {
  for (const SchemeId& id : all_schemes()) {
    const TwoMomentRule rule = build_rule(id);
    for (int i = 1; i < 64; ++i) {
      const double theta = kPi * i / 64;
      const auto [a1, a2] = eigen2x2(assemble_G(rule, theta, 0.3));
      const auto [b1, b2] = eigen2x2(assemble_G(rule, 2.0 * kPi - theta, 0.3));
      const double ma = std::max(std::abs(a1), std::abs(a2));
      const double mb = std::max(std::abs(b1), std::abs(b2));
      EXPECT_NEAR(ma, mb, 1e-13) << id;
    }
  }
}

TEST(CflLimit, Examples) {
  EXPECT_NEAR(cfl_limit(build_rule(schemes_id::cgks_s1o2)).nu_star, 1.0, 1e-3);
  EXPECT_NEAR(cfl_limit(build_rule(schemes_id::dg_rk2)).nu_star, 1.0 / 3.0, 5e-3);
  EXPECT_NEAR(cfl_limit(build_rule(schemes_id::fr_g2)).nu_star, 1.0, 5e-3);
}

TEST(CflLimit, DgFamilyAgrees) {
  const CflResult dg = cfl_limit(build_rule(schemes_id::dg_rk2));
  EXPECT_NEAR(cfl_limit(build_rule(schemes_id::dg_s1o2)).nu_star, dg.nu_star, 5e-3);
  EXPECT_EQ(cfl_limit(build_rule(schemes_id::fr_radau)).nu_star, dg.nu_star);
}

TEST(CflLimit, BracketInvariant) {
  const TwoMomentRule rule = build_rule(schemes_id::dg_rk2);
  const CflResult r = cfl_limit(rule);
  EXPECT_FALSE(r.bracket_exhausted);
  EXPECT_LE(spectral_radius(rule, r.nu_star - r.bisection_tol), 1.0 + r.epsilon);
  EXPECT_GT(spectral_radius(rule, r.nu_star + r.bisection_tol), 1.0 + r.epsilon);
}

TEST(CflLimit, UnstableEverywhere) {
  // ubar' = ubar - nu (E - 1) ubar: downwind, unstable for every nu > 0.
  using R = Rational;
  const TwoMomentRule downwind(schemes_id::cgks_s1o2,
                               {{0, NuPolynomial{R(1), R(1)}}, {1, NuPolynomial{R(0), R(-1)}}},
                               {}, {}, {{0, NuPolynomial{R(1)}}});
  EXPECT_THROW(cfl_limit(downwind), NumericalFailure);
  EXPECT_THROW(cfl_limit(downwind, 0.1), DomainError);
}

TEST(CflLimit, JsonRecord) {
  const CflResult r = cfl_limit(build_rule(schemes_id::cgks_s1o2));
  const auto doc = nlohmann::json::parse(cfl_to_json(r));
  EXPECT_EQ(doc.at("scheme_id"), "cgks-s1o2");
  EXPECT_EQ(doc.at("nu_star").get<double>(), r.nu_star);
  EXPECT_EQ(doc.at("n_theta"), 2048);
  EXPECT_TRUE(doc.contains("bisection_tol"));
  EXPECT_TRUE(doc.contains("epsilon"));
}

double cubic_root_by_bisection(double theta) {
  const double t = std::tan(0.5 * theta);
  const double rhs = 1.0 + 1.0 / (t * t);
  double lo = 0.0, hi = 8.0;
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    (mid * mid * mid - 2 * mid * mid + 2 * mid < rhs ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

TEST(Rk2StabilityBound, MatchesBisectionOracle) {
  EXPECT_NEAR(rk2_stability_bound(kPi / 2), cubic_root_by_bisection(kPi / 2), 1e-13);
  for (double theta : {0.3, 1.0, 2.0, 3.0, 3.5, 5.0, 6.0}) {
    EXPECT_NEAR(rk2_stability_bound(theta), cubic_root_by_bisection(theta), 1e-12) << theta;
  }
}

TEST(Rk2StabilityBound, Limits) {
  EXPECT_EQ(rk2_stability_bound(kPi), 1.0);
  EXPECT_TRUE(std::isinf(rk2_stability_bound(0.0)));
  EXPECT_TRUE(std::isinf(rk2_stability_bound(2.0 * kPi)));
  EXPECT_NEAR(rk2_stability_bound(kPi - 1e-6), 1.0, 1e-9);
  EXPECT_NEAR(rk2_stability_bound_infimum(), 1.0, 1e-6);
}

}  // namespace
}  // namespace advect

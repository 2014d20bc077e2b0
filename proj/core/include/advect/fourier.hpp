#pragma once

#include "advect/two_moment.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace advect {

using Complex = std::complex<double>;

/// G(theta, nu) of the two-moment Fourier analysis: g_xy = sum_m coeff_m(nu) e^{i m theta}.
struct AmplificationMatrix {
  double theta = 0.0;
  double nu = 0.0;
  Complex g11, g12, g21, g22;

  Complex trace() const { return g11 + g22; }
  Complex determinant() const { return g11 * g22 - g12 * g21; }
};

AmplificationMatrix assemble_G(const TwoMomentRule& rule, double theta, double nu);
/// Tables already evaluated at nu.
AmplificationMatrix assemble_G(const NumericRule& rule, double theta, double nu);

/// Roots of x^2 - tr x + det: the larger-magnitude root by the sign-matched formula,
/// the other as det / root.
std::pair<Complex, Complex> eigen2x2(const AmplificationMatrix& g);

struct SpectrumSample {
  double theta = 0.0;
  Complex rho1;  ///< physical branch, continuous from 1 at theta = 0
  Complex rho2;  ///< spurious branch
  double max_modulus = 0.0;
};

/// n_theta uniform samples over [0, 2 pi] inclusive, branches tracked by continuity.
std::vector<SpectrumSample> spectrum(const TwoMomentRule& rule, double nu, int n_theta);

inline constexpr int kDefaultThetaSamples = 2048;
inline constexpr double kStabilitySlack = 1e-10;

/// Max over a uniform theta grid of max |rho|, refined by golden-section search at the
/// discrete maximizer. n_theta >= 256.
double spectral_radius(const TwoMomentRule& rule, double nu,
                       int n_theta = kDefaultThetaSamples);

struct CflResult {
  SchemeId scheme_id;
  double nu_star = 0.0;
  double bisection_tol = 0.0;
  int n_theta = 0;
  double epsilon = 0.0;
  /// True when the rule is still stable at the upper bracket end (nu_star is then the bracket).
  bool bracket_exhausted = false;
};

/// Bisection on [0, 4] for spectral_radius <= 1 + epsilon. Throws NumericalFailure
/// ("unstable at all nu") when the rule fails at nu = tol.
CflResult cfl_limit(const TwoMomentRule& rule, double tol = 1e-6,
                    double epsilon = kStabilitySlack, int n_theta = kDefaultThetaSamples);

/// 1 - nu (1 - e^{-i theta}).
Complex s1o2_closed_form(double theta, double nu);
/// 1 + nu (e^{-i theta} - 1) + nu^2/2 (e^{-i theta} - 1)^2.
Complex rk2_closed_form(double theta, double nu);

/// Real root of nu^3 - 2 nu^2 + 2 nu = 1 + cot^2(theta/2) (the cubic is monotone, so the
/// root is unique). Returns +inf at theta = 0 and 2 pi, exactly 1 at theta = pi.
double rk2_stability_bound(double theta);

/// Infimum of rk2_stability_bound over (0, 2 pi): grid minimum refined by golden section.
double rk2_stability_bound_infimum(int n_theta = 4096);

std::string spectrum_csv(const std::vector<SpectrumSample>& samples);
std::string cfl_to_json(const CflResult& result, int indent = 2);

}  // namespace advect

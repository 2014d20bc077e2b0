#pragma once

#include "advect/two_moment.hpp"

#include <random>
#include <vector>

namespace advect::testing {

inline TwoMomentField random_field(std::mt19937_64& rng, int n, double mean = 0.0) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> u(static_cast<std::size_t>(n)), v(u.size());
  for (auto& x : u) x = mean + dist(rng);
  for (auto& x : v) x = dist(rng);
  return TwoMomentField(std::move(u), std::move(v));
}

inline double max_abs_diff(const std::vector<double>& x, const std::vector<double>& y) {
  double out = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) out = std::max(out, std::abs(x[k] - y[k]));
  return out;
}

inline double max_abs_diff(const TwoMomentField& f, const TwoMomentField& g) {
  return std::max(max_abs_diff(f.ubar(), g.ubar()), max_abs_diff(f.v(), g.v()));
}

}  // namespace advect::testing

#pragma once

#include "advect/fourier.hpp"

#include <optional>
#include <string>
#include <vector>

namespace advect::cli {

/// Eigenvalue locus in the complex plane: axis box [-1.2, 1.2]^2, unit circle, one point
/// per eigenvalue (2 x samples), legend with the scheme label and CFL.
struct LocusPlot {
  std::string scheme_label;
  double cfl = 0.0;
  std::vector<SpectrumSample> samples;
  /// Embedded as a comment when present.
  std::optional<std::string> timestamp;
};

inline constexpr double kLocusHalfWidth = 1.2;

std::string render_svg(const LocusPlot& plot);

}  // namespace advect::cli

#include "svg_locus.hpp"

#include "advect/number_format.hpp"

#include <fmt/format.h>

namespace advect::cli {

namespace {

constexpr double kSize = 600.0;
constexpr double kMargin = 40.0;
constexpr double kScale = (kSize - 2.0 * kMargin) / (2.0 * kLocusHalfWidth);

double px(double re) { return kMargin + (re + kLocusHalfWidth) * kScale; }
double py(double im) { return kMargin + (kLocusHalfWidth - im) * kScale; }

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

void points(std::string& out, const std::vector<SpectrumSample>& samples, bool physical) {
  const char* cls = physical ? "rho1" : "rho2";
  out += fmt::format("  <g class=\"{}\" clip-path=\"url(#plot-area)\">\n", cls);
  for (const auto& s : samples) {
    const Complex z = physical ? s.rho1 : s.rho2;
    out += fmt::format("    <circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"1.6\"/>\n", px(z.real()),
                       py(z.imag()));
  }
  out += "  </g>\n";
}

}  // namespace

std::string render_svg(const LocusPlot& plot) {
  const double lo = px(-kLocusHalfWidth), hi = px(kLocusHalfWidth), box = hi - lo;
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (plot.timestamp) out += fmt::format("<!-- generated {} -->\n", *plot.timestamp);
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" "
      "viewBox=\"0 0 {0} {0}\">\n",
      kSize);
  out += "  <style>.rho1 circle{fill:#1f77b4}.rho2 circle{fill:#d62728}"
         "text{font-family:sans-serif;font-size:13px}</style>\n";
  out += fmt::format(
      "  <defs><clipPath id=\"plot-area\"><rect x=\"{0:.3f}\" y=\"{0:.3f}\" width=\"{1:.3f}\" "
      "height=\"{1:.3f}\"/></clipPath></defs>\n",
      lo, box);
  out += fmt::format(
      "  <rect class=\"axis-box\" x=\"{0:.3f}\" y=\"{0:.3f}\" width=\"{1:.3f}\" height=\"{1:.3f}\" "
      "fill=\"white\" stroke=\"black\"/>\n",
      lo, box);
  out += fmt::format(
      "  <line x1=\"{0:.3f}\" y1=\"{2:.3f}\" x2=\"{1:.3f}\" y2=\"{2:.3f}\" stroke=\"#999\"/>\n",
      lo, hi, py(0.0));
  out += fmt::format(
      "  <line x1=\"{2:.3f}\" y1=\"{0:.3f}\" x2=\"{2:.3f}\" y2=\"{1:.3f}\" stroke=\"#999\"/>\n",
      lo, hi, px(0.0));
  out += fmt::format(
      "  <circle class=\"unit-circle\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"{:.3f}\" fill=\"none\" "
      "stroke=\"black\" stroke-dasharray=\"4 3\"/>\n",
      px(0.0), py(0.0), kScale);
  for (double tick : {-1.0, 0.0, 1.0}) {
    out += fmt::format("  <text x=\"{:.3f}\" y=\"{:.3f}\" text-anchor=\"middle\">{}</text>\n",
                       px(tick), hi + 18.0, format_double(tick));
    out += fmt::format("  <text x=\"{:.3f}\" y=\"{:.3f}\" text-anchor=\"end\">{}</text>\n",
                       lo - 6.0, py(tick) + 4.0, format_double(tick));
  }
  points(out, plot.samples, true);
  points(out, plot.samples, false);
  out += "  <g class=\"legend\">\n";
  out += fmt::format("    <text x=\"{:.3f}\" y=\"{:.3f}\">{} CFL={}</text>\n", lo + 10.0,
                     lo + 20.0, escape(plot.scheme_label), format_double(plot.cfl));
  out += fmt::format(
      "    <circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"4\" fill=\"#1f77b4\"/><text x=\"{:.3f}\" "
      "y=\"{:.3f}\">physical branch</text>\n",
      lo + 16.0, lo + 36.0, lo + 26.0, lo + 40.0);
  out += fmt::format(
      "    <circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"4\" fill=\"#d62728\"/><text x=\"{:.3f}\" "
      "y=\"{:.3f}\">spurious branch</text>\n",
      lo + 16.0, lo + 54.0, lo + 26.0, lo + 58.0);
  out += "  </g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace advect::cli

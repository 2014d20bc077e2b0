#include "artifacts.hpp"
#include "commands.hpp"
#include "parallel.hpp"
#include "svg_locus.hpp"

#include "advect/errors.hpp"
#include "advect/schemes.hpp"

#include <gtest/gtest.h>

#include <atomic>
#include <fstream>
#include <regex>
#include <sstream>

namespace advect::cli {
namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

LocusPlot plot(int n_theta) {
  return {"DG-RK2", 0.33, spectrum(build_rule(schemes_id::dg_rk2), 0.33, n_theta), std::nullopt};
}

TEST(SvgLocus, OnePointPerEigenvalue) {
  const std::string svg = render_svg(plot(37));
  EXPECT_EQ(count(svg, "r=\"1.6\""), 74u);
  EXPECT_EQ(count(svg, "class=\"unit-circle\""), 1u);
  EXPECT_NE(svg.find("DG-RK2 CFL=0.33"), std::string::npos);
  EXPECT_EQ(svg.find("<!--"), std::string::npos);
}

TEST(SvgLocus, AxisBoxSpansPlusMinus1p2) {
  // Unit circle radius is 1/1.2 of half the box edge.
  const std::string svg = render_svg(plot(8));
  std::smatch box, circle;
  ASSERT_TRUE(std::regex_search(svg, box, std::regex("class=\"axis-box\"[^>]*width=\"([0-9.]+)\"")));
  ASSERT_TRUE(std::regex_search(svg, circle, std::regex("class=\"unit-circle\"[^>]*r=\"([0-9.]+)\"")));
  EXPECT_NEAR(std::stod(circle[1]) / (0.5 * std::stod(box[1])), 1.0 / kLocusHalfWidth, 1e-4);
}

TEST(SvgLocus, TimestampIsTheOnlyDifference) {
  LocusPlot stamped = plot(16);
  stamped.timestamp = "2026-01-01T00:00:00Z";
  std::string a = render_svg(stamped);
  const std::string b = render_svg(plot(16));
  const std::string comment = "<!-- generated 2026-01-01T00:00:00Z -->\n";
  ASSERT_NE(a.find(comment), std::string::npos);
  a.erase(a.find(comment), comment.size());
  EXPECT_EQ(a, b);
}

TEST(SvgLocus, EscapesLabel) {
  LocusPlot p = plot(4);
  p.scheme_label = "a<b&c";
  EXPECT_NE(render_svg(p).find("a&lt;b&amp;c"), std::string::npos);
}

TEST(ThreadLimit, ParsesEnvironmentValue) {
  EXPECT_EQ(thread_limit(std::string_view("3")), 3u);
  EXPECT_GE(thread_limit(std::nullopt), 1u);
  for (const char* bad : {"0", "-2", "two", "", "4x"}) {
    EXPECT_THROW(thread_limit(std::string_view(bad)), InvalidInput) << bad;
  }
}

TEST(ParallelFor, EveryIndexOnce) {
  for (std::size_t threads : {1u, 2u, 8u}) {
    std::vector<std::atomic<int>> hits(100);
    parallel_for(hits.size(), threads, [&](std::size_t i) { ++hits[i]; });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  }
  parallel_for(0, 4, [](std::size_t) { FAIL(); });
}

TEST(ParallelFor, RethrowsTaskFailure) {
  EXPECT_THROW(parallel_for(20, 4,
                            [](std::size_t i) {
                              if (i == 7) throw DomainError("boom");
                            }),
               DomainError);
}

TEST(Artifacts, WritesManifest) {
  const auto dir = std::filesystem::temp_directory_path() / "advect_cli_support_test";
  std::filesystem::remove_all(dir);
  OutputContext out{dir, false, {"advect-spectra", "table3"}};
  const auto path = write_artifact(out, "table3", "x.csv", "a,b\n", {{"k", 1}});
  std::ifstream csv(path);
  std::stringstream text;
  text << csv.rdbuf();
  EXPECT_EQ(text.str(), "a,b\n");
  std::ifstream manifest_file(dir / "x.csv.manifest.json");
  const auto manifest = nlohmann::json::parse(manifest_file);
  EXPECT_EQ(manifest.at("artifact"), "x.csv");
  EXPECT_EQ(manifest.at("config").at("k"), 1);
  EXPECT_TRUE(manifest.at("timestamp").is_null());
  EXPECT_EQ(manifest.at("invocation").size(), 2u);
  std::filesystem::remove_all(dir);
}

TEST(Artifacts, TimestampFormat) {
  EXPECT_TRUE(std::regex_match(utc_timestamp(),
                               std::regex(R"(\d{4}-\d\d-\d\dT\d\d:\d\d:\d\dZ)")));
}

TEST(Table3, MatchesPaperSigns) {
  const auto rows = table3_rows();
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[1].scheme_id, schemes_id::cgks_rk2);
  EXPECT_EQ(rows[1].dispersion, '+');
  EXPECT_EQ(rows[1].dissipation, '+');
  EXPECT_EQ(rows[2].dispersion, '0');
  EXPECT_EQ(rows[2].dissipation, '0');
  EXPECT_EQ(rows[3].dispersion, '0');
  EXPECT_EQ(rows[3].dissipation, '-');
  EXPECT_EQ(table3_csv(rows).substr(0, 39), "scheme,cfl_limit,dispersion,dissipation");
}

}  // namespace
}  // namespace advect::cli

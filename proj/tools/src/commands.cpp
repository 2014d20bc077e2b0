#include "commands.hpp"

#include "parallel.hpp"
#include "svg_locus.hpp"

#include "advect/advection_lab.hpp"
#include "advect/errors.hpp"
#include "advect/fourier.hpp"
#include "advect/modified_equation.hpp"
#include "advect/number_format.hpp"
#include "advect/schemes.hpp"
#include "advect/verification.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace advect::cli {

namespace {

using Json = nlohmann::ordered_json;

std::vector<SchemeId> parse_schemes(const std::vector<std::string>& names) {
  std::vector<SchemeId> ids;
  for (const auto& n : names) ids.push_back(SchemeId::parse(n));
  return ids;
}

Json scheme_names(const std::vector<SchemeId>& ids) {
  Json out = Json::array();
  for (const auto& id : ids) out.push_back(id.name());
  return out;
}

void announce(const std::filesystem::path& path) {
  std::printf("wrote %s\n", path.string().c_str());
}

}  // namespace

int cmd_spectrum(const SpectrumOptions& options, const OutputContext& out) {
  const SchemeId id = SchemeId::parse(options.scheme);
  const TwoMomentRule rule = build_rule(id);
  const auto samples = spectrum(rule, options.cfl, options.theta_samples);

  Json config;
  config["scheme"] = id.name();
  config["cfl"] = options.cfl;
  config["theta_samples"] = options.theta_samples;

  const std::string stem = "spectrum_" + id.name();
  announce(write_artifact(out, "spectrum", stem + ".csv", spectrum_csv(samples), config));
  LocusPlot plot{id.label(), options.cfl, samples, std::nullopt};
  if (out.timestamp) plot.timestamp = utc_timestamp();
  announce(write_artifact(out, "spectrum", stem + ".svg", render_svg(plot), config));

  double peak = 0.0;
  for (const auto& s : samples) peak = std::max(peak, s.max_modulus);
  std::printf("%s cfl %s: max |rho| over %d samples = %s\n", id.label().c_str(),
              format_double(options.cfl).c_str(), options.theta_samples,
              format_double(peak).c_str());
  return kOk;
}

int cmd_cfl(const CflOptions& options, const OutputContext& out) {
  const SchemeId id = SchemeId::parse(options.scheme);
  const CflResult result = cfl_limit(build_rule(id), 1e-6, kStabilitySlack, options.theta_samples);

  Json config;
  config["scheme"] = id.name();
  config["theta_samples"] = options.theta_samples;
  announce(write_artifact(out, "cfl", "cfl_" + id.name() + ".json", cfl_to_json(result) + "\n",
                          config));
  std::printf("%s: nu* = %s\n", id.label().c_str(), format_double(result.nu_star).c_str());
  return kOk;
}

int cmd_modeq(const ModeqOptions& options, const OutputContext& out) {
  std::vector<SchemeId> ids = parse_schemes(options.schemes);
  if (ids.empty()) ids.assign(second_order_schemes().begin(), second_order_schemes().end());

  std::vector<std::optional<TruncationReport>> slots(ids.size());
  parallel_for(ids.size(), thread_limit(), [&](std::size_t k) {
    const TwoMomentRule rule = build_rule(ids[k]);
    std::vector<double> nus = options.nus;
    if (nus.empty()) {
      const double limit = cfl_limit(rule).nu_star;
      for (int i = 1; i <= 9; ++i) {
        if (i / 10.0 <= limit + 1e-9) nus.push_back(i / 10.0);
      }
    }
    slots[k] = compare_truncation(rule, ids[k], nus);
  });
  std::vector<TruncationReport> reports;
  for (auto& r : slots) reports.push_back(std::move(*r));

  Json config;
  config["schemes"] = scheme_names(ids);
  config["nu"] = options.nus;
  announce(write_artifact(out, "modeq", "modeq.csv", truncation_csv(reports), config));
  for (const auto& r : reports) {
    std::printf("%s: %s (convention %+d)\n", r.scheme_id.label().c_str(),
                r.all_pass ? "all rows pass" : "rows fail", r.convention);
  }
  return kOk;
}

int cmd_run(const RunOptions& options, const OutputContext& out) {
  RunConfig config{SchemeId::parse(options.scheme), options.cells, options.cfl,
                   options.final_time};
  config.advection_speed = options.speed;
  const RunResult result = march(config);

  Json echo;
  echo["scheme"] = config.scheme_id.name();
  echo["cells"] = config.n_cells;
  echo["cfl"] = config.cfl;
  echo["final_time"] = config.final_time;
  echo["speed"] = config.advection_speed;
  echo["profile"] = "sine";
  const std::string csv = run_csv_header() + "\n" + run_csv_row(config, result) + "\n";
  announce(write_artifact(out, "run", "run_" + config.scheme_id.name() + ".csv", csv, echo));
  std::printf("%s", csv.c_str());
  return kOk;
}

int cmd_sweep(const SweepOptions& options, const OutputContext& out) {
  std::vector<SchemeId> ids = parse_schemes(options.schemes);
  if (ids.empty()) ids.assign(all_schemes().begin(), all_schemes().end());
  if (options.cfls.empty()) throw InvalidInput("sweep needs at least one --cfl");

  std::vector<RunConfig> configs;
  for (const auto& id : ids) {
    for (double cfl : options.cfls) {
      RunConfig c{id, options.cells, cfl, options.final_time};
      c.validate();
      configs.push_back(c);
    }
  }
  std::vector<RunResult> results(configs.size());
  const std::size_t threads = thread_limit();
  parallel_for(configs.size(), threads,
               [&](std::size_t k) { results[k] = march(configs[k]); });

  std::string csv = run_csv_header() + "\n";
  for (std::size_t k = 0; k < configs.size(); ++k) csv += run_csv_row(configs[k], results[k]) + "\n";

  Json echo;
  echo["schemes"] = scheme_names(ids);
  echo["cfl"] = options.cfls;
  echo["cells"] = options.cells;
  echo["final_time"] = options.final_time;
  announce(write_artifact(out, "sweep", "sweep.csv", csv, echo));
  std::printf("%zu runs on %zu thread(s)\n", configs.size(), std::min(threads, configs.size()));
  return kOk;
}

std::vector<Table3Row> table3_rows() {
  const std::vector<SchemeId> ids{schemes_id::cgks_s1o2, schemes_id::cgks_rk2,
                                  schemes_id::dg_s1o2, schemes_id::dg_rk2};
  const std::vector<double> nus{0.1, 0.2, 0.3};
  const TwoMomentRule reference = build_rule(schemes_id::cgks_s1o2);

  // A sign must hold at every sampled nu; differences below 1e-9 count as zero.
  auto sign_of = [](const std::vector<double>& diffs) {
    const double tiny = 1e-9;
    if (std::all_of(diffs.begin(), diffs.end(), [&](double d) { return std::abs(d) <= tiny; })) {
      return '0';
    }
    if (std::all_of(diffs.begin(), diffs.end(), [&](double d) { return d > tiny; })) return '+';
    if (std::all_of(diffs.begin(), diffs.end(), [&](double d) { return d < -tiny; })) return '-';
    return '~';
  };

  std::vector<Table3Row> rows;
  for (const auto& id : ids) {
    const TwoMomentRule rule = build_rule(id);
    std::vector<double> d3, d4;
    for (double nu : nus) {
      const SymbolExpansion e = expand_symbol(rule, nu);
      const SymbolExpansion r = expand_symbol(reference, nu);
      d3.push_back(std::abs(e.c3) - std::abs(r.c3));
      d4.push_back(std::abs(e.c4) - std::abs(r.c4));
    }
    rows.push_back({id, cfl_limit(rule).nu_star, sign_of(d3), sign_of(d4)});
  }
  return rows;
}

std::string table3_csv(const std::vector<Table3Row>& rows) {
  std::string out = "scheme,cfl_limit,dispersion,dissipation\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{}\n", r.scheme_id.name(), format_double(r.cfl_limit),
                       r.dispersion, r.dissipation);
  }
  return out;
}

int cmd_table3(const OutputContext& out) {
  const auto rows = table3_rows();
  const std::string csv = table3_csv(rows);
  Json config;
  config["reference"] = schemes_id::cgks_s1o2.name();
  config["nu"] = {0.1, 0.2, 0.3};
  announce(write_artifact(out, "table3", "table3.csv", csv, config));
  std::printf("%s", csv.c_str());
  return kOk;
}

int cmd_verify(const VerifyOptions& options, const OutputContext& out) {
  VerificationOptions run;
  run.only = options.only;
  if (options.seed_fault) run.rules = seeded_fault_provider(SchemeId::parse(*options.seed_fault));
  const VerificationReport report = run_verification(run);

  Json config;
  config["only"] = options.only;
  config["seed_fault"] = options.seed_fault ? Json(*options.seed_fault) : Json(nullptr);
  announce(write_artifact(out, "verify", "verify_report.json", report_to_json(report) + "\n",
                          config));
  std::printf("%s", report_summary(report).c_str());
  if (!report.all_pass) {
    std::string ids;
    for (int id : report.failing_ids()) ids += fmt::format(" {}", id);
    std::fprintf(stderr, "failing criteria:%s\n", ids.c_str());
  }
  return report.all_pass ? kOk : kCriteriaFailed;
}

}  // namespace advect::cli

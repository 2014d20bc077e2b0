#include "advect/advection_lab.hpp"

#include "advect/errors.hpp"
#include "advect/fourier.hpp"
#include "advect/number_format.hpp"
#include "advect/schemes.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace advect {

namespace {

double field_amplitude(const TwoMomentField& f) {
  double amp = 0.0;
  for (int j = 0; j < f.n_cells(); ++j) {
    const auto k = static_cast<std::size_t>(j);
    const double u = std::abs(f.ubar()[k]);
    const double v = std::abs(f.v()[k]);
    if (!std::isfinite(u) || !std::isfinite(v)) return std::numeric_limits<double>::infinity();
    amp = std::max({amp, u, v});
  }
  return amp;
}

void fill_errors(const TwoMomentField& numeric, const TwoMomentField& exact, RunResult& out) {
  const double h = numeric.h();
  double l1 = 0.0, l2 = 0.0;
  for (std::size_t k = 0; k < numeric.ubar().size(); ++k) {
    const double e = numeric.ubar()[k] - exact.ubar()[k];
    l1 += std::abs(e);
    l2 += e * e;
  }
  out.l1_error = h * l1;
  out.l2_error = std::sqrt(h * l2);
  out.max_amplitude = field_amplitude(numeric);
}

}  // namespace

void RunConfig::validate() const {
  if (n_cells < 8) throw InvalidInput(fmt::format("n_cells = {} is below 8", n_cells));
  if (!(cfl > 0.0) || !std::isfinite(cfl)) throw InvalidInput("cfl must be positive and finite");
  if (!(final_time > 0.0) || !std::isfinite(final_time)) {
    throw InvalidInput("final_time must be positive and finite");
  }
  if (!(advection_speed != 0.0) || !std::isfinite(advection_speed)) {
    throw InvalidInput("advection_speed must be non-zero and finite");
  }
}

TwoMomentField init_field(Profile profile, int n_cells, double shift) {
  if (profile != Profile::sine) throw InvalidInput("unknown initial profile");
  if (n_cells < TwoMomentField::kMinCells) {
    throw InvalidInput(fmt::format("n_cells = {} is below {}", n_cells, TwoMomentField::kMinCells));
  }
  const double h = 1.0 / n_cells;
  const double s = shift - std::floor(shift);
  const double pi = std::numbers::pi;
  // average of sin(2 pi x) over a cell = sin(2 pi x_c) sin(pi h) / (pi h)
  const double damping = std::sin(pi * h) / (pi * h);
  const double jump = 2.0 * std::sin(pi * h);
  std::vector<double> ubar(static_cast<std::size_t>(n_cells)), v(ubar.size());
  for (int j = 0; j < n_cells; ++j) {
    const double phase = 2.0 * pi * ((j + 0.5) * h - s);
    ubar[static_cast<std::size_t>(j)] = std::sin(phase) * damping;
    v[static_cast<std::size_t>(j)] = std::cos(phase) * jump;
  }
  return TwoMomentField(std::move(ubar), std::move(v), h);
}

TwoMomentField mirror(const TwoMomentField& field) {
  std::vector<double> ubar(field.ubar().rbegin(), field.ubar().rend());
  std::vector<double> v(field.v().rbegin(), field.v().rend());
  for (auto& x : v) x = -x;
  return TwoMomentField(std::move(ubar), std::move(v), field.h());
}

long step_count(const RunConfig& config) {
  config.validate();
  const double h = 1.0 / config.n_cells;
  return static_cast<long>(std::ceil(config.final_time / (config.cfl * h) - 1e-12));
}

RunResult march(const RunConfig& config, const Stepper& stepper, const StepObserver& observer) {
  config.validate();
  const long steps = step_count(config);
  const double h = 1.0 / config.n_cells;
  double last_nu = (config.final_time - static_cast<double>(steps - 1) * config.cfl * h) / h;
  if (std::abs(last_nu - config.cfl) <= 1e-9 * config.cfl) last_nu = config.cfl;

  const bool leftward = config.advection_speed < 0.0;
  TwoMomentField field = init_field(config.initial_profile, config.n_cells);
  if (leftward) field = mirror(field);

  RunResult result;
  for (long n = 0; n < steps; ++n) {
    field = stepper(field, n + 1 == steps ? last_nu : config.cfl);
    result.steps_taken = n + 1;
    if (observer) observer(n + 1, leftward ? mirror(field) : field);
    if (field_amplitude(field) > kBlowupThreshold) {
      result.blew_up = true;
      break;
    }
  }
  if (leftward) field = mirror(field);
  const double shift = (leftward ? -1.0 : 1.0) * config.final_time;
  fill_errors(field, init_field(config.initial_profile, config.n_cells, shift), result);
  if (!result.blew_up && result.max_amplitude > kBlowupThreshold) result.blew_up = true;
  return result;
}

RunResult march(const RunConfig& config, const StepObserver& observer) {
  return march(config, build_rule(config.scheme_id), observer);
}

RunResult march(const RunConfig& config, const TwoMomentRule& rule, const StepObserver& observer) {
  config.validate();
  const NumericRule nominal = rule.at(config.cfl);
  Stepper stepper = [&](const TwoMomentField& f, double nu) {
    return nu == config.cfl ? apply_rule(nominal, f) : apply_rule(rule.at(nu), f);
  };
  return march(config, stepper, observer);
}

std::vector<ConvergenceRow> convergence_study(const SchemeId& id, double cfl,
                                              const std::vector<int>& n_list,
                                              double final_time) {
  if (n_list.size() < 4) throw InvalidInput("convergence study needs at least 4 grid sizes");
  for (std::size_t k = 1; k < n_list.size(); ++k) {
    if (n_list[k] != 2 * n_list[k - 1]) throw InvalidInput("grid sizes must double");
  }
  const TwoMomentRule rule = build_rule(id);
  if (spectral_radius(rule, cfl) > 1.0 + kStabilitySlack) {
    throw DomainError(fmt::format("cfl {} is above the stability limit of {}", cfl, id.label()));
  }
  std::vector<ConvergenceRow> rows;
  for (int n : n_list) {
    RunConfig config{id, n, cfl, final_time};
    const RunResult r = march(config);
    ConvergenceRow row{n, r.l1_error, std::nullopt};
    if (!rows.empty()) row.order = std::log2(rows.back().l1_error / r.l1_error);
    rows.push_back(row);
  }
  return rows;
}

BlowupTable blowup_probe(const SchemeId& id, const std::vector<double>& cfl_list, int n_cells,
                         double final_time) {
  BlowupTable table{id, n_cells, final_time, {}, true};
  bool seen = false;
  for (double cfl : cfl_list) {
    RunConfig config{id, n_cells, cfl, final_time};
    const RunResult r = march(config);
    if (seen && !r.blew_up) table.monotone_onset = false;
    seen = seen || r.blew_up;
    table.rows.push_back({cfl, r});
  }
  return table;
}

std::string run_csv_header() { return "scheme,n_cells,cfl,T,l1,l2,blew_up,steps"; }

std::string run_csv_row(const RunConfig& config, const RunResult& result) {
  return fmt::format("{},{},{},{},{},{},{},{}", config.scheme_id.name(), config.n_cells,
                     format_double(config.cfl), format_double(config.final_time),
                     format_double(result.l1_error), format_double(result.l2_error),
                     result.blew_up ? "true" : "false", result.steps_taken);
}

}  // namespace advect

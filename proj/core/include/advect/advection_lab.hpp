#pragma once

#include "advect/two_moment.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace advect {

enum class Profile { sine };

/// u_t + c u_x = 0 on [0, 1], periodic; final_time in domain periods.
/// A negative speed is marched on the mirrored grid (rules only ever see c > 0).
struct RunConfig {
  SchemeId scheme_id = schemes_id::cgks_s1o2;
  int n_cells = 640;
  double cfl = 0.5;
  double final_time = 1.0;
  Profile initial_profile = Profile::sine;
  double advection_speed = 1.0;

  /// Throws InvalidInput unless n_cells >= 8, cfl > 0, final_time > 0, speed != 0.
  void validate() const;
};

inline constexpr double kBlowupThreshold = 1e12;

struct RunResult {
  double l1_error = 0.0;
  double l2_error = 0.0;
  double max_amplitude = 0.0;
  long steps_taken = 0;
  bool blew_up = false;
};

/// Exact cell averages of u0 and h times exact averages of u0'; shift moves the profile right.
TwoMomentField init_field(Profile profile, int n_cells, double shift = 0.0);

/// One step at CFL number nu.
using Stepper = std::function<TwoMomentField(const TwoMomentField&, double nu)>;
/// Called after every step with the step count and the new field.
using StepObserver = std::function<void(long step, const TwoMomentField&)>;

/// Step count ceil(T / dt) with the last step shortened to land on T.
long step_count(const RunConfig& config);

RunResult march(const RunConfig& config, const StepObserver& observer = {});
/// Marches config with an explicit rule instead of build_rule(config.scheme_id).
RunResult march(const RunConfig& config, const TwoMomentRule& rule,
                const StepObserver& observer = {});
/// Same loop with an explicit stepper (e.g. grp_step).
RunResult march(const RunConfig& config, const Stepper& stepper,
                const StepObserver& observer = {});

struct ConvergenceRow {
  int n_cells = 0;
  double l1_error = 0.0;
  /// log2(L1(N) / L1(2N)) against the previous row; absent on the first row.
  std::optional<double> order;
};

/// n_list must double at each entry and have at least 4 sizes.
std::vector<ConvergenceRow> convergence_study(const SchemeId& id, double cfl,
                                              const std::vector<int>& n_list,
                                              double final_time = 1.0);

struct BlowupRow {
  double cfl = 0.0;
  RunResult result;
};

struct BlowupTable {
  SchemeId scheme_id;
  int n_cells = 0;
  double final_time = 0.0;
  std::vector<BlowupRow> rows;
  /// Once a row blows up, every later (larger-cfl) row does too.
  bool monotone_onset = true;
};

BlowupTable blowup_probe(const SchemeId& id, const std::vector<double>& cfl_list, int n_cells,
                         double final_time = 1.0);

/// Reverse the grid and negate v: maps a c < 0 problem to c > 0 and back.
TwoMomentField mirror(const TwoMomentField& field);

/// "scheme,n_cells,cfl,T,l1,l2,blew_up,steps" header line.
std::string run_csv_header();
std::string run_csv_row(const RunConfig& config, const RunResult& result);

}  // namespace advect

#pragma once

#include "artifacts.hpp"

#include "advect/scheme_id.hpp"

#include <optional>
#include <string>
#include <vector>

namespace advect::cli {

/// Exit codes shared by every verb.
enum ExitCode : int {
  kOk = 0,
  kCriteriaFailed = 1,
  kUsage = 2,
  kIo = 3,
  kComputation = 4,
};

struct SpectrumOptions {
  std::string scheme;
  double cfl = 0.0;
  int theta_samples = 512;
};

struct CflOptions {
  std::string scheme;
  int theta_samples = 2048;
};

struct ModeqOptions {
  /// Empty: the six second-order schemes.
  std::vector<std::string> schemes;
  /// Empty: 0.1 .. 0.9 capped at each scheme's limit.
  std::vector<double> nus;
};

struct RunOptions {
  std::string scheme;
  double cfl = 0.5;
  int cells = 640;
  double final_time = 1.0;
  double speed = 1.0;
};

struct SweepOptions {
  /// Empty: every scheme.
  std::vector<std::string> schemes;
  std::vector<double> cfls;
  int cells = 640;
  double final_time = 1.0;
};

struct VerifyOptions {
  std::vector<int> only;
  /// Scheme whose a_0 gets a 1e-3 nu perturbation (test fixture).
  std::optional<std::string> seed_fault;
};

int cmd_spectrum(const SpectrumOptions& options, const OutputContext& out);
int cmd_cfl(const CflOptions& options, const OutputContext& out);
int cmd_modeq(const ModeqOptions& options, const OutputContext& out);
int cmd_run(const RunOptions& options, const OutputContext& out);
int cmd_sweep(const SweepOptions& options, const OutputContext& out);
int cmd_table3(const OutputContext& out);
int cmd_verify(const VerifyOptions& options, const OutputContext& out);

/// Table 3 rows: sign of |c_k(scheme)| - |c_k(CGKS-S1O2)| at matched nu.
struct Table3Row {
  SchemeId scheme_id;
  double cfl_limit = 0.0;
  char dispersion = '0';
  char dissipation = '0';
};
std::vector<Table3Row> table3_rows();
std::string table3_csv(const std::vector<Table3Row>& rows);

}  // namespace advect::cli

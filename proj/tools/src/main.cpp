// advect-spectra: Fourier, truncation and time-marching analysis of two-moment schemes.
#include "commands.hpp"
#include "parallel.hpp"

#include "advect/errors.hpp"
#include "advect/version.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <exception>

namespace {

using namespace advect;
using namespace advect::cli;

const CLI::Validator kScheme(
    [](std::string& text) {
      try {
        SchemeId::parse(text);
        return std::string();
      } catch (const std::exception& e) {
        return std::string(e.what());
      }
    },
    "SCHEME", "scheme");

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier, truncation and time-marching analysis of two-moment advection schemes",
               "advect-spectra"};
  app.set_version_flag("--version", std::string(kLibraryVersion));
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_dir = ".";
  bool no_timestamp = false;
  app.add_option("--out", out_dir, "Output directory")->capture_default_str();
  app.add_flag("--no-timestamp", no_timestamp, "Omit timestamps from SVG and manifests");

  SpectrumOptions spectrum;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalue spectrum CSV and locus SVG");
  spectrum_cmd->add_option("--scheme", spectrum.scheme)->required()->check(kScheme);
  spectrum_cmd->add_option("--cfl", spectrum.cfl)->required()->check(CLI::NonNegativeNumber);
  spectrum_cmd->add_option("--theta-samples", spectrum.theta_samples)
      ->check(CLI::Range(2, 1 << 20))
      ->capture_default_str();

  CflOptions cfl;
  auto* cfl_cmd = app.add_subcommand("cfl", "CFL stability limit by bisection");
  cfl_cmd->add_option("--scheme", cfl.scheme)->required()->check(kScheme);
  cfl_cmd->add_option("--theta-samples", cfl.theta_samples)
      ->check(CLI::Range(256, 1 << 20))
      ->capture_default_str();

  ModeqOptions modeq;
  auto* modeq_cmd = app.add_subcommand("modeq", "Truncation coefficients against the printed ones");
  modeq_cmd->add_option("--scheme", modeq.schemes, "Repeatable; default: second-order schemes")
      ->check(kScheme);
  modeq_cmd->add_option("--cfl", modeq.nus, "Repeatable; default: 0.1..0.9 up to the limit")
      ->check(CLI::PositiveNumber);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "March the sine profile and report errors");
  run_cmd->add_option("--scheme", run.scheme)->required()->check(kScheme);
  run_cmd->add_option("--cfl", run.cfl)->check(CLI::PositiveNumber)->capture_default_str();
  run_cmd->add_option("--cells", run.cells)->check(CLI::Range(8, 1 << 24))->capture_default_str();
  run_cmd->add_option("--final-time", run.final_time, "In domain periods")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run_cmd->add_option("--speed", run.speed, "Advection speed sign (non-zero)")
      ->capture_default_str();

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Parallel (scheme x cfl) run grid");
  sweep_cmd->add_option("--scheme", sweep.schemes, "Repeatable; default: every scheme")
      ->check(kScheme);
  sweep_cmd->add_option("--cfl", sweep.cfls, "Repeatable")->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--cells", sweep.cells)->check(CLI::Range(8, 1 << 24))->capture_default_str();
  sweep_cmd->add_option("--final-time", sweep.final_time)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* table3_cmd = app.add_subcommand("table3", "Dispersion/dissipation contrast table");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance criteria");
  verify_cmd->add_option("--only", verify.only, "Repeatable criterion id")
      ->check(CLI::Range(1, 8));
  verify_cmd->add_option("--seed-fault", verify.seed_fault,
                         "Perturb a_0 of this scheme by 1e-3 nu (test fixture)")
      ->check(kScheme);

  try {
    app.parse(argc, argv);
    if (run.speed == 0.0) throw CLI::ValidationError("--speed", "must be non-zero");
    (void)thread_limit();
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const InvalidInput& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kUsage;
  }

  OutputContext out;
  out.dir = out_dir;
  out.timestamp = !no_timestamp;
  out.invocation.emplace_back("advect-spectra");
  for (int i = 1; i < argc; ++i) out.invocation.emplace_back(argv[i]);

  try {
    if (spectrum_cmd->parsed()) return cmd_spectrum(spectrum, out);
    if (cfl_cmd->parsed()) return cmd_cfl(cfl, out);
    if (modeq_cmd->parsed()) return cmd_modeq(modeq, out);
    if (run_cmd->parsed()) return cmd_run(run, out);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep, out);
    if (table3_cmd->parsed()) return cmd_table3(out);
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kComputation;
  }
  return kUsage;
}

#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace carleman::cli {

// Malformed command line or invalid option combination; exit code 2.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --help was requested; carries the usage text, exit code 0.
struct help_requested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Subcommand { constants, verify, extremal, norm, bennett, lemma };
enum class WeightSource { power, file, constant, none };
enum class Format { json, csv };

struct RunConfig {
  Subcommand subcommand = Subcommand::constants;

  WeightSource weight_source = WeightSource::none;
  double power_alpha = 0.0;
  std::size_t weight_count = 0;  // materialized length for power/constant
  std::string weights_path;

  std::size_t horizon = 1000;
  bool horizon_set = false;
  std::size_t window = 64;

  std::string terms_path;  // verify
  double constant_c = 0.0;

  std::size_t n = 0;  // extremal / norm / lemma
  double tol = 1e-12;
  double p = 2.0;  // norm
  int iters = 1000;
  bool extra_starts = false;

  double alpha_min = 0.01;  // bennett
  double alpha_max = 0.99;
  double alpha_step = 0.01;
  std::size_t n_max = 10000;
  std::size_t x_samples = 10000;
  int jobs = 1;

  double lemma_r = 0.0;

  Format format = Format::json;
  std::string out_path;  // empty = report stream
};

// Maps argv (without the program name) onto a RunConfig. Throws usage_error
// on malformed arguments and help_requested for --help.
RunConfig parse_args(const std::vector<std::string>& args);

// Executes the configured subcommand. Writes exactly one report to `report`
// (or to config.out_path when set) and diagnostics to `diag`. Returns 0 on
// success, 1 on numerical failure, 2 on input/usage problems discovered
// while loading data.
int run(const RunConfig& config, std::ostream& report, std::ostream& diag);

// parse_args + run wired to stdout/stderr with the full exit-code contract.
int main_entry(int argc, const char* const* argv);

}  // namespace carleman::cli

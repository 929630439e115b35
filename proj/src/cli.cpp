#include "carleman/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "carleman/bennett.hpp"
#include "carleman/constants.hpp"
#include "carleman/extremal.hpp"
#include "carleman/geometric.hpp"
#include "carleman/matrixnorm.hpp"
#include "carleman/sequences.hpp"
#include "carleman/serialize.hpp"

namespace carleman::cli {
namespace {

WeightSequence materialize_weights(const RunConfig& config, std::size_t count) {
  if (config.weight_source == WeightSource::power)
    return make_power_weights(config.power_alpha, count);
  return make_constant_weights(count);
}

// Generators materialize exactly `generated_count`; files must supply at
// least `file_minimum` values and are used whole (the extra horizon only
// improves the reported bounds).
WeightProfile load_profile(const RunConfig& config, std::size_t generated_count,
                           std::size_t file_minimum) {
  if (config.weight_source == WeightSource::file) {
    WeightSequence weights = read_weights_file(config.weights_path);
    if (weights.size() < file_minimum) {
      throw io_error(config.weights_path + ": need at least " +
                     std::to_string(file_minimum) + " weights, found " +
                     std::to_string(weights.size()));
    }
    return profile(std::move(weights));
  }
  return profile(materialize_weights(config, generated_count));
}

std::string render(const Json& value) { return value.dump(2) + "\n"; }

std::string execute(const RunConfig& config) {
  switch (config.subcommand) {
    case Subcommand::constants: {
      WeightProfile prof;
      std::size_t horizon = config.horizon;
      if (config.weight_source == WeightSource::file) {
        WeightSequence weights = read_weights_file(config.weights_path);
        if (!config.horizon_set) {
          if (weights.size() < 2)
            throw io_error(config.weights_path + ": need at least 2 weights");
          horizon = weights.size() - 1;
        } else if (weights.size() < horizon + 1) {
          throw io_error(config.weights_path + ": need at least " +
                         std::to_string(horizon + 1) + " weights, found " +
                         std::to_string(weights.size()));
        }
        prof = profile(std::move(weights));
      } else {
        prof = profile(materialize_weights(config, horizon + 1));
      }
      const ConstantComparison comparison = compare_M_L(prof, horizon, config.window);
      return config.format == Format::json ? render(report_json(comparison))
                                           : report_csv(comparison);
    }
    case Subcommand::verify: {
      const TermSequence terms = read_terms_file(config.terms_path);
      const WeightProfile prof = load_profile(config, terms.size(), terms.size());
      const VerifyReport report = verify_inequality(terms, prof, config.constant_c);
      return config.format == Format::json ? render(report_json(report))
                                           : report_csv(report);
    }
    case Subcommand::extremal: {
      const WeightProfile prof = load_profile(config, config.n + 1, config.n);
      const ExtremalSolution solution = solve_mu_n(prof, config.n, config.tol);
      return config.format == Format::json ? render(report_json(solution))
                                           : report_csv(solution);
    }
    case Subcommand::norm: {
      const WeightProfile prof = load_profile(config, config.n + 1, config.n);
      const NormEstimate estimate = estimate_norm_lp(prof, config.n, config.p,
                                                     config.iters, config.tol,
                                                     config.extra_starts);
      return config.format == Format::json ? render(report_json(estimate))
                                           : report_csv(estimate);
    }
    case Subcommand::bennett: {
      std::vector<double> grid;
      for (std::size_t k = 0;; ++k) {
        const double alpha = config.alpha_min + static_cast<double>(k) * config.alpha_step;
        if (alpha > config.alpha_max + config.alpha_step * 1e-9) break;
        grid.push_back(alpha);
      }
      const std::vector<BennettRow> rows =
          bennett_scan(grid, config.n_max, config.x_samples, config.jobs);
      return config.format == Format::json ? render(report_json(rows)) : report_csv(rows);
    }
    case Subcommand::lemma: {
      const Lemma0Bounds bounds = lemma0_bounds(config.n, config.lemma_r);
      return config.format == Format::json
                 ? render(report_json(bounds, config.n, config.lemma_r))
                 : report_csv(bounds, config.n, config.lemma_r);
    }
  }
  throw usage_error("unknown subcommand");
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig config;
  CLI::App app{"Weighted-mean inequality toolkit: supremum constants, exact "
               "finite-section optima, operator-norm estimates, and power-weight "
               "condition scans."};
  app.name("carleman");
  app.require_subcommand(1);

  // One subcommand parses per invocation, so option storage is shared.
  double power_alpha = 0.0;
  std::string weights_path;
  std::string terms_path;
  std::string out_path;
  std::string format_name = "json";
  double constant_c = 0.0;
  double tol = 1e-12;
  double p = 2.0;
  double lemma_r = 0.0;
  double alpha_min = 0.01;
  double alpha_max = 0.99;
  double alpha_step = 0.01;
  std::uint64_t horizon = 1000;
  std::uint64_t n = 0;
  std::uint64_t n_max = 10000;
  std::uint64_t x_samples = 10000;
  int iters = 1000;
  int jobs = 1;
  bool extra_starts = false;

  const auto add_weight_flags = [&](CLI::App* sub) {
    sub->add_option("--power", power_alpha, "Weights k^alpha for the given alpha");
    sub->add_option("--weights-file", weights_path,
                    "Weights from a file, one non-negative decimal per line");
    sub->add_flag("--unit", "Unit weights (all ones)");
  };
  const auto add_output_flags = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", out_path, "Write the report to this file instead of stdout");
  };

  CLI::App* constants_cmd = app.add_subcommand(
      "constants", "Supremum terms of both constants and the derived bound");
  add_weight_flags(constants_cmd);
  add_output_flags(constants_cmd);
  constants_cmd->add_option("--horizon", horizon, "Largest index in the supremum scan");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check the inequality for a file of terms");
  add_weight_flags(verify_cmd);
  add_output_flags(verify_cmd);
  verify_cmd->add_option("--terms-file", terms_path,
                         "Terms from a file, one non-negative decimal per line");
  verify_cmd->add_option("--C", constant_c, "Constant to verify against");

  CLI::App* extremal_cmd = app.add_subcommand(
      "extremal", "Best finite-section constant and its maximizing sequence");
  add_weight_flags(extremal_cmd);
  add_output_flags(extremal_cmd);
  extremal_cmd->add_option("--n", n, "Section size");
  extremal_cmd->add_option("--tol", tol, "Relative bisection tolerance");

  CLI::App* norm_cmd = app.add_subcommand(
      "norm", "Lower-bound estimate of the truncated weighted-mean matrix norm");
  add_weight_flags(norm_cmd);
  add_output_flags(norm_cmd);
  norm_cmd->add_option("--p", p, "Norm exponent, must exceed 1");
  norm_cmd->add_option("--n", n, "Truncation size");
  norm_cmd->add_option("--iters", iters, "Power-method iteration budget");
  norm_cmd->add_option("--tol", tol, "Convergence tolerance on successive ratios");
  norm_cmd->add_flag("--extra-starts", extra_starts,
                     "Also iterate from the first basis vector and a seeded random vector");

  CLI::App* bennett_cmd = app.add_subcommand(
      "bennett", "Power-weight condition scan over an alpha grid");
  add_output_flags(bennett_cmd);
  bennett_cmd->add_option("--alpha-min", alpha_min, "Grid start, in (0,1)");
  bennett_cmd->add_option("--alpha-max", alpha_max, "Grid end, in (0,1)");
  bennett_cmd->add_option("--alpha-step", alpha_step, "Grid step, positive");
  bennett_cmd->add_option("--n-max", n_max, "Largest condition index per alpha");
  bennett_cmd->add_option("--x-samples", x_samples, "Sample count for the x-grid on (0,1]");
  bennett_cmd->add_option("--jobs", jobs, "Worker threads for grid rows");

  CLI::App* lemma_cmd =
      app.add_subcommand("lemma", "Sandwich bounds for the power sum");
  add_output_flags(lemma_cmd);
  lemma_cmd->add_option("--n", n, "Number of summands");
  lemma_cmd->add_option("--r", lemma_r, "Exponent, in (0,1]");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("carleman");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw help_requested(app.help());
  } catch (const CLI::ParseError& e) {
    throw usage_error(e.what());
  }

  CLI::App* active = nullptr;
  if (constants_cmd->parsed()) {
    active = constants_cmd;
    config.subcommand = Subcommand::constants;
  } else if (verify_cmd->parsed()) {
    active = verify_cmd;
    config.subcommand = Subcommand::verify;
  } else if (extremal_cmd->parsed()) {
    active = extremal_cmd;
    config.subcommand = Subcommand::extremal;
  } else if (norm_cmd->parsed()) {
    active = norm_cmd;
    config.subcommand = Subcommand::norm;
  } else if (bennett_cmd->parsed()) {
    active = bennett_cmd;
    config.subcommand = Subcommand::bennett;
  } else if (lemma_cmd->parsed()) {
    active = lemma_cmd;
    config.subcommand = Subcommand::lemma;
  } else {
    throw usage_error("a subcommand is required");
  }

  if (active->count("--format") > 0) {
    config.format = format_name == "csv" ? Format::csv : Format::json;
  } else {
    config.format =
        config.subcommand == Subcommand::bennett ? Format::csv : Format::json;
  }
  config.out_path = out_path;

  const bool needs_weights = config.subcommand == Subcommand::constants ||
                             config.subcommand == Subcommand::verify ||
                             config.subcommand == Subcommand::extremal ||
                             config.subcommand == Subcommand::norm;
  if (needs_weights) {
    const int sources = static_cast<int>(active->count("--power") > 0) +
                        static_cast<int>(active->count("--weights-file") > 0) +
                        static_cast<int>(active->count("--unit") > 0);
    if (sources != 1)
      throw usage_error("exactly one of --power, --weights-file, --unit is required");
    if (active->count("--power") > 0) {
      if (!std::isfinite(power_alpha)) throw usage_error("--power needs a finite alpha");
      config.weight_source = WeightSource::power;
      config.power_alpha = power_alpha;
    } else if (active->count("--weights-file") > 0) {
      config.weight_source = WeightSource::file;
      config.weights_path = weights_path;
    } else {
      config.weight_source = WeightSource::constant;
    }
  }

  switch (config.subcommand) {
    case Subcommand::constants:
      config.horizon = static_cast<std::size_t>(horizon);
      config.horizon_set = active->count("--horizon") > 0;
      if (config.horizon < 1) throw usage_error("--horizon must be at least 1");
      break;
    case Subcommand::verify:
      if (active->count("--terms-file") == 0) throw usage_error("--terms-file is required");
      config.terms_path = terms_path;
      if (active->count("--C") == 0) throw usage_error("--C is required");
      if (!std::isfinite(constant_c) || constant_c <= 0.0)
        throw usage_error("--C must be finite and positive");
      config.constant_c = constant_c;
      break;
    case Subcommand::extremal:
      if (active->count("--n") == 0 || n < 1)
        throw usage_error("--n must be given and at least 1");
      config.n = static_cast<std::size_t>(n);
      if (!std::isfinite(tol) || tol <= 0.0) throw usage_error("--tol must be positive");
      config.tol = tol;
      break;
    case Subcommand::norm:
      if (active->count("--n") == 0 || n < 1)
        throw usage_error("--n must be given and at least 1");
      config.n = static_cast<std::size_t>(n);
      if (!std::isfinite(p) || p <= 1.0) throw usage_error("--p must exceed 1");
      config.p = p;
      if (iters < 1) throw usage_error("--iters must be at least 1");
      config.iters = iters;
      if (!std::isfinite(tol) || tol <= 0.0) throw usage_error("--tol must be positive");
      config.tol = tol;
      config.extra_starts = extra_starts;
      break;
    case Subcommand::bennett:
      if (!std::isfinite(alpha_min) || !std::isfinite(alpha_max) ||
          alpha_min <= 0.0 || alpha_max >= 1.0 || alpha_min > alpha_max)
        throw usage_error("alpha grid must satisfy 0 < alpha-min <= alpha-max < 1");
      if (!std::isfinite(alpha_step) || alpha_step <= 0.0)
        throw usage_error("--alpha-step must be positive");
      config.alpha_min = alpha_min;
      config.alpha_max = alpha_max;
      config.alpha_step = alpha_step;
      if (n_max < 1) throw usage_error("--n-max must be at least 1");
      config.n_max = static_cast<std::size_t>(n_max);
      if (x_samples < 1) throw usage_error("--x-samples must be at least 1");
      config.x_samples = static_cast<std::size_t>(x_samples);
      if (jobs < 1) throw usage_error("--jobs must be at least 1");
      config.jobs = jobs;
      break;
    case Subcommand::lemma:
      if (active->count("--n") == 0 || n < 1)
        throw usage_error("--n must be given and at least 1");
      config.n = static_cast<std::size_t>(n);
      if (active->count("--r") == 0 || !std::isfinite(lemma_r) || lemma_r <= 0.0 ||
          lemma_r > 1.0)
        throw usage_error("--r must be given and lie in (0, 1]");
      config.lemma_r = lemma_r;
      break;
  }
  return config;
}

int run(const RunConfig& config, std::ostream& report, std::ostream& diag) {
  try {
    const std::string text = execute(config);
    if (!config.out_path.empty()) {
      std::ofstream out(config.out_path, std::ios::binary);
      if (!out) throw io_error("cannot open " + config.out_path + " for writing");
      out << text;
      out.flush();
      if (!out.good()) throw io_error("failed writing " + config.out_path);
    } else {
      report << text;
    }
    return 0;
  } catch (const usage_error& e) {
    diag << "error: " << e.what() << '\n';
    return 2;
  } catch (const io_error& e) {
    diag << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    diag << "error: " << e.what() << '\n';
    return 2;
  } catch (const solver_error& e) {
    diag << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return 1;
  }
}

int main_entry(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const help_requested& help) {
    std::cout << help.what();
    return 0;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return run(config, std::cout, std::cerr);
}

}  // namespace carleman::cli

#include "carleman/matrixnorm.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "carleman/constants.hpp"
#include "carleman/kahan.hpp"

namespace carleman {
namespace {

struct RunResult {
  double best = 0.0;
  int steps = 0;
  bool converged = false;
  int warnings = 0;
};

double pnorm(const std::vector<double>& v, double p) {
  double scale = 0.0;
  for (double t : v) scale = std::max(scale, t);
  if (scale == 0.0) return 0.0;
  KahanSum sum;
  for (double t : v) sum.add(std::pow(t / scale, p));
  return scale * std::pow(sum.value(), 1.0 / p);
}

}  // namespace

TermSequence apply_mean_matrix(const WeightProfile& prof, const TermSequence& x) {
  if (x.size() == 0) throw std::invalid_argument("mean matrix: empty input");
  if (prof.size() < x.size())
    throw std::invalid_argument("mean matrix: profile shorter than input");
  std::vector<double> y(x.size());
  KahanSum prefix;
  for (std::size_t k = 1; k <= x.size(); ++k) {
    prefix.add(prof.lambda(k) * x.values[k - 1]);
    y[k - 1] = prefix.value() / prof.partial_sums[k - 1];
  }
  return TermSequence{std::move(y)};
}

std::optional<double> cartlidge_bound(const WeightProfile& prof, double p,
                                      std::size_t horizon) {
  if (!std::isfinite(p) || !(p > 1.0))
    throw std::invalid_argument("norm bound: p must be finite and > 1");
  const double L = cartlidge_L(prof, horizon).sup_value;
  if (!(L < p)) return std::nullopt;
  return p / (p - L);
}

NormEstimate estimate_norm_lp(const WeightProfile& prof, std::size_t n, double p,
                              int max_iters, double tol, bool extra_starts) {
  if (n == 0) throw std::invalid_argument("norm: n must be >= 1");
  if (prof.size() < n) throw std::invalid_argument("norm: profile shorter than n");
  if (!std::isfinite(p) || !(p > 1.0))
    throw std::invalid_argument("norm: p must be finite and > 1");
  if (max_iters < 1) throw std::invalid_argument("norm: iteration budget must be >= 1");
  if (!std::isfinite(tol) || !(tol > 0.0))
    throw std::invalid_argument("norm: tol must be finite and > 0");

  NormEstimate estimate;
  estimate.p = p;
  estimate.n = n;
  const bool all_positive = std::all_of(prof.weights.values.begin(),
                                        prof.weights.values.end(),
                                        [](double v) { return v > 0.0; });
  if (prof.size() >= 2 && all_positive) {
    estimate.cartlidge_upper = cartlidge_bound(prof, p, prof.size() - 1);
  }
  if (n == 1) {
    estimate.lower_bound = 1.0;
    estimate.converged = true;
    return estimate;
  }

  const auto apply_transpose = [&](const std::vector<double>& z) {
    // (A^T z)_k = lambda_k * sum_{j >= k} z_j / Lambda_j, one suffix pass.
    std::vector<double> w(n);
    KahanSum tail;
    for (std::size_t k = n; k >= 1; --k) {
      tail.add(z[k - 1] / prof.partial_sums[k - 1]);
      w[k - 1] = prof.lambda(k) * tail.value();
    }
    return w;
  };

  const auto run = [&](std::vector<double> x) {
    RunResult result;
    const double x0 = pnorm(x, p);
    if (x0 == 0.0) return result;
    for (double& v : x) v /= x0;
    double previous = -1.0;
    for (int iter = 0; iter < max_iters; ++iter) {
      const std::vector<double> y = apply_mean_matrix(prof, TermSequence{x}).values;
      const double ratio = pnorm(y, p);
      ++result.steps;
      result.best = std::max(result.best, ratio);
      if (previous >= 0.0) {
        if (ratio < previous - 1e-12) ++result.warnings;
        if (std::abs(ratio - previous) < tol) {
          result.converged = true;
          return result;
        }
      }
      previous = ratio;
      std::vector<double> z(n);
      for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(y[i], p - 1.0);
      std::vector<double> w = apply_transpose(z);
      for (std::size_t i = 0; i < n; ++i) w[i] = std::pow(w[i], 1.0 / (p - 1.0));
      const double scale = pnorm(w, p);
      if (scale == 0.0) return result;
      for (double& v : w) v /= scale;
      x = std::move(w);
    }
    return result;
  };

  std::vector<std::vector<double>> starts;
  starts.emplace_back(n, 1.0);
  if (extra_starts) {
    std::vector<double> basis(n, 0.0);
    basis[0] = 1.0;
    starts.push_back(std::move(basis));
    std::mt19937_64 rng(0x5EED);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> random(n);
    for (double& v : random) v = unit(rng);
    starts.push_back(std::move(random));
  }

  bool all_converged = true;
  for (auto& start : starts) {
    const RunResult result = run(std::move(start));
    estimate.lower_bound = std::max(estimate.lower_bound, result.best);
    estimate.iterations += result.steps;
    estimate.ratio_warnings += result.warnings;
    all_converged = all_converged && result.converged;
  }
  estimate.converged = all_converged;
  // The ratio achieved at e_1 (unit p-norm) is a free floor; its first output
  // entry is exactly 1, so the estimate never dips below 1 by rounding.
  std::vector<double> basis(n, 0.0);
  basis[0] = 1.0;
  const double basis_ratio = pnorm(apply_mean_matrix(prof, TermSequence{basis}).values, p);
  estimate.lower_bound = std::max(estimate.lower_bound, basis_ratio);
  return estimate;
}

}  // namespace carleman

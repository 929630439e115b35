#include "carleman/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "carleman/constants.hpp"
#include "carleman/geometric.hpp"
#include "carleman/kahan.hpp"

namespace carleman {
namespace {

void require_section(const WeightProfile& prof, std::size_t n) {
  if (n == 0) throw std::invalid_argument("section: n must be >= 1");
  if (prof.size() < n) throw std::invalid_argument("section: profile shorter than n");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(prof.weights.values[i] > 0.0))
      throw std::invalid_argument("section: weights must be strictly positive through n");
  }
}

}  // namespace

OmegaTrace omega_sequence(double mu, const WeightProfile& prof, std::size_t n) {
  require_section(prof, n);
  if (!std::isfinite(mu) || !(mu > 0.0))
    throw std::invalid_argument("omega: mu must be finite and > 0");
  OmegaTrace trace;
  trace.mu = mu;
  trace.log_omegas.reserve(n);
  const double log_mu = std::log(mu);
  trace.log_omegas.push_back(-log_mu);
  for (std::size_t k = 1; k < n; ++k) {
    const double r_k = prof.ratios[k - 1];
    const double gap = r_k - std::exp(trace.log_omegas[k - 1]);
    if (!(gap > 0.0)) {
      trace.diverged_at = k;
      return trace;
    }
    const double lambda_next = prof.lambda(k + 1);
    const double log_step = trace.log_omegas[k - 1] -
                            std::log(lambda_next / prof.partial_sums[k - 1]) - std::log(gap);
    const double log_next =
        (prof.partial_sums[k - 1] * log_step - lambda_next * log_mu) / prof.partial_sums[k];
    if (!std::isfinite(log_next)) {
      trace.diverged_at = k + 1;
      return trace;
    }
    trace.log_omegas.push_back(log_next);
  }
  return trace;
}

TermSequence extremal_sequence(const OmegaTrace& trace, const WeightProfile& prof) {
  if (!trace.completed() || trace.length() == 0)
    throw std::invalid_argument("extremal sequence: trace must be completed and non-empty");
  const std::size_t n = trace.length();
  require_section(prof, n);
  std::vector<double> log_a(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) {
    const double gap = prof.ratios[k - 1] - std::exp(trace.log_omegas[k - 1]);
    if (!(gap > 0.0)) throw solver_error("extremal sequence: nonpositive ratio gap");
    log_a[k] = log_a[k - 1] + std::log(prof.lambda(k + 1) / prof.partial_sums[k - 1]) +
               std::log(gap);
  }
  const double shift = *std::max_element(log_a.begin(), log_a.end());
  KahanSum total;
  for (double v : log_a) total.add(std::exp(v - shift));
  const double log_norm = shift + std::log(total.value());
  std::vector<double> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = std::exp(log_a[i] - log_norm);
  return TermSequence{std::move(a)};
}

double kkt_residual(const TermSequence& a, double mu, const WeightProfile& prof) {
  const std::size_t n = a.size();
  require_section(prof, n);
  if (!std::isfinite(mu) || !(mu > 0.0))
    throw std::invalid_argument("kkt: mu must be finite and > 0");
  for (double v : a.values) {
    if (!(v > 0.0)) throw std::invalid_argument("kkt: terms must be strictly positive");
  }
  const GeometricMeans gm = geometric_means(a, prof);
  // tails[k-1] = sum_{j >= k} G_j / Lambda_j by reverse accumulation.
  std::vector<double> tails(n);
  KahanSum tail;
  for (std::size_t j = n; j >= 1; --j) {
    tail.add(gm.values[j - 1] / prof.partial_sums[j - 1]);
    tails[j - 1] = tail.value();
  }
  double worst = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double stationarity = mu * a.values[k - 1] - prof.lambda(k) * tails[k - 1];
    worst = std::max(worst, std::abs(stationarity) / (mu * a.values[k - 1]));
  }
  return worst;
}

ExtremalSolution solve_mu_n(const WeightProfile& prof, std::size_t n, double tol) {
  require_section(prof, n);
  if (!std::isfinite(tol) || !(tol > 0.0))
    throw std::invalid_argument("solve: tol must be finite and > 0");

  ExtremalSolution sol;
  sol.n = n;
  if (n == 1) {
    sol.mu_n = 1.0;
    sol.a = TermSequence{{1.0}};
    sol.bisection_iterations = 0;
    sol.kkt_residual = kkt_residual(sol.a, sol.mu_n, prof);
    return sol;
  }

  const double target = std::log(prof.ratios[n - 1]);

  // Upper end of the bracket: any mu above e^M puts the whole trace strictly
  // inside the ratio gaps, so Omega_N lands below r_N. M is taken at horizon
  // n when the profile reaches index n+1, and at the largest horizon it does
  // reach otherwise. Overflowing guesses fall back to doubling from 2, with
  // the cap 2^60 flagging a malformed profile.
  double hi = 2.0;
  std::size_t bracket_horizon = std::min(n, prof.size() - 1);
  if (bracket_horizon == n && !(prof.weights.values[n] > 0.0)) bracket_horizon = n - 1;
  const double guess =
      std::exp(gao_M(prof, bracket_horizon, /*window=*/1).sup_value) * (1.0 + 1e-6);
  if (std::isfinite(guess) && guess > hi) hi = guess;
  OmegaTrace hi_trace = omega_sequence(hi, prof, n);
  while (!hi_trace.completed() || hi_trace.log_omegas.back() > target) {
    if (hi >= 0x1p60) throw solver_error("solve: failed to bracket the section constant");
    hi *= 2.0;
    hi_trace = omega_sequence(hi, prof, n);
  }

  // ln Omega_N decreases strictly in mu; diverged traces sit on the small-mu
  // side. Bisect until the bracket is relatively tighter than tol.
  double lo = 1.0;
  int iterations = 0;
  while (hi - lo > tol * hi) {
    if (++iterations > 200) throw solver_error("solve: bisection did not converge");
    const double mid = 0.5 * (lo + hi);
    const OmegaTrace mid_trace = omega_sequence(mid, prof, n);
    if (!mid_trace.completed() || mid_trace.log_omegas.back() > target) {
      lo = mid;
    } else {
      hi = mid;
      hi_trace = mid_trace;
    }
  }

  double mu = 0.5 * (lo + hi);
  OmegaTrace trace = omega_sequence(mu, prof, n);
  if (!trace.completed()) {
    mu = hi;
    trace = hi_trace;
  }

  sol.mu_n = mu;
  sol.a = extremal_sequence(trace, prof);
  sol.omegas.resize(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) sol.omegas[i] = std::exp(trace.log_omegas[i]);
  sol.kkt_residual = kkt_residual(sol.a, mu, prof);
  sol.bisection_iterations = iterations;
  return sol;
}

}  // namespace carleman

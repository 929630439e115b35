#pragma once

#include <cstddef>
#include <optional>

#include "carleman/sequences.hpp"

namespace carleman {

// Raised when an iterative solve cannot finish (bracket failure, iteration
// cap reached).
struct solver_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation of the recursion
//
//   Omega_1(mu) = 1/mu,
//   Omega_{k+1}^{Lambda_{k+1}} =
//       mu^{-lambda_{k+1}} * (Omega_k / ((lambda_{k+1}/Lambda_k) * (r_k - Omega_k)))^{Lambda_k},
//
// carried entirely in log space. log_omegas[k-1] = ln Omega_k. The recursion
// step from k requires Omega_k < r_k; the first k <= N-1 where that fails is
// reported in diverged_at and the trace stops there.
struct OmegaTrace {
  double mu = 0.0;
  std::vector<double> log_omegas;
  std::optional<std::size_t> diverged_at;  // 1-based k with Omega_k >= r_k

  bool completed() const { return !diverged_at.has_value(); }
  std::size_t length() const { return log_omegas.size(); }
};

OmegaTrace omega_sequence(double mu, const WeightProfile& profile, std::size_t n);

// Maximizer of sum G_n on the simplex sum a_n = 1, with its value mu_N.
// omegas holds omega_k = Omega_k(mu_N) for k <= N-1; the terminal Omega_N
// is pinned to r_N by the root condition and not repeated here.
struct ExtremalSolution {
  std::size_t n = 0;
  double mu_n = 0.0;
  TermSequence a;
  std::vector<double> omegas;
  double kkt_residual = 0.0;
  int bisection_iterations = 0;
};

// Solves Omega_N(mu) = r_N by bisection on mu. ln Omega_N is strictly
// decreasing in mu on its domain; diverged traces count as Omega_N = +inf.
// The initial bracket is [1, e^M * (1 + 1e-6)] with M taken at the largest
// horizon the profile supports (doubling from 2 when no horizon exists).
ExtremalSolution solve_mu_n(const WeightProfile& profile, std::size_t n,
                            double tol = 1e-12);

// Rebuilds the maximizing sequence from a completed trace:
// a_{k+1}/a_k = (lambda_{k+1}/Lambda_k) * (r_k - Omega_k), normalized to
// sum 1 in log space. All entries strictly positive.
TermSequence extremal_sequence(const OmegaTrace& trace, const WeightProfile& profile);

// Max over k of |mu a_k - lambda_k sum_{n>=k} G_n/Lambda_n| / (mu a_k),
// the relative residual of the stationarity system. Tail sums are formed
// once by reverse accumulation. Requires all a_k > 0.
double kkt_residual(const TermSequence& a, double mu, const WeightProfile& profile);

}  // namespace carleman

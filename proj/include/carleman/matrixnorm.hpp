#pragma once

#include <cstddef>
#include <optional>

#include "carleman/sequences.hpp"

namespace carleman {

// y_n = (sum_{k<=n} lambda_k x_k) / Lambda_n, a single prefix pass. The
// matrix itself is never materialized.
TermSequence apply_mean_matrix(const WeightProfile& profile, const TermSequence& x);

// p/(p - L) with L = cartlidge_L(profile, horizon).sup_value, when L < p.
// Requires p > 1.
std::optional<double> cartlidge_bound(const WeightProfile& profile, double p,
                                      std::size_t horizon);

// Estimate of the l^p norm of the N x N truncation. lower_bound is an
// achieved ratio ||Ax||_p / ||x||_p, hence a floor for the truncated norm
// (and for the full operator norm). cartlidge_upper is the p/(p-L) bound at
// the profile's full horizon, when defined.
struct NormEstimate {
  double p = 0.0;
  std::size_t n = 0;
  double lower_bound = 0.0;
  std::optional<double> cartlidge_upper;
  int iterations = 0;
  bool converged = false;
  int ratio_warnings = 0;  // steps where the ratio dropped by more than 1e-12
};

// Nonlinear power method on non-negative vectors:
//   x <- normalize(Phi_q(A^T Phi_p(A x))),  Phi_s(v)_i = v_i^{s-1},  q = p/(p-1),
// starting from the uniform vector of unit p-norm. The achieved ratio is
// recorded each step; convergence means successive ratios differ by < tol.
// With extra_starts the iteration is repeated from e_1 and from a seeded
// random vector and the best ratio wins.
NormEstimate estimate_norm_lp(const WeightProfile& profile, std::size_t n, double p,
                              int max_iters, double tol, bool extra_starts = false);

}  // namespace carleman

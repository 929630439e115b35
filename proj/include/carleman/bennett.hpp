#pragma once

#include <cstddef>
#include <vector>

#include "carleman/sequences.hpp"

namespace carleman {

// Sandwich bounds for sum_{i<=n} i^r, 0 < r <= 1:
//   n(n+1)^r/(r+1)  <=  sum  <=  (r/(r+1)) n^r (n+1)^r / ((n+1)^r - n^r).
// exact is the direct compensated sum. r = 0 is rejected: the upper bound
// degenerates to 0/0 there.
struct Lemma0Bounds {
  double lower = 0.0;
  double upper = 0.0;
  double exact = 0.0;
};

Lemma0Bounds lemma0_bounds(std::size_t n, double r);

// The power-weight condition at one index n:
//   lhs = r_n ln(r_{n+1}/r_n),  r_n = S_n / n^a,  S_n = sum_{k<=n} k^a,
// checked against 1/(a+1). S_n is a running compensated sum over k^a, the
// same operation sequence the profile ratios use, so lhs here and the
// supremum terms computed from a power profile agree bit for bit.
struct Condition31 {
  double lhs = 0.0;
  double bound = 0.0;
  bool holds = false;  // lhs <= bound + 1e-12
};

Condition31 check_condition_31(double alpha, std::size_t n);

// lhs values for n = 1..n_max in one sweep (one running power sum).
std::vector<double> condition31_terms(double alpha, std::size_t n_max);

// The three section functions:
//   f(x) = 1 - (1+x)^{-a} + (a^2+a-1) ln(1+x) + (1-2a) ln(1 + (1+a)x)
//   g(x) = 1 + (a+1)x - (a + (1-a^2)x)(1+x)^a
//   h(x) = 1 - a + a x - a(1-a^2)x^2
// f is the antiderivative of a g(x) / ((1+x)^{1+a} (1 + (1+a)x)) vanishing
// at x = 0, so f > 0 on (0,1] follows from g >= h > 0 there.
// Domain: 0 < alpha < 1, 0 <= x <= 1.
struct SectionFunctions {
  double f = 0.0;
  double g = 0.0;
  double h = 0.0;
};

SectionFunctions fgh(double alpha, double x);

// One scan row per alpha: the worst condition value over n <= n_max against
// the bound 1/(alpha+1), and the minimum of f over x = j/x_samples.
struct BennettRow {
  double alpha = 0.0;
  std::size_t n_max = 0;
  double max_term = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // bound - max_term
  double f_min = 0.0;
};

// Rows come back ordered by alpha ascending. Along the way the scan checks
// g >= h, (1+x)^alpha <= 1 + alpha x, and h > 0 at every sampled x and
// throws solver_error if any of them fails numerically. Rows are independent
// and are computed on `jobs` threads when jobs > 1; the output does not
// depend on the thread count.
std::vector<BennettRow> bennett_scan(std::vector<double> alpha_grid,
                                     std::size_t n_max, std::size_t x_samples,
                                     int jobs = 1);

}  // namespace carleman

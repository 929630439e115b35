#pragma once

#include "carleman/sequences.hpp"

namespace carleman {

// Weighted geometric means G_n = prod_{k<=n} a_k^{lambda_k / Lambda_n},
// kept in log space. log_values[n] may be -inf (some a_k == 0 with
// lambda_k > 0); values[n] = exp(log_values[n]) with exp(-inf) == 0.
struct GeometricMeans {
  std::vector<double> log_values;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
};

// ln G_n = (sum_{k<=n} lambda_k ln a_k) / Lambda_n, accumulated with
// compensation. Terms with lambda_k == 0 contribute nothing regardless of
// a_k; any a_k == 0 with lambda_k > 0 pins every later mean to zero.
GeometricMeans geometric_means(const TermSequence& a, const WeightProfile& profile);

// Result of checking sum G_n <= C * sum a_n.
struct VerifyReport {
  double lhs;         // sum of G_n
  double rhs_factor;  // sum of a_n
  double constant;    // C
  double ratio;       // lhs / (C * rhs_factor); NaN when rhs_factor == 0
  bool holds;         // lhs <= C * rhs_factor
};

VerifyReport verify_inequality(const TermSequence& a, const WeightProfile& profile,
                               double constant);

}  // namespace carleman

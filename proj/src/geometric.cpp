#include "carleman/geometric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "carleman/kahan.hpp"

namespace carleman {

GeometricMeans geometric_means(const TermSequence& terms, const WeightProfile& prof) {
  if (terms.size() == 0) throw std::invalid_argument("geometric means: empty terms");
  if (prof.size() < terms.size())
    throw std::invalid_argument("geometric means: profile shorter than terms");
  const std::size_t n = terms.size();
  GeometricMeans gm;
  gm.log_values.resize(n);
  gm.values.resize(n);
  // Running weighted log sum: sum_{k<=n} lambda_k * ln a_k.  A zero term with
  // positive weight pins every mean from that index on to zero; entries with
  // lambda_k == 0 contribute nothing regardless of a_k.
  KahanSum weighted_log;
  bool pinned = false;
  for (std::size_t i = 0; i < n; ++i) {
    const double lambda = prof.lambda(i + 1);
    const double a = terms.values[i];
    if (lambda > 0.0) {
      if (a > 0.0) {
        weighted_log.add(lambda * std::log(a));
      } else {
        pinned = true;
      }
    }
    if (pinned) {
      gm.log_values[i] = -std::numeric_limits<double>::infinity();
      gm.values[i] = 0.0;
    } else {
      gm.log_values[i] = weighted_log.value() / prof.partial_sums[i];
      gm.values[i] = std::exp(gm.log_values[i]);
    }
  }
  return gm;
}

VerifyReport verify_inequality(const TermSequence& terms, const WeightProfile& prof,
                               double constant) {
  if (!(constant > 0.0) || !std::isfinite(constant))
    throw std::invalid_argument("verify: constant must be finite and > 0");
  const GeometricMeans gm = geometric_means(terms, prof);
  KahanSum lhs_sum;
  for (double v : gm.values) lhs_sum.add(v);
  KahanSum rhs_sum;
  for (double v : terms.values) rhs_sum.add(v);
  VerifyReport report;
  report.lhs = lhs_sum.value();
  report.rhs_factor = rhs_sum.value();
  report.constant = constant;
  report.ratio = report.rhs_factor > 0.0
                     ? report.lhs / (constant * report.rhs_factor)
                     : std::numeric_limits<double>::quiet_NaN();
  report.holds = report.lhs <= constant * report.rhs_factor;
  return report;
}

}  // namespace carleman

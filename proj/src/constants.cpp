#include "carleman/constants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace carleman {
namespace {

void require_ratios(const WeightProfile& prof, std::size_t horizon) {
  if (horizon == 0) throw std::invalid_argument("constants: horizon must be >= 1");
  if (prof.size() < horizon + 1)
    throw std::invalid_argument("constants: profile must cover horizon + 1 weights");
  for (std::size_t i = 0; i <= horizon; ++i) {
    if (!(prof.weights.values[i] > 0.0))
      throw std::invalid_argument("constants: weights must be strictly positive through horizon + 1");
  }
}

bool tail_strictly_increasing(const std::vector<double>& terms, std::size_t window) {
  if (terms.size() < 2) return true;
  const std::size_t start =
      (window == 0 || window >= terms.size()) ? 0 : terms.size() - window;
  for (std::size_t i = start + 1; i < terms.size(); ++i) {
    if (terms[i] <= terms[i - 1]) return false;
  }
  return true;
}

std::optional<double> generator_limit(const WeightGenerator& gen) {
  switch (gen.kind) {
    case WeightKind::power:
      return 1.0 / (1.0 + gen.alpha);
    case WeightKind::constant:
      return 1.0;
    case WeightKind::explicit_list:
      return std::nullopt;
  }
  return std::nullopt;
}

ConstantReport finish(std::vector<double> terms, std::size_t horizon, std::size_t window,
                      const WeightGenerator& gen) {
  ConstantReport report;
  report.horizon = horizon;
  report.sup_value = *std::max_element(terms.begin(), terms.end());
  report.arg_max = 1 + static_cast<std::size_t>(std::distance(
                           terms.begin(),
                           std::find(terms.begin(), terms.end(), report.sup_value)));
  report.tail_monotone_increasing = tail_strictly_increasing(terms, window);
  report.closed_form_limit = generator_limit(gen);
  report.terms = std::move(terms);
  return report;
}

}  // namespace

ConstantReport cartlidge_L(const WeightProfile& prof, std::size_t horizon, std::size_t window) {
  require_ratios(prof, horizon);
  std::vector<double> terms(horizon);
  for (std::size_t n = 1; n <= horizon; ++n) {
    terms[n - 1] = prof.ratios[n] - prof.ratios[n - 1];
  }
  return finish(std::move(terms), horizon, window, prof.weights.generator);
}

ConstantReport gao_M(const WeightProfile& prof, std::size_t horizon, std::size_t window) {
  require_ratios(prof, horizon);
  std::vector<double> terms(horizon);
  for (std::size_t n = 1; n <= horizon; ++n) {
    const double rn = prof.ratios[n - 1];
    const double rn1 = prof.ratios[n];
    terms[n - 1] = rn * std::log(rn1 / rn);
  }
  return finish(std::move(terms), horizon, window, prof.weights.generator);
}

double carleman_constant(const ConstantReport& report) { return std::exp(report.sup_value); }

ConstantComparison compare_M_L(const WeightProfile& prof, std::size_t horizon,
                               std::size_t window) {
  ConstantComparison cmp{gao_M(prof, horizon, window), cartlidge_L(prof, horizon, window),
                         false};
  // ln(1+x) <= x makes the domination exact in real arithmetic; the absolute
  // slack only absorbs rounding of near-equal suprema.
  cmp.m_le_l = cmp.m.sup_value <= cmp.l.sup_value + 1e-12;
  return cmp;
}

}  // namespace carleman

#pragma once

#include <cstddef>
#include <optional>

#include "carleman/sequences.hpp"

namespace carleman {

inline constexpr std::size_t kDefaultTailWindow = 64;

// Finite-horizon estimate of a supremum over n. terms[i] is the sup argument
// at n = i + 1; arg_max is the 1-based index of the first maximizing term.
// tail_monotone_increasing reports whether the last `window` terms were still
// strictly increasing, i.e. whether sup_value is likely only a lower estimate
// of the true supremum.
struct ConstantReport {
  std::size_t horizon = 0;
  std::vector<double> terms;
  double sup_value = 0.0;
  std::size_t arg_max = 0;
  bool tail_monotone_increasing = false;
  std::optional<double> closed_form_limit;  // 1/(alpha+1) for power weights
};

// L = sup_n (r_{n+1} - r_n) over n <= horizon. Requires lambda_n > 0 for all
// n <= horizon + 1 and a profile of length >= horizon + 1.
ConstantReport cartlidge_L(const WeightProfile& profile, std::size_t horizon,
                           std::size_t window = kDefaultTailWindow);

// M = sup_n r_n ln(r_{n+1} / r_n) over n <= horizon. Preconditions as above.
ConstantReport gao_M(const WeightProfile& profile, std::size_t horizon,
                     std::size_t window = kDefaultTailWindow);

// e^M, the inequality constant implied by a finite M.
double carleman_constant(const ConstantReport& m_report);

struct ConstantComparison {
  ConstantReport m;
  ConstantReport l;
  bool m_le_l = false;  // M.sup_value <= L.sup_value + 1e-12
};

ConstantComparison compare_M_L(const WeightProfile& profile, std::size_t horizon,
                               std::size_t window = kDefaultTailWindow);

}  // namespace carleman

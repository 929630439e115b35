#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace carleman {

// Raised on unreadable or malformed input files.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class WeightKind { power, constant, explicit_list };

// Origin tag of a weight sequence. `alpha` is meaningful for power only.
struct WeightGenerator {
  WeightKind kind = WeightKind::explicit_list;
  double alpha = 0.0;
};

// Weights (lambda_1, ..., lambda_N): all finite and >= 0, lambda_1 > 0.
struct WeightSequence {
  std::vector<double> values;
  WeightGenerator generator;

  std::size_t size() const { return values.size(); }
};

// lambda_k = k^alpha for k = 1..n.
WeightSequence make_power_weights(double alpha, std::size_t n);

// lambda_k = 1 for k = 1..n.
WeightSequence make_constant_weights(std::size_t n);

// Takes the values as given; validates the weight invariants.
WeightSequence make_explicit_weights(std::vector<double> values);

// Throws std::invalid_argument if the weight invariants do not hold.
void validate(const WeightSequence& weights);

// Weights plus running sums Lambda_n and ratios r_n = Lambda_n / lambda_n.
// ratios[i] is NaN at indices where lambda_{i+1} == 0; r_1 is always 1.
struct WeightProfile {
  WeightSequence weights;
  std::vector<double> partial_sums;
  std::vector<double> ratios;

  std::size_t size() const { return weights.size(); }
  // 1-based accessor matching the subscript convention: lambda(k) = lambda_k.
  double lambda(std::size_t k) const { return weights.values[k - 1]; }
};

// Accumulates the partial sums left to right (compensated) and derives the
// ratios. Validates the weights first.
WeightProfile profile(WeightSequence weights);

// Terms (a_1, ..., a_N): all finite and >= 0.
struct TermSequence {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
};

TermSequence make_terms(std::vector<double> values);

// Shared line format: one non-negative decimal per line; blank lines and
// lines starting with '#' are ignored. When `positive_first` is set the
// first value must be > 0 (weights files).
std::vector<double> read_value_file(const std::string& path, bool positive_first);

WeightSequence read_weights_file(const std::string& path);
TermSequence read_terms_file(const std::string& path);

}  // namespace carleman

#include "carleman/sequences.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>

#include "carleman/kahan.hpp"

namespace carleman {

WeightSequence make_power_weights(double alpha, std::size_t n) {
  if (n == 0) throw std::invalid_argument("power weights: n must be >= 1");
  if (!std::isfinite(alpha)) throw std::invalid_argument("power weights: alpha must be finite");
  WeightSequence w;
  w.generator = {WeightKind::power, alpha};
  w.values.resize(n);
  for (std::size_t k = 1; k <= n; ++k) {
    w.values[k - 1] = std::pow(static_cast<double>(k), alpha);
  }
  validate(w);
  return w;
}

WeightSequence make_constant_weights(std::size_t n) {
  if (n == 0) throw std::invalid_argument("constant weights: n must be >= 1");
  WeightSequence w;
  w.generator = {WeightKind::constant, 0.0};
  w.values.assign(n, 1.0);
  return w;
}

WeightSequence make_explicit_weights(std::vector<double> values) {
  WeightSequence w;
  w.generator = {WeightKind::explicit_list, 0.0};
  w.values = std::move(values);
  validate(w);
  return w;
}

void validate(const WeightSequence& weights) {
  if (weights.values.empty()) throw std::invalid_argument("weights: length must be >= 1");
  if (!(weights.values.front() > 0.0))
    throw std::invalid_argument("weights: first weight must be > 0");
  for (double v : weights.values) {
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("weights: values must be finite and >= 0");
  }
}

WeightProfile profile(WeightSequence weights) {
  validate(weights);
  WeightProfile p;
  p.partial_sums.resize(weights.size());
  p.ratios.resize(weights.size());
  KahanSum running;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    running.add(weights.values[i]);
    p.partial_sums[i] = running.value();
    p.ratios[i] = weights.values[i] > 0.0
                      ? p.partial_sums[i] / weights.values[i]
                      : std::numeric_limits<double>::quiet_NaN();
  }
  p.weights = std::move(weights);
  return p;
}

TermSequence make_terms(std::vector<double> values) {
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("terms: values must be finite and >= 0");
  }
  return TermSequence{std::move(values)};
}

std::vector<double> read_value_file(const std::string& path, bool positive_first) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos || line[begin] == '#') continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(begin, end - begin + 1);
    char* parsed_end = nullptr;
    const double v = std::strtod(token.c_str(), &parsed_end);
    if (parsed_end != token.c_str() + token.size() || !std::isfinite(v) || v < 0.0) {
      throw io_error(path + ":" + std::to_string(lineno) +
                     ": expected one non-negative decimal per line");
    }
    if (values.empty() && positive_first && !(v > 0.0)) {
      throw io_error(path + ":" + std::to_string(lineno) + ": first value must be > 0");
    }
    values.push_back(v);
  }
  if (values.empty()) throw io_error(path + ": no values found");
  return values;
}

WeightSequence read_weights_file(const std::string& path) {
  return make_explicit_weights(read_value_file(path, /*positive_first=*/true));
}

TermSequence read_terms_file(const std::string& path) {
  return make_terms(read_value_file(path, /*positive_first=*/false));
}

}  // namespace carleman

#pragma once

namespace carleman {

// Compensated (Kahan) accumulator: the rounding error of each addition is
// captured and fed back into the next one. Drop-in for a plain running sum.
struct KahanSum {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double value) {
    const double y = value - compensation;
    const double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
  }

  double value() const { return sum; }
};

}  // namespace carleman

#include "carleman/bennett.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "carleman/extremal.hpp"
#include "carleman/kahan.hpp"

namespace carleman {
namespace {

void require_alpha(double alpha, bool allow_one) {
  const bool ok = std::isfinite(alpha) && alpha > 0.0 &&
                  (allow_one ? alpha <= 1.0 : alpha < 1.0);
  if (!ok) {
    throw std::invalid_argument(allow_one ? "alpha must lie in (0, 1]"
                                          : "alpha must lie in (0, 1)");
  }
}

}  // namespace

Lemma0Bounds lemma0_bounds(std::size_t n, double r) {
  if (n == 0) throw std::invalid_argument("power sum bounds: n must be >= 1");
  require_alpha(r, /*allow_one=*/true);
  const double nd = static_cast<double>(n);
  const double pow_n = std::pow(nd, r);
  const double pow_n1 = std::pow(nd + 1.0, r);
  Lemma0Bounds bounds;
  bounds.lower = nd * pow_n1 / (r + 1.0);
  bounds.upper = (r / (r + 1.0)) * pow_n * pow_n1 / (pow_n1 - pow_n);
  KahanSum sum;
  for (std::size_t i = 1; i <= n; ++i) sum.add(std::pow(static_cast<double>(i), r));
  bounds.exact = sum.value();
  return bounds;
}

std::vector<double> condition31_terms(double alpha, std::size_t n_max) {
  require_alpha(alpha, /*allow_one=*/false);
  if (n_max == 0) throw std::invalid_argument("condition terms: n_max must be >= 1");
  std::vector<double> terms(n_max);
  KahanSum power_sum;
  double pow_k = std::pow(1.0, alpha);
  power_sum.add(pow_k);
  double r_prev = power_sum.value() / pow_k;
  for (std::size_t n = 1; n <= n_max; ++n) {
    pow_k = std::pow(static_cast<double>(n + 1), alpha);
    power_sum.add(pow_k);
    const double r_next = power_sum.value() / pow_k;
    terms[n - 1] = r_prev * std::log(r_next / r_prev);
    r_prev = r_next;
  }
  return terms;
}

Condition31 check_condition_31(double alpha, std::size_t n) {
  if (n == 0) throw std::invalid_argument("condition: n must be >= 1");
  Condition31 result;
  result.lhs = condition31_terms(alpha, n).back();
  result.bound = 1.0 / (1.0 + alpha);
  result.holds = result.lhs <= result.bound + 1e-12;
  return result;
}

SectionFunctions fgh(double alpha, double x) {
  require_alpha(alpha, /*allow_one=*/false);
  if (!std::isfinite(x) || x < 0.0 || x > 1.0)
    throw std::invalid_argument("section functions: x must lie in [0, 1]");
  SectionFunctions value;
  value.f = 1.0 - std::pow(1.0 + x, -alpha) +
            (alpha * alpha + alpha - 1.0) * std::log1p(x) +
            (1.0 - 2.0 * alpha) * std::log1p((1.0 + alpha) * x);
  value.g = 1.0 + (alpha + 1.0) * x -
            (alpha + (1.0 - alpha * alpha) * x) * std::pow(1.0 + x, alpha);
  value.h = 1.0 - alpha + alpha * x - alpha * (1.0 - alpha * alpha) * x * x;
  return value;
}

std::vector<BennettRow> bennett_scan(std::vector<double> alpha_grid, std::size_t n_max,
                                     std::size_t x_samples, int jobs) {
  if (alpha_grid.empty()) throw std::invalid_argument("scan: empty alpha grid");
  for (double alpha : alpha_grid) require_alpha(alpha, /*allow_one=*/false);
  if (n_max == 0) throw std::invalid_argument("scan: n_max must be >= 1");
  if (x_samples == 0) throw std::invalid_argument("scan: x_samples must be >= 1");
  if (jobs < 1) throw std::invalid_argument("scan: jobs must be >= 1");
  std::sort(alpha_grid.begin(), alpha_grid.end());

  const auto scan_row = [n_max, x_samples](double alpha) {
    BennettRow row;
    row.alpha = alpha;
    row.n_max = n_max;
    const std::vector<double> terms = condition31_terms(alpha, n_max);
    row.max_term = *std::max_element(terms.begin(), terms.end());
    row.bound = 1.0 / (1.0 + alpha);
    row.margin = row.bound - row.max_term;
    double f_min = std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j <= x_samples; ++j) {
      const double x = static_cast<double>(j) / static_cast<double>(x_samples);
      const SectionFunctions v = fgh(alpha, x);
      f_min = std::min(f_min, v.f);
      if (v.g < v.h - 1e-12) throw solver_error("scan: g dropped below h");
      if (std::pow(1.0 + x, alpha) > 1.0 + alpha * x + 1e-12)
        throw solver_error("scan: Bernoulli bound failed");
      if (!(v.h > 0.0)) throw solver_error("scan: h is not positive");
    }
    row.f_min = f_min;
    return row;
  };

  std::vector<BennettRow> rows(alpha_grid.size());
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(jobs), alpha_grid.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < alpha_grid.size(); ++i) rows[i] = scan_row(alpha_grid[i]);
    return rows;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= alpha_grid.size()) return;
      try {
        rows[i] = scan_row(alpha_grid[i]);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace carleman

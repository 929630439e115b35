#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "carleman/constants.hpp"
#include "carleman/extremal.hpp"
#include "carleman/geometric.hpp"
#include "carleman/sequences.hpp"

using namespace carleman;

namespace {

WeightProfile random_profile(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> weight(0.05, 3.0);
  std::vector<double> values(n);
  for (double& v : values) v = weight(rng);
  return profile(make_explicit_weights(values));
}

}  // namespace

TEST_CASE("recursion step worked by hand") {
  const WeightProfile prof = profile(make_constant_weights(2));
  const OmegaTrace trace = omega_sequence(2.0, prof, 2);
  REQUIRE(trace.completed());
  REQUIRE(trace.length() == 2);
  CHECK(trace.log_omegas[0] == -std::log(2.0));
  CHECK(std::exp(trace.log_omegas[1]) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
}

TEST_CASE("mu = 1 sits on the domain boundary") {
  const WeightProfile prof = profile(make_constant_weights(4));
  const OmegaTrace one_step = omega_sequence(1.0, prof, 1);
  CHECK(one_step.completed());
  CHECK(one_step.log_omegas[0] == 0.0);
  for (std::size_t n : {2, 3, 4}) {
    const OmegaTrace trace = omega_sequence(1.0, prof, n);
    REQUIRE_FALSE(trace.completed());
    CHECK(trace.diverged_at.value() == 1);
  }
}

TEST_CASE("trace values shrink when mu grows") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 30; ++round) {
    const WeightProfile prof = random_profile(rng, 20);
    const double big = std::exp(gao_M(prof, 19).sup_value);
    const double mu1 = 1.01 * big;
    const double mu2 = 1.30 * mu1;
    const OmegaTrace t1 = omega_sequence(mu1, prof, 20);
    const OmegaTrace t2 = omega_sequence(mu2, prof, 20);
    REQUIRE(t1.completed());
    REQUIRE(t2.completed());
    for (std::size_t k = 0; k < 20; ++k)
      CHECK(t1.log_omegas[k] >= t2.log_omegas[k]);
  }
}

TEST_CASE("comfortably large mu keeps the trace under r_k/r_{k+1}") {
  for (const WeightSequence& w :
       {make_constant_weights(101), make_power_weights(0.5, 101)}) {
    const WeightProfile prof = profile(w);
    const double mu = 1.01 * std::exp(gao_M(prof, 100).sup_value);
    const OmegaTrace trace = omega_sequence(mu, prof, 100);
    REQUIRE(trace.completed());
    for (std::size_t k = 1; k <= 99; ++k) {
      const double omega_k = std::exp(trace.log_omegas[k - 1]);
      CHECK(omega_k < prof.ratios[k - 1] / prof.ratios[k]);
    }
  }
}

TEST_CASE("single-term section is trivial") {
  const ExtremalSolution sol = solve_mu_n(profile(make_constant_weights(1)), 1);
  CHECK(sol.n == 1);
  CHECK(sol.mu_n == 1.0);
  CHECK(sol.a.values == std::vector<double>{1.0});
  CHECK(sol.omegas.empty());
  CHECK(sol.kkt_residual == 0.0);
  CHECK(sol.bisection_iterations == 0);
}

TEST_CASE("two-term section matches the closed form") {
  const WeightProfile prof = profile(make_constant_weights(3));
  const ExtremalSolution sol = solve_mu_n(prof, 2, 1e-12);
  const double s = std::sqrt(2.0);
  CHECK(sol.mu_n == doctest::Approx((1.0 + s) / 2.0).epsilon(1e-12));
  REQUIRE(sol.a.size() == 2);
  CHECK(sol.a.values[0] == doctest::Approx((2.0 + s) / 4.0).epsilon(1e-9));
  CHECK(sol.a.values[1] == doctest::Approx((2.0 - s) / 4.0).epsilon(1e-9));
  REQUIRE(sol.omegas.size() == 1);
  CHECK(sol.omegas[0] == doctest::Approx(2.0 * (s - 1.0)).epsilon(1e-9));
  CHECK(sol.a.values[0] + sol.a.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sol.kkt_residual <= 1e-9);
}

TEST_CASE("unit weights approach the classical constant from below") {
  const WeightProfile prof = profile(make_constant_weights(51));
  const ExtremalSolution fifty = solve_mu_n(prof, 50);
  const ExtremalSolution forty_nine = solve_mu_n(prof, 49);
  CHECK(fifty.mu_n < std::exp(1.0));
  CHECK(fifty.mu_n > forty_nine.mu_n);
  // The solved value is the attained maximum of the verifier's left side.
  const VerifyReport report = verify_inequality(fifty.a, prof, std::exp(1.0));
  CHECK(report.lhs == doctest::Approx(fifty.mu_n).epsilon(1e-10));
  CHECK(report.rhs_factor == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("section constants are non-decreasing in the section size") {
  std::mt19937_64 rng(47);
  const WeightProfile prof = random_profile(rng, 12);
  double previous = 1.0;
  for (std::size_t n = 2; n <= 12; ++n) {
    const ExtremalSolution sol = solve_mu_n(prof, n);
    CHECK(sol.mu_n >= previous - 1e-12);
    CHECK(sol.mu_n >= 1.0);
    CHECK(sol.kkt_residual <= 1e-8);
    double total = 0.0;
    for (double v : sol.a.values) {
      CHECK(v > 0.0);
      total += v;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sol.omegas.size() == n - 1);
    previous = sol.mu_n;
  }
}

TEST_CASE("solution is invariant under global weight scaling") {
  std::vector<double> values{0.7, 1.9, 0.4, 2.2, 1.3};
  std::vector<double> scaled = values;
  for (double& v : scaled) v *= 5.0;
  const ExtremalSolution a = solve_mu_n(profile(make_explicit_weights(values)), 5);
  const ExtremalSolution b = solve_mu_n(profile(make_explicit_weights(scaled)), 5);
  CHECK(b.mu_n == doctest::Approx(a.mu_n).epsilon(1e-11));
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(b.a.values[i] == doctest::Approx(a.a.values[i]).epsilon(1e-9));
}

TEST_CASE("reconstruction refuses a diverged trace") {
  const WeightProfile prof = profile(make_constant_weights(3));
  const OmegaTrace diverged = omega_sequence(1.0, prof, 3);
  REQUIRE_FALSE(diverged.completed());
  CHECK_THROWS_AS(extremal_sequence(diverged, prof), std::invalid_argument);
}

TEST_CASE("uniform is not stationary for three terms") {
  const WeightProfile prof = profile(make_constant_weights(3));
  const TermSequence uniform{{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}};
  CHECK(kkt_residual(uniform, 1.0, prof) > 0.1);
}

TEST_CASE("solver and recursion validate their inputs") {
  const WeightProfile prof = profile(make_constant_weights(4));
  CHECK_THROWS_AS(solve_mu_n(prof, 0), std::invalid_argument);
  CHECK_THROWS_AS(solve_mu_n(prof, 5), std::invalid_argument);
  CHECK_THROWS_AS(omega_sequence(0.0, prof, 2), std::invalid_argument);
  CHECK_THROWS_AS(omega_sequence(2.0, prof, 0), std::invalid_argument);
  CHECK_THROWS_AS(solve_mu_n(prof, 4, 0.0), std::invalid_argument);
  const WeightProfile zeroed = profile(make_explicit_weights({1.0, 0.0, 1.0}));
  CHECK_THROWS_AS(solve_mu_n(zeroed, 3), std::invalid_argument);
  CHECK_THROWS_AS(kkt_residual(TermSequence{{0.5, 0.0}}, 1.0,
                               profile(make_constant_weights(2))),
                  std::invalid_argument);
}

TEST_CASE("an unreachable tolerance trips the iteration cap") {
  const WeightProfile prof = profile(make_constant_weights(7));
  CHECK_THROWS_AS(solve_mu_n(prof, 6, 1e-30), solver_error);
}

#include <doctest.h>

#include <cmath>
#include <vector>

#include "carleman/bennett.hpp"
#include "carleman/constants.hpp"
#include "carleman/extremal.hpp"
#include "carleman/sequences.hpp"

using namespace carleman;

TEST_CASE("power-sum bounds collapse to n(n+1)/2 at the right endpoint") {
  for (std::size_t n : {1, 2, 3, 10, 17, 50}) {
    const Lemma0Bounds b = lemma0_bounds(n, 1.0);
    const double triangle = 0.5 * static_cast<double>(n) * static_cast<double>(n + 1);
    CHECK(b.lower == triangle);
    CHECK(b.exact == triangle);
    CHECK(b.upper == triangle);
  }
}

TEST_CASE("power-sum bounds at n = 2, r = 1/2 by hand") {
  const Lemma0Bounds b = lemma0_bounds(2, 0.5);
  CHECK(b.lower == doctest::Approx(2.0 * std::sqrt(3.0) / 1.5).epsilon(1e-15));
  CHECK(b.exact == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-15));
  const double s2 = std::sqrt(2.0);
  const double s3 = std::sqrt(3.0);
  CHECK(b.upper ==
        doctest::Approx((1.0 / 3.0) * s2 * s3 / (s3 - s2)).epsilon(1e-14));
}

TEST_CASE("the sandwich holds across the grid") {
  for (std::size_t n = 1; n <= 1000; n = (n < 10 ? n + 1 : n * 3)) {
    for (int i = 1; i <= 10; ++i) {
      const double r = 0.1 * i;
      const Lemma0Bounds b = lemma0_bounds(n, r);
      CHECK(b.lower <= b.exact * (1.0 + 1e-13));
      CHECK(b.exact <= b.upper * (1.0 + 1e-13));
    }
  }
}

TEST_CASE("power-sum bounds reject a bad exponent or index") {
  CHECK_THROWS_AS(lemma0_bounds(0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(lemma0_bounds(3, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(lemma0_bounds(3, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(lemma0_bounds(3, -0.5), std::invalid_argument);
}

TEST_CASE("condition value at n = 1 in closed form") {
  const Condition31 c = check_condition_31(0.5, 1);
  const double s2 = std::sqrt(2.0);
  CHECK(c.lhs == doctest::Approx(std::log((1.0 + s2) / s2)).epsilon(1e-14));
  CHECK(c.bound == 2.0 / 3.0);
  CHECK(c.holds);
}

TEST_CASE("condition holds with visible margin deep into the range") {
  const Condition31 c = check_condition_31(0.5, 10000);
  CHECK(c.holds);
  CHECK(c.bound - c.lhs > 0.0);
}

TEST_CASE("condition terms equal the supremum terms bit for bit") {
  for (double alpha : {0.01, 0.37, 0.99}) {
    const std::vector<double> direct = condition31_terms(alpha, 2000);
    const ConstantReport m = gao_M(profile(make_power_weights(alpha, 2001)), 2000);
    REQUIRE(direct.size() == m.terms.size());
    for (std::size_t i = 0; i < direct.size(); ++i) CHECK(direct[i] == m.terms[i]);
    CHECK(check_condition_31(alpha, 2000).lhs == direct.back());
  }
}

TEST_CASE("condition rejects exponents outside the open interval") {
  CHECK_THROWS_AS(check_condition_31(0.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(check_condition_31(1.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(check_condition_31(-0.2, 5), std::invalid_argument);
  CHECK_THROWS_AS(check_condition_31(0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(condition31_terms(1.2, 5), std::invalid_argument);
}

TEST_CASE("section functions at the endpoints") {
  for (double alpha : {0.1, 0.5, 0.9}) {
    const SectionFunctions at_zero = fgh(alpha, 0.0);
    CHECK(at_zero.f == 0.0);
    CHECK(at_zero.g == 1.0 - alpha);
    CHECK(at_zero.h == 1.0 - alpha);
    const SectionFunctions at_one = fgh(alpha, 1.0);
    CHECK(at_one.h ==
          doctest::Approx(1.0 - alpha * (1.0 - alpha * alpha)).epsilon(1e-14));
    CHECK(at_one.f > 0.0);
    CHECK(at_one.g >= at_one.h);
    CHECK(at_one.h > 0.0);
  }
}

TEST_CASE("section chain g >= h > 0 and f > 0 on a fine sample") {
  for (double alpha : {0.05, 0.5, 0.95}) {
    for (int j = 1; j <= 200; ++j) {
      const double x = j / 200.0;
      const SectionFunctions v = fgh(alpha, x);
      CHECK(v.g >= v.h - 1e-15);
      CHECK(v.h > 0.0);
      CHECK(v.f > 0.0);
    }
  }
}

TEST_CASE("the displayed derivative matches finite differences") {
  for (double alpha : {0.2, 0.6}) {
    for (double x : {0.1, 0.35, 0.8}) {
      const double step = 1e-5;
      const double fp_numeric =
          (fgh(alpha, x + step).f - fgh(alpha, x - step).f) / (2.0 * step);
      const SectionFunctions v = fgh(alpha, x);
      const double fp_closed =
          alpha * v.g /
          (std::pow(1.0 + x, 1.0 + alpha) * (1.0 + (1.0 + alpha) * x));
      CHECK(fp_closed == doctest::Approx(fp_numeric).epsilon(1e-7));
    }
  }
}

TEST_CASE("section functions validate their domain") {
  CHECK_THROWS_AS(fgh(0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(fgh(1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(fgh(0.5, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(fgh(0.5, 1.1), std::invalid_argument);
}

TEST_CASE("a single-exponent scan row") {
  const std::vector<BennettRow> rows = bennett_scan({0.5}, 500, 400);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].alpha == 0.5);
  CHECK(rows[0].n_max == 500);
  CHECK(rows[0].bound == 2.0 / 3.0);
  CHECK(rows[0].margin > 0.0);
  CHECK(rows[0].margin == rows[0].bound - rows[0].max_term);
  CHECK(rows[0].f_min >= 0.0);
}

TEST_CASE("scan sorts its grid") {
  const std::vector<BennettRow> rows = bennett_scan({0.7, 0.2, 0.5}, 50, 50);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].alpha == 0.2);
  CHECK(rows[1].alpha == 0.5);
  CHECK(rows[2].alpha == 0.7);
}

TEST_CASE("scan output does not depend on the thread count") {
  std::vector<double> grid;
  for (int i = 1; i <= 19; ++i) grid.push_back(0.05 * i);
  const std::vector<BennettRow> serial = bennett_scan(grid, 500, 500, 1);
  const std::vector<BennettRow> parallel = bennett_scan(grid, 500, 500, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].alpha == parallel[i].alpha);
    CHECK(serial[i].max_term == parallel[i].max_term);
    CHECK(serial[i].bound == parallel[i].bound);
    CHECK(serial[i].margin == parallel[i].margin);
    CHECK(serial[i].f_min == parallel[i].f_min);
  }
}

TEST_CASE("scan validates its configuration") {
  CHECK_THROWS_AS(bennett_scan({}, 10, 10), std::invalid_argument);
  CHECK_THROWS_AS(bennett_scan({0.5, 1.0}, 10, 10), std::invalid_argument);
  CHECK_THROWS_AS(bennett_scan({0.5}, 0, 10), std::invalid_argument);
  CHECK_THROWS_AS(bennett_scan({0.5}, 10, 0), std::invalid_argument);
  CHECK_THROWS_AS(bennett_scan({0.5}, 10, 10, 0), std::invalid_argument);
}

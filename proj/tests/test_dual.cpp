#include <cmath>

#include "doctest.h"
#include "superint/dual.hpp"

using superint::Dual;

TEST_CASE("arithmetic carries derivatives") {
  const Dual x(3.0, 1.0);  // seed d/dx
  const Dual c(2.0);

  SUBCASE("sum and product rules") {
    const Dual s = x + c;
    CHECK(s.val == 5.0);
    CHECK(s.dot == 1.0);
    const Dual m = x * x;
    CHECK(m.val == 9.0);
    CHECK(m.dot == 6.0);
  }

  SUBCASE("quotient rule") {
    const Dual q = c / x;  // d/dx (2/x) = -2/x^2
    CHECK(q.val == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(q.dot == doctest::Approx(-2.0 / 9.0).epsilon(1e-15));
  }

  SUBCASE("negation and subtraction") {
    const Dual n = -x;
    CHECK(n.val == -3.0);
    CHECK(n.dot == -1.0);
    const Dual d = c - x;
    CHECK(d.dot == -1.0);
  }
}

TEST_CASE("elementary functions") {
  const Dual x(0.7, 1.0);
  const Dual r = sqrt(x);
  CHECK(r.val == doctest::Approx(std::sqrt(0.7)).epsilon(1e-15));
  CHECK(r.dot == doctest::Approx(0.5 / std::sqrt(0.7)).epsilon(1e-15));
  const Dual s = sin(x);
  CHECK(s.dot == doctest::Approx(std::cos(0.7)).epsilon(1e-15));
  const Dual c = cos(x);
  CHECK(c.dot == doctest::Approx(-std::sin(0.7)).epsilon(1e-15));
}

TEST_CASE("composite expression matches hand derivative") {
  // f(x) = sin(x^2) / sqrt(x), f'(x) = 2x cos(x^2)/sqrt(x) - sin(x^2)/(2 x^{3/2})
  const double v = 1.3;
  const Dual x(v, 1.0);
  const Dual f = sin(x * x) / sqrt(x);
  const double expect =
      2.0 * v * std::cos(v * v) / std::sqrt(v) - std::sin(v * v) / (2.0 * std::pow(v, 1.5));
  CHECK(f.dot == doctest::Approx(expect).epsilon(1e-14));
}

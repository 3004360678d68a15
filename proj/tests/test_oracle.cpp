#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "monomarkov/bounds.hpp"
#include "monomarkov/errors.hpp"
#include "monomarkov/extremal.hpp"
#include "monomarkov/oracle.hpp"

using namespace monomarkov;

TEST_CASE("grid_upper_bound examples") {
  const std::optional<double> two = grid_upper_bound(2, 0.0, 64);
  REQUIRE(two.has_value());
  CHECK(*two >= 0.5 - 1e-12);
  CHECK(*two <= 0.6);

  for (double x0 : {-1.0, -0.2, 0.0, 0.9}) {
    const std::optional<double> one = grid_upper_bound(1, x0, 64);
    REQUIRE(one.has_value());
    CHECK(*one == doctest::Approx(0.5).epsilon(1e-12));
  }

  const std::optional<double> three = grid_upper_bound(3, 0.0, 256);
  REQUIRE(three.has_value());
  CHECK(*three >= 0.75 - 1e-12);
  CHECK(*three <= 0.75 + 5e-3);
}

TEST_CASE("grid_upper_bound rejects coarse grids") {
  CHECK_THROWS_AS(grid_upper_bound(5, 0.0, 35), ArgumentError);
  CHECK_NOTHROW(grid_upper_bound(5, 0.0, 36));
  CHECK_THROWS_AS(grid_upper_bound(0, 0.0, 64), ArgumentError);
  CHECK_THROWS_AS(grid_upper_bound(2, 1.5, 64), DomainError);
}

TEST_CASE("density_lp layout") {
  const LPProblem p = density_lp(4, 0.3, 64);
  CHECK(p.objective.size() == 4);
  REQUIRE(p.equalities.size() == 1);
  CHECK(p.equalities[0].b == 1.0);
  // 64 grid points already contain +-1; x0 = 0.3 is added
  CHECK(p.inequalities.size() == 65);
  CHECK(density_lp(4, 0.0, 65).inequalities.size() == 65);
}

TEST_CASE("relaxation is non-increasing over grid doublings") {
  for (int n : {2, 3, 5, 8}) {
    for (double x0 : {-0.9, 0.0, 0.5, 1.0}) {
      double prev = std::numeric_limits<double>::infinity();
      for (int g = 4 * n + 16; g <= 1024; g *= 2) {
        const std::optional<double> v = grid_upper_bound(n, x0, g);
        if (!v) continue;
        CAPTURE(n);
        CAPTURE(x0);
        CAPTURE(g);
        CHECK(*v <= prev + 1e-9);
        CHECK(*v >= pointwise_bound(n, x0).bound / 2.0 - 1e-9);
        prev = *v;
      }
    }
  }
}

TEST_CASE("LP optimum scales with the normalisation") {
  for (int n : {3, 6}) {
    const std::optional<double> unit = grid_upper_bound(n, 0.4, 256);
    const std::optional<double> seven = grid_upper_bound(n, 0.4, 256, 7.0);
    REQUIRE(unit.has_value());
    REQUIRE(seven.has_value());
    CHECK(*seven == doctest::Approx(7.0 * *unit).epsilon(1e-9));
  }
}

TEST_CASE("extremal density is a feasible point") {
  for (int n = 1; n <= 8; ++n) {
    for (double x0 : {-0.9, 0.0, 0.5}) {
      const ExtremalPoly e = build_pointwise_extremal(n, x0);
      const ChebPoly d = (1.0 / definite_integral(e.deriv)) * e.deriv;
      CHECK(std::abs(definite_integral(d) - 1.0) <= 1e-12);
      double lo = 0.0;
      for (int i = 0; i < 4096; ++i) lo = std::min(lo, eval(d, -1.0 + 2.0 * i / 4095.0));
      CHECK(lo >= -1e-11);
    }
  }
}

TEST_CASE("sandwich examples") {
  const SandwichResult two = sandwich(2, 0.0);
  CHECK(two.theory == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(two.lower == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(two.upper <= 0.505);
  CHECK(two.status == SandwichStatus::Closed);

  const SandwichResult three = sandwich(3, 0.0);
  CHECK(three.theory == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(three.gap < 1e-3);

  const SandwichResult four = sandwich(4, 1.0);
  CHECK(four.theory == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(four.lower <= four.theory + 1e-9);
  CHECK(four.theory <= four.upper + 1e-9);
  CHECK(four.status == SandwichStatus::Closed);
}

TEST_CASE("sandwiches close for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (double x0 : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
      CAPTURE(n);
      CAPTURE(x0);
      const SandwichResult s = sandwich(n, x0);
      CHECK(s.status == SandwichStatus::Closed);
      CHECK(s.gap < kSandwichGap);
      CHECK(s.gap >= -1e-9);
      CHECK(s.lower <= s.theory + 1e-9);
      CHECK(s.theory <= s.upper + 1e-9);
    }
  }
}

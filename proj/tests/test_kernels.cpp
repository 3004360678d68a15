#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "monomarkov/errors.hpp"
#include "monomarkov/kernels.hpp"

using namespace monomarkov;

TEST_CASE("cd_kernel examples") {
  const OrthoBasis leg = build_basis(WeightId::Legendre, 3);
  CHECK(cd_kernel(leg, 1, 1.0, 1.0) == doctest::Approx(2.0));
  CHECK(cd_kernel(leg, 1, 0.0, 0.0) == doctest::Approx(0.5));
  for (WeightId w : kAllWeights) {
    const OrthoBasis basis = build_basis(w, 2);
    CHECK(cd_kernel(basis, 0, -0.3, 0.8) == doctest::Approx(1.0 / weight_mass(w)));
  }
  CHECK_THROWS_AS(cd_kernel(leg, 4, 0.1, 0.1), ArgumentError);
  CHECK_THROWS_AS(cd_kernel_quotient(leg, 3, 0.1, 0.2), ArgumentError);
}

TEST_CASE("quotient and direct Christoffel-Darboux forms agree") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (WeightId w : kAllWeights) {
    const OrthoBasis basis = build_basis(w, 21);
    double worst = 0.0;
    for (int k = 0; k <= 20; ++k) {
      for (int trial = 0; trial < 100; ++trial) {
        const double x = unit(rng);
        double y = unit(rng);
        while (std::abs(x - y) <= 1e-3) y = unit(rng);
        const double direct = cd_kernel_direct(basis, k, x, y);
        const double quotient = cd_kernel_quotient(basis, k, x, y);
        // normalised by the Cauchy-Schwarz bound sqrt(K(x,x) K(y,y))
        const double scale =
            std::sqrt(cd_kernel_direct(basis, k, x, x) * cd_kernel_direct(basis, k, y, y));
        worst = std::max(worst, std::abs(direct - quotient) / scale);
      }
    }
    CAPTURE(weight_name(w));
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("cd_kernel switches to the direct sum near the diagonal") {
  const OrthoBasis basis = build_basis(WeightId::Plus, 12);
  const double x = 0.37;
  CHECK(cd_kernel(basis, 10, x, x + 1e-9) == cd_kernel_direct(basis, 10, x, x + 1e-9));
  CHECK(cd_kernel(basis, 10, x, x + 0.1) == cd_kernel_quotient(basis, 10, x, x + 0.1));
}

TEST_CASE("reproducing property") {
  for (WeightId w : kAllWeights) {
    const OrthoBasis basis = build_basis(w, 20);
    for (int k : {0, 3, 10, 20}) {
      const QuadRule rule = gauss_legendre(k + 3);
      for (double x0 : {-1.0, -0.3, 0.3, 0.77, 1.0}) {
        const double diag = cd_kernel_direct(basis, k, x0, x0);
        const double integral = integrate(rule, [&](double t) {
          const double v = cd_kernel_direct(basis, k, t, x0);
          return evaluate_weight(w, t) * v * v;
        });
        CHECK(std::abs(integral - diag) < 1e-10 * diag);
      }
    }
  }
}

TEST_CASE("kernel_S examples") {
  CHECK(kernel_S(0, 0.5) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(kernel_S(0, -1.0) == 0.0);
  CHECK(kernel_S(1, 1.0) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("kernel_H examples") {
  CHECK(kernel_H(0, 0.3) == 0.0);
  CHECK(kernel_H(1, 0.0) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(kernel_H(1, 0.5) == doctest::Approx(0.75 * 0.75).epsilon(1e-14));
  CHECK(kernel_H(1, 1.0) == 0.0);
  CHECK(kernel_H(1, -1.0) == 0.0);
}

TEST_CASE("kernel_F examples") {
  for (double x : {-1.0, 0.0, 0.6}) CHECK(kernel_F(0, x) == doctest::Approx(0.5));
  CHECK(kernel_F(1, 0.0) == doctest::Approx(0.5));
  CHECK(kernel_F(1, 1.0) == doctest::Approx(2.0));
}

TEST_CASE("kernel functions are weighted CD diagonals") {
  for (int k = 0; k <= 12; ++k) {
    const OrthoBasis plus = build_basis(WeightId::Plus, k);
    const OrthoBasis leg = build_basis(WeightId::Legendre, k);
    for (double x : chebyshev_grid(31)) {
      CHECK(std::abs(kernel_S(k, x) - (1.0 + x) * cd_kernel(plus, k, x, x)) < 1e-13 * std::max(1.0, kernel_S(k, x)));
      CHECK(std::abs(kernel_F(k, x) - cd_kernel(leg, k, x, x)) < 1e-13 * std::max(1.0, kernel_F(k, x)));
      if (k >= 1) {
        const OrthoBasis bridge = build_basis(WeightId::Bridge, k - 1);
        CHECK(std::abs(kernel_H(k, x) - (1.0 - x * x) * cd_kernel(bridge, k - 1, x, x)) <
              1e-13 * std::max(1.0, kernel_H(k, x)));
      }
    }
  }
}

TEST_CASE("kernels grow with k and are nonnegative") {
  for (int k = 0; k < 15; ++k) {
    for (double x : chebyshev_grid(201)) {
      CHECK(kernel_S(k + 1, x) >= kernel_S(k, x));
      CHECK(kernel_F(k + 1, x) >= kernel_F(k, x));
      CHECK(kernel_H(k + 1, x) >= kernel_H(k, x));
      CHECK(kernel_H(k, x) >= 0.0);
    }
  }
}

TEST_CASE("MINUS diagonal is S reflected") {
  for (int k : {0, 4, 11}) {
    for (double x : chebyshev_grid(51)) {
      CHECK(std::abs(weighted_diagonal(WeightId::Minus, k, x).value - kernel_S(k, -x)) <
            1e-12 * std::max(1.0, kernel_S(k, -x)));
    }
  }
}

TEST_CASE("g_extremal example and degree") {
  const OrthoBasis plus = build_basis(WeightId::Plus, 1);
  const ChebPoly g = g_extremal(plus, 0, 0.0);
  CHECK(g.degree() == 0);
  CHECK(g.coeff(0) == doctest::Approx(1.5 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(g.coeff(0) == doctest::Approx(1.06066).epsilon(1e-5));

  for (WeightId w : kAllWeights) {
    const OrthoBasis basis = build_basis(w, 16);
    for (int k = 0; k <= 15; ++k) {
      CHECK(g_extremal(basis, k, 0.3).degree() == k);
    }
  }
  CHECK_THROWS_AS(g_extremal(build_basis(WeightId::Plus, 2), 2, 0.0), ArgumentError);
}

TEST_CASE("g_extremal equals the scaled kernel polynomial") {
  for (WeightId w : kAllWeights) {
    const OrthoBasis basis = build_basis(w, 16);
    for (int k : {0, 1, 6, 15}) {
      for (double x0 : {-1.0, -0.62, 0.0, 0.3, 0.999, 1.0}) {
        const ChebPoly g = g_extremal(basis, k, x0);
        const ChebPoly kern = cd_kernel_poly(basis, k, x0);
        const double scale = 1.0 / basis.b(k + 1);  // gamma_{k+1} / gamma_k
        for (double t : chebyshev_grid(23)) {
          CHECK(std::abs(eval(g, t) - scale * eval(kern, t)) < 1e-10 * std::max(1.0, std::abs(eval(g, t))));
        }
        const double confluent = scale * cd_kernel_direct(basis, k, x0, x0);
        CHECK(std::abs(eval(g, x0) - confluent) < 1e-9 * confluent);
      }
    }
  }
}

TEST_CASE("weighted norm of g_extremal") {
  const double x0 = 0.3;
  for (WeightId w : kAllWeights) {
    const OrthoBasis basis = build_basis(w, 12);
    for (int k : {0, 2, 7, 11}) {
      const ChebPoly g = g_extremal(basis, k, x0);
      const QuadRule rule = gauss_legendre(k + 3);
      const double integral = integrate(rule, [&](double t) {
        const double v = eval(g, t);
        return evaluate_weight(w, t) * v * v;
      });
      const double ratio = 1.0 / basis.b(k + 1);
      const double expected = ratio * ratio * cd_kernel_direct(basis, k, x0, x0);
      CHECK(std::abs(integral - expected) < 1e-9 * expected);
    }
  }
}

TEST_CASE("S(P, x0) of w g^2 does not depend on the constant c") {
  const WeightId w = WeightId::Legendre;
  const OrthoBasis basis = build_basis(w, 8);
  const double x0 = -0.41;
  const ChebPoly g = g_extremal(basis, 7, x0);
  auto ratio = [&](double c) {
    const ChebPoly cg = c * g;
    const ChebPoly density = mul(weight_poly(w), mul(cg, cg));
    return eval(density, x0) / definite_integral(density);
  };
  const double base = ratio(1.0);
  CHECK(ratio(-3.0) == doctest::Approx(base).epsilon(1e-12));
  CHECK(ratio(1e-3) == doctest::Approx(base).epsilon(1e-12));
  CHECK(base == doctest::Approx(kernel_F(7, x0)).epsilon(1e-11));
}

TEST_CASE("divide_linear leaves no remainder on exact multiples") {
  const ChebPoly q({0.3, -1.0, 0.25, 2.0});
  const double x0 = -0.7;
  const ChebPoly p = mul(ChebPoly({-x0, 1.0}), q);
  const ChebDivision div = divide_linear(p, x0);
  CHECK(std::abs(div.remainder) < 1e-14);
  for (int j = 0; j <= 3; ++j) CHECK(div.quotient.coeff(j) == doctest::Approx(q.coeff(j)).epsilon(1e-13));
  CHECK(divide_linear(ChebPoly({2.0, 1.0}), 0.5).remainder == doctest::Approx(2.5));
}

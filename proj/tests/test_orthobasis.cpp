#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "monomarkov/errors.hpp"
#include "monomarkov/orthobasis.hpp"

using namespace monomarkov;

TEST_CASE("weights are nonnegative and carry the right mass") {
  const QuadRule rule = gauss_legendre(5);
  for (WeightId w : kAllWeights) {
    for (double x : chebyshev_grid(101)) CHECK(evaluate_weight(w, x) >= 0.0);
    CHECK(integrate(rule, [&](double x) { return evaluate_weight(w, x); }) ==
          doctest::Approx(weight_mass(w)).epsilon(1e-14));
    for (double x : {-1.0, -0.4, 0.9}) CHECK(eval(weight_poly(w), x) == doctest::Approx(evaluate_weight(w, x)));
  }
  CHECK(jacobi_symbol(WeightId::Plus) == "J^(0,1)");
  CHECK(jacobi_symbol(WeightId::Minus) == "J^(1,0)");
}

// Hand Gram-Schmidt values.
TEST_CASE("build_basis first members") {
  const std::vector<double> leg = eval_basis(build_basis(WeightId::Legendre, 1), 0.6);
  CHECK(leg[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(leg[1] == doctest::Approx(std::sqrt(1.5) * 0.6).epsilon(1e-14));

  const std::vector<double> plus = eval_basis(build_basis(WeightId::Plus, 1), 0.6);
  CHECK(plus[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(plus[1] == doctest::Approx(1.5 * (0.6 - 1.0 / 3.0)).epsilon(1e-14));

  CHECK(eval_basis(build_basis(WeightId::Bridge, 0), 0.2)[0] ==
        doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("build_basis rejects negative degree") {
  CHECK_THROWS_AS(build_basis(WeightId::Plus, -1), ArgumentError);
}

TEST_CASE("orthonormality residual below 1e-12 for k <= 25") {
  for (WeightId w : kAllWeights) {
    for (int k : {0, 1, 5, 25}) {
      CAPTURE(weight_name(w));
      CAPTURE(k);
      CHECK(orthonormality_residual(build_basis(w, k)) < 1e-12);
    }
  }
}

TEST_CASE("closed-form and Stieltjes recurrences agree") {
  for (WeightId w : kAllWeights) {
    CAPTURE(weight_name(w));
    CHECK(recurrence_route_discrepancy(w, 40) < 1e-12);
    const OrthoBasis moment = build_basis(w, 25, RecurrenceRoute::Stieltjes);
    CHECK(orthonormality_residual(moment) < 1e-12);
  }
}

TEST_CASE("recurrence invariants: b_l > 0 and gamma ratio") {
  for (WeightId w : kAllWeights) {
    const OrthoBasis basis = build_basis(w, 30);
    for (int l = 1; l <= 30; ++l) {
      CHECK(basis.b(l) > 0.0);
      CHECK(basis.leading_coefficient(l - 1) / basis.leading_coefficient(l) ==
            doctest::Approx(basis.b(l)).epsilon(1e-12));
    }
  }
}

TEST_CASE("endpoint laws") {
  const std::vector<double> plus = eval_basis(build_basis(WeightId::Plus, 40), 1.0);
  const std::vector<double> leg = eval_basis(build_basis(WeightId::Legendre, 40), 1.0);
  for (int l = 0; l <= 40; ++l) {
    const auto li = static_cast<std::size_t>(l);
    CHECK(std::abs(plus[li] - std::sqrt((l + 1.0) / 2.0)) < 1e-12);
    CHECK(std::abs(leg[li] * leg[li] - (2.0 * l + 1.0) / 2.0) < 1e-11);
  }
  CHECK(plus[0] == doctest::Approx(0.70711).epsilon(1e-5));
  CHECK(plus[1] == doctest::Approx(1.0));
  CHECK(plus[2] == doctest::Approx(1.22474).epsilon(1e-5));
}

TEST_CASE("MINUS is PLUS reflected") {
  const OrthoBasis plus = build_basis(WeightId::Plus, 20);
  const OrthoBasis minus = build_basis(WeightId::Minus, 20);
  for (double x : chebyshev_grid(41)) {
    const std::vector<double> pm = eval_basis(minus, x);
    const std::vector<double> pp = eval_basis(plus, -x);
    for (std::size_t l = 0; l < pm.size(); ++l) {
      CHECK(std::abs(pm[l] * pm[l] - pp[l] * pp[l]) < 1e-12 * std::max(1.0, pp[l] * pp[l]));
      // sign convention: positive leading coefficient gives p^MINUS_l(x) = (-1)^l p^PLUS_l(-x)
      CHECK(std::abs(pm[l] - (l % 2 == 0 ? 1.0 : -1.0) * pp[l]) < 1e-12 * std::max(1.0, std::abs(pp[l])));
    }
  }
}

TEST_CASE("eval_basis rejects points outside the interval") {
  CHECK_THROWS_AS(eval_basis(build_basis(WeightId::Legendre, 3), 1.01), DomainError);
}

TEST_CASE("basis_poly agrees with the recurrence and has leading coefficient gamma_l") {
  const ChebPoly plus1 = basis_poly(build_basis(WeightId::Plus, 3), 1);
  CHECK(plus1.coeff(0) == doctest::Approx(-0.5));
  CHECK(plus1.coeff(1) == doctest::Approx(1.5));
  const ChebPoly leg0 = basis_poly(build_basis(WeightId::Legendre, 2), 0);
  CHECK(leg0.degree() == 0);
  CHECK(leg0.coeff(0) == doctest::Approx(1.0 / std::sqrt(2.0)));

  for (WeightId w : kAllWeights) {
    const OrthoBasis basis = build_basis(w, 20);
    const std::vector<ChebPoly> polys = basis_polys(basis);
    for (int l = 0; l <= 20; ++l) {
      const ChebPoly& p = polys[static_cast<std::size_t>(l)];
      CHECK(p.degree() == l);
      CHECK(monomial_leading_coefficient(p) ==
            doctest::Approx(basis.leading_coefficient(l)).epsilon(1e-12));
    }
    for (int i = 0; i < 100; ++i) {
      const double x = -1.0 + 2.0 * i / 99.0;
      const std::vector<double> v = eval_basis(basis, x);
      for (int l = 0; l <= 20; ++l) {
        const auto li = static_cast<std::size_t>(l);
        CHECK(std::abs(eval(polys[li], x) - v[li]) < 1e-12 * std::max(1.0, std::abs(v[li])));
      }
    }
  }
  CHECK_THROWS_AS(basis_poly(build_basis(WeightId::Plus, 3), 4), ArgumentError);
}

TEST_CASE("gauss_legendre examples") {
  const QuadRule one = gauss_legendre(1);
  REQUIRE(one.nodes.size() == 1);
  CHECK(one.nodes[0] == 0.0);
  CHECK(one.weights[0] == doctest::Approx(2.0));

  const QuadRule two = gauss_legendre(2);
  CHECK(two.nodes[1] == doctest::Approx(0.5773502692).epsilon(1e-10));
  CHECK(two.nodes[0] == -two.nodes[1]);
  CHECK(two.weights[0] == doctest::Approx(1.0));
  CHECK(std::abs(integrate(two, [](double x) { return x * x * x; })) < 1e-15);
  CHECK(integrate(two, [](double x) { return x * x; }) == doctest::Approx(2.0 / 3.0));

  const QuadRule five = gauss_legendre(5);
  CHECK(std::abs(integrate(five, [](double x) { return std::pow(x, 8); }) - 2.0 / 9.0) < 1e-14);
  CHECK_THROWS_AS(gauss_legendre(0), ArgumentError);
}

TEST_CASE("gauss_legendre weights and exactness") {
  for (int m : {3, 10, 37, 100, 200}) {
    const QuadRule rule = gauss_legendre(m);
    double sum = 0.0;
    for (double w : rule.weights) {
      CHECK(w > 0.0);
      sum += w;
    }
    CHECK(std::abs(sum - 2.0) < 1e-13);
    CHECK(std::is_sorted(rule.nodes.begin(), rule.nodes.end()));
    CHECK(rule.nodes.front() > -1.0);
    CHECK(rule.nodes.back() < 1.0);
    if (m <= 37) {
      // exact on T_j for j <= 2m - 1
      for (int j = 0; j <= 2 * m - 1; ++j) {
        const double exact = j % 2 == 1 ? 0.0 : 2.0 / (1.0 - double(j) * j);
        const double q = integrate(rule, [&](double x) { return std::cos(j * std::acos(x)); });
        CHECK(std::abs(q - exact) < 1e-12);
      }
    }
  }
}

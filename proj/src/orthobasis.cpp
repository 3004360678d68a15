#include "monomarkov/orthobasis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "monomarkov/errors.hpp"

namespace monomarkov {

JacobiParams jacobi_params(WeightId w) {
  switch (w) {
    case WeightId::Legendre: return {0, 0};
    case WeightId::Plus: return {0, 1};
    case WeightId::Minus: return {1, 0};
    case WeightId::Bridge: return {1, 1};
  }
  throw ArgumentError("unknown weight");
}

std::string_view weight_name(WeightId w) {
  switch (w) {
    case WeightId::Legendre: return "LEGENDRE";
    case WeightId::Plus: return "PLUS";
    case WeightId::Minus: return "MINUS";
    case WeightId::Bridge: return "BRIDGE";
  }
  return "?";
}

std::string_view jacobi_symbol(WeightId w) {
  switch (w) {
    case WeightId::Legendre: return "J^(0,0)";
    case WeightId::Plus: return "J^(0,1)";
    case WeightId::Minus: return "J^(1,0)";
    case WeightId::Bridge: return "J^(1,1)";
  }
  return "?";
}

double evaluate_weight(WeightId w, double x) {
  switch (w) {
    case WeightId::Legendre: return 1.0;
    case WeightId::Plus: return 1.0 + x;
    case WeightId::Minus: return 1.0 - x;
    case WeightId::Bridge: return (1.0 - x) * (1.0 + x);
  }
  return 0.0;
}

ChebPoly weight_poly(WeightId w) {
  switch (w) {
    case WeightId::Legendre: return ChebPoly({1.0});
    case WeightId::Plus: return ChebPoly({1.0, 1.0});
    case WeightId::Minus: return ChebPoly({1.0, -1.0});
    case WeightId::Bridge: return ChebPoly({0.5, 0.0, -0.5});  // (1 - T_2) / 2
  }
  return {};
}

double weight_mass(WeightId w) { return w == WeightId::Bridge ? 4.0 / 3.0 : 2.0; }

namespace {

void closed_form_coefficients(WeightId weight, int k, std::vector<double>& a,
                              std::vector<double>& b) {
  const auto [alpha_i, beta_i] = jacobi_params(weight);
  const double al = alpha_i;
  const double be = beta_i;
  a.resize(static_cast<std::size_t>(k));
  b.resize(static_cast<std::size_t>(k));
  for (int n = 0; n < k; ++n) {
    const double s = 2.0 * n + al + be;
    a[static_cast<std::size_t>(n)] =
        n == 0 ? (be - al) / (al + be + 2.0) : (be * be - al * al) / (s * (s + 2.0));
  }
  for (int n = 1; n <= k; ++n) {
    const double s = 2.0 * n + al + be;
    const double num = 4.0 * n * (n + al) * (n + be) * (n + al + be);
    const double den = s * s * (s + 1.0) * (s - 1.0);
    b[static_cast<std::size_t>(n - 1)] = std::sqrt(num / den);
  }
}

void stieltjes_coefficients(WeightId weight, int k, std::vector<double>& a,
                            std::vector<double>& b) {
  // Every inner product needed has polynomial degree <= 2k + 2, so k + 3
  // nodes integrate them exactly.
  const QuadRule rule = gauss_legendre(k + 3);
  const std::size_t m = rule.nodes.size();
  std::vector<double> lambda(m);
  double mass = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    lambda[i] = rule.weights[i] * evaluate_weight(weight, rule.nodes[i]);
    mass += lambda[i];
  }
  std::vector<double> prev(m, 0.0);
  std::vector<double> cur(m, 1.0 / std::sqrt(mass));
  std::vector<double> next(m);
  a.assign(static_cast<std::size_t>(k), 0.0);
  b.assign(static_cast<std::size_t>(k), 0.0);
  double b_cur = 0.0;
  for (int l = 0; l < k; ++l) {
    double al = 0.0;
    for (std::size_t i = 0; i < m; ++i) al += lambda[i] * rule.nodes[i] * cur[i] * cur[i];
    double norm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      next[i] = (rule.nodes[i] - al) * cur[i] - b_cur * prev[i];
      norm2 += lambda[i] * next[i] * next[i];
    }
    const double bl = std::sqrt(norm2);
    for (std::size_t i = 0; i < m; ++i) next[i] /= bl;
    a[static_cast<std::size_t>(l)] = al;
    b[static_cast<std::size_t>(l)] = bl;
    b_cur = bl;
    std::swap(prev, cur);
    std::swap(cur, next);
  }
}

}  // namespace

OrthoBasis::OrthoBasis(WeightId weight, int max_degree, RecurrenceRoute route)
    : weight_(weight), max_degree_(max_degree), mu0_(weight_mass(weight)) {
  if (max_degree < 0) throw ArgumentError("build_basis: negative degree");
  if (route == RecurrenceRoute::ClosedForm) {
    closed_form_coefficients(weight, max_degree, a_, b_);
  } else {
    stieltjes_coefficients(weight, max_degree, a_, b_);
  }
  gamma_.resize(static_cast<std::size_t>(max_degree) + 1);
  gamma_[0] = 1.0 / std::sqrt(mu0_);
  for (int l = 1; l <= max_degree; ++l) {
    gamma_[static_cast<std::size_t>(l)] = gamma_[static_cast<std::size_t>(l - 1)] / b(l);
  }
}

OrthoBasis build_basis(WeightId weight, int k, RecurrenceRoute route) {
  return OrthoBasis(weight, k, route);
}

double recurrence_route_discrepancy(WeightId weight, int k) {
  const OrthoBasis closed(weight, k, RecurrenceRoute::ClosedForm);
  const OrthoBasis moment(weight, k, RecurrenceRoute::Stieltjes);
  double worst = 0.0;
  for (int l = 0; l < k; ++l) {
    worst = std::max(worst, std::abs(closed.a(l) - moment.a(l)));
    worst = std::max(worst, std::abs(closed.b(l + 1) - moment.b(l + 1)));
  }
  return worst;
}

std::vector<double> eval_basis(const OrthoBasis& basis, int upto, double x) {
  require_unit_interval(x, "eval_basis");
  if (upto < 0 || upto > basis.max_degree()) {
    throw ArgumentError("eval_basis: degree " + std::to_string(upto) + " not in basis");
  }
  std::vector<double> p(static_cast<std::size_t>(upto) + 1);
  p[0] = basis.leading_coefficient(0);
  double prev = 0.0;
  for (int l = 0; l < upto; ++l) {
    const double bl = l > 0 ? basis.b(l) : 0.0;
    const double next = ((x - basis.a(l)) * p[static_cast<std::size_t>(l)] - bl * prev) / basis.b(l + 1);
    prev = p[static_cast<std::size_t>(l)];
    p[static_cast<std::size_t>(l) + 1] = next;
  }
  return p;
}

std::vector<double> eval_basis(const OrthoBasis& basis, double x) {
  return eval_basis(basis, basis.max_degree(), x);
}

std::vector<ChebPoly> basis_polys(const OrthoBasis& basis) {
  const int k = basis.max_degree();
  std::vector<ChebPoly> p;
  p.reserve(static_cast<std::size_t>(k) + 1);
  p.push_back(ChebPoly::constant(basis.leading_coefficient(0)));
  for (int l = 0; l < k; ++l) {
    ChebPoly next = mul_x(p.back()) - basis.a(l) * p.back();
    if (l > 0) next -= basis.b(l) * p[static_cast<std::size_t>(l) - 1];
    next *= 1.0 / basis.b(l + 1);
    p.push_back(std::move(next));
  }
  return p;
}

ChebPoly basis_poly(const OrthoBasis& basis, int l) {
  if (l < 0 || l > basis.max_degree()) {
    throw ArgumentError("basis_poly: index " + std::to_string(l) + " out of range");
  }
  return basis_polys(build_basis(basis.weight(), l))[static_cast<std::size_t>(l)];
}

QuadRule gauss_legendre(int m) {
  if (m < 1) throw ArgumentError("gauss_legendre: order must be >= 1");
  QuadRule rule;
  rule.order = m;
  rule.nodes.assign(static_cast<std::size_t>(m), 0.0);
  rule.weights.assign(static_cast<std::size_t>(m), 0.0);
  const int half = (m + 1) / 2;
  for (int i = 1; i <= half; ++i) {
    double x = std::cos(std::numbers::pi * (i - 0.25) / (m + 0.5));
    double dp = 0.0;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= m; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      const double pm = m == 1 ? x : p1;
      const double pm1 = m == 1 ? 1.0 : p0;
      dp = m * (x * pm - pm1) / (x * x - 1.0);
      const double dx = pm / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw NumericError("gauss_legendre: Newton did not converge for order " + std::to_string(m));
    }
    // One more derivative at the converged node for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int j = 2; j <= m; ++j) {
      const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    dp = m == 1 ? 1.0 : m * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    if (2 * i - 1 == m) x = 0.0;  // exact middle node
    const auto lo = static_cast<std::size_t>(i - 1);
    const auto hi = static_cast<std::size_t>(m - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  return rule;
}

double orthonormality_residual(const OrthoBasis& basis) {
  const int k = basis.max_degree();
  const QuadRule rule = gauss_legendre(k + 3);
  std::vector<std::vector<double>> gram(static_cast<std::size_t>(k) + 1,
                                        std::vector<double>(static_cast<std::size_t>(k) + 1, 0.0));
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double t = rule.nodes[q];
    const double lam = rule.weights[q] * evaluate_weight(basis.weight(), t);
    const std::vector<double> p = eval_basis(basis, t);
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < p.size(); ++j) gram[i][j] += lam * p[i] * p[j];
    }
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < gram.size(); ++i) {
    for (std::size_t j = 0; j < gram.size(); ++j) {
      worst = std::max(worst, std::abs(gram[i][j] - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

}  // namespace monomarkov

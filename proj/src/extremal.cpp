#include "monomarkov/extremal.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "monomarkov/bounds.hpp"
#include "monomarkov/errors.hpp"
#include "monomarkov/kernels.hpp"

namespace monomarkov {

namespace {

/// Antiderivative from -1, shifted so that P(-1) = -P(1).
ChebPoly symmetric_antiderivative(const ChebPoly& density) {
  ChebPoly p = antiderivative(density, -1.0);
  return p - ChebPoly::constant(0.5 * eval(p, 1.0));
}

ChebPoly diagonal_density(WeightId weight, int deg) {
  const OrthoBasis basis = build_basis(weight, deg);
  ChebPoly sum;
  for (const ChebPoly& p : basis_polys(basis)) sum += mul(p, p);
  return mul(weight_poly(weight), sum);
}

}  // namespace

ExtremalPoly build_pointwise_extremal(int n, double x0) {
  if (n < 1) throw ArgumentError("build_pointwise_extremal: degree must be >= 1");
  if (!(std::abs(x0) <= 1.0)) throw ArgumentError("build_pointwise_extremal: |x0| > 1");
  const BoundReport rep = pointwise_bound(n, x0);
  const Branch branch = rep.winner == Branch::Tie ? rep.branch_a_tag : rep.winner;
  const WeightId weight = branch_weight(branch);
  const int deg = branch_kernel_degree(branch, rep.k);

  const OrthoBasis basis = build_basis(weight, deg);
  const ChebPoly kernel = cd_kernel_poly(basis, deg, x0);

  ExtremalPoly e;
  e.n = n;
  e.x0 = x0;
  e.branch = weight;
  e.name = "pointwise";
  e.deriv = mul(weight_poly(weight), mul(kernel, kernel));
  e.poly = symmetric_antiderivative(e.deriv);

  const double lhs = eval(e.deriv, x0);
  const double rhs = rep.bound * sup_norm(e.poly);
  if (!(std::abs(lhs - rhs) <= 1e-9 * std::abs(lhs))) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "equality certificate failed for n=" << n << " x0=" << x0 << ": P'(x0)=" << lhs
        << " bound*||P||=" << rhs;
    throw InternalConsistencyError(msg.str());
  }
  return e;
}

std::vector<ExtremalPoly> build_remark_family(int n) {
  if (n < 1) throw ArgumentError("build_remark_family: degree must be >= 1");
  std::vector<ExtremalPoly> out;
  auto add = [&](WeightId weight, int deg, std::string name) {
    ExtremalPoly e;
    e.n = n;
    e.branch = weight;
    e.name = std::move(name);
    e.deriv = diagonal_density(weight, deg);
    e.poly = symmetric_antiderivative(e.deriv);
    out.push_back(std::move(e));
  };
  if (n % 2 == 0) {
    const int k = (n - 2) / 2;
    add(WeightId::Plus, k, "s_" + std::to_string(k));
  } else {
    const int k = (n - 1) / 2;
    if (k >= 1) add(WeightId::Bridge, k - 1, "h_" + std::to_string(k));
    add(WeightId::Legendre, k, "f_" + std::to_string(k));
  }
  return out;
}

double sharpness_ratio(const ExtremalPoly& e, double x0) {
  const double bound = pointwise_bound(e.n, x0).bound;
  return eval(e.deriv, x0) / (bound * sup_norm(e.poly));
}

BestSharpness best_sharpness(const ExtremalPoly& e, int grid_size) {
  const double norm = sup_norm(e.poly);
  BestSharpness best{-std::numeric_limits<double>::infinity(), 0.0};
  for (double x : chebyshev_grid(grid_size)) {
    const double r = eval(e.deriv, x) / (pointwise_bound(e.n, x).bound * norm);
    if (r > best.ratio) best = {r, x};
  }
  return best;
}

ExtremalPoly as_extremal(const ChebPoly& monotone_poly, std::string name) {
  ExtremalPoly e;
  e.n = std::max(1, monotone_poly.degree());
  e.name = std::move(name);
  e.poly = monotone_poly;
  e.deriv = derivative(monotone_poly);
  return e;
}

ChebPoly lukacs_density(int m, std::mt19937_64& rng) {
  if (m < 0) throw ArgumentError("lukacs_density: negative degree");
  std::normal_distribution<double> normal(0.0, 1.0);
  auto random_poly = [&](int deg) {
    std::vector<double> c(static_cast<std::size_t>(deg) + 1);
    for (double& v : c) v = normal(rng);
    return ChebPoly(std::move(c));
  };
  if (m % 2 == 0) {
    const int j = m / 2;
    const ChebPoly a = random_poly(j);
    ChebPoly out = mul(a, a);
    if (j >= 1) {
      const ChebPoly b = random_poly(j - 1);
      out += mul(weight_poly(WeightId::Bridge), mul(b, b));
    }
    return out;
  }
  const int j = (m - 1) / 2;
  const ChebPoly c = random_poly(j);
  const ChebPoly d = random_poly(j);
  return mul(weight_poly(WeightId::Plus), mul(c, c)) + mul(weight_poly(WeightId::Minus), mul(d, d));
}

std::vector<ChebPoly> random_monotone_corpus(int count, std::uint64_t seed, int max_degree) {
  if (max_degree < 1) throw ArgumentError("random_monotone_corpus: max_degree must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> degree(0, max_degree - 1);
  std::normal_distribution<double> shift(0.0, 1.0);
  std::vector<ChebPoly> corpus;
  corpus.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    const ChebPoly density = lukacs_density(degree(rng), rng);
    corpus.push_back(antiderivative(density, -1.0) + ChebPoly::constant(shift(rng)));
  }
  return corpus;
}

}  // namespace monomarkov

#include "monomarkov/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "monomarkov/errors.hpp"

namespace monomarkov {

namespace {

void require_degree(const OrthoBasis& basis, int needed, const char* what) {
  if (needed > basis.max_degree()) {
    throw ArgumentError(std::string(what) + ": needs degree " + std::to_string(needed) +
                        " but basis stops at " + std::to_string(basis.max_degree()));
  }
}

}  // namespace

double cd_kernel_direct(const OrthoBasis& basis, int k, double x, double y) {
  if (k < 0) return 0.0;
  require_degree(basis, k, "cd_kernel");
  const std::vector<double> px = eval_basis(basis, k, x);
  const std::vector<double> py = x == y ? px : eval_basis(basis, k, y);
  double sum = 0.0;
  for (std::size_t l = 0; l < px.size(); ++l) sum += px[l] * py[l];
  return sum;
}

double cd_kernel_quotient(const OrthoBasis& basis, int k, double x, double y) {
  require_degree(basis, k + 1, "cd_kernel_quotient");
  if (x == y) throw ArgumentError("cd_kernel_quotient: confluent arguments");
  const std::vector<double> px = eval_basis(basis, k + 1, x);
  const std::vector<double> py = eval_basis(basis, k + 1, y);
  const auto kk = static_cast<std::size_t>(k);
  // gamma_k / gamma_{k+1} = b_{k+1}
  return basis.b(k + 1) * (px[kk + 1] * py[kk] - py[kk + 1] * px[kk]) / (x - y);
}

double cd_kernel(const OrthoBasis& basis, int k, double x, double y) {
  require_degree(basis, k, "cd_kernel");
  if (std::abs(x - y) > kConfluentThreshold && k + 1 <= basis.max_degree()) {
    return cd_kernel_quotient(basis, k, x, y);
  }
  return cd_kernel_direct(basis, k, x, y);
}

ChebPoly cd_kernel_poly(const OrthoBasis& basis, int k, double y) {
  if (k < 0) return {};
  require_degree(basis, k, "cd_kernel_poly");
  const OrthoBasis trunc = build_basis(basis.weight(), k);
  const std::vector<ChebPoly> polys = basis_polys(trunc);
  const std::vector<double> py = eval_basis(trunc, y);
  ChebPoly out;
  for (std::size_t l = 0; l < polys.size(); ++l) out += py[l] * polys[l];
  return out.trimmed();
}

KernelEval weighted_diagonal(WeightId weight, int k, double x) {
  require_unit_interval(x, "kernel");
  if (k < 0) return {weight, k, x, 0.0};
  const OrthoBasis basis = build_basis(weight, k);
  const double w = evaluate_weight(weight, x);
  return {weight, k, x, w * cd_kernel_direct(basis, k, x, x)};
}

double kernel_S(int k, double x) {
  if (k < 0) throw ArgumentError("kernel_S: negative k");
  return weighted_diagonal(WeightId::Plus, k, x).value;
}

double kernel_H(int k, double x) {
  if (k < 0) throw ArgumentError("kernel_H: negative k");
  return weighted_diagonal(WeightId::Bridge, k - 1, x).value;
}

double kernel_F(int k, double x) {
  if (k < 0) throw ArgumentError("kernel_F: negative k");
  return weighted_diagonal(WeightId::Legendre, k, x).value;
}

ChebDivision divide_linear(const ChebPoly& p, double x0) {
  const auto c = p.coeffs();
  if (c.size() <= 1) return {ChebPoly(), p.coeff(0)};
  const std::size_t d = c.size() - 1;
  std::vector<double> q(d + 1, 0.0);  // q[d] is a zero sentinel
  auto at = [&](std::size_t j) { return j < d ? q[j] : 0.0; };
  // (x - x0) Q matches p in T_j for j >= 2 when
  //   c_j = q_{j-1}/2 + q_{j+1}/2 - x0 q_j,
  // and in T_1 when c_1 = q_0 + q_2/2 - x0 q_1.
  for (std::size_t j = d; j >= 2; --j) {
    q[j - 1] = 2.0 * (c[j] + x0 * at(j) - 0.5 * at(j + 1));
  }
  q[0] = c[1] + x0 * at(1) - 0.5 * at(2);
  const double remainder = c[0] - (0.5 * at(1) - x0 * q[0]);
  q.pop_back();
  return {ChebPoly(std::move(q)), remainder};
}

ChebPoly g_extremal(const OrthoBasis& basis, int k, double x0) {
  require_unit_interval(x0, "g_extremal");
  if (k < 0) throw ArgumentError("g_extremal: negative k");
  require_degree(basis, k + 1, "g_extremal");
  const OrthoBasis trunc = build_basis(basis.weight(), k + 1);
  const std::vector<ChebPoly> polys = basis_polys(trunc);
  const std::vector<double> p0 = eval_basis(trunc, x0);
  const auto kk = static_cast<std::size_t>(k);
  const ChebPoly numerator = p0[kk] * polys[kk + 1] - p0[kk + 1] * polys[kk];

  double scale = 0.0;
  for (double c : numerator.coeffs()) scale = std::max(scale, std::abs(c));
  ChebDivision div = divide_linear(numerator, x0);
  if (std::abs(div.remainder) >= 1e-10 * scale) {
    throw NumericError("g_extremal: division remainder " + std::to_string(div.remainder) +
                       " too large");
  }
  return div.quotient.trimmed();
}

}  // namespace monomarkov

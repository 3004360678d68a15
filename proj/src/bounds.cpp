#include "monomarkov/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "monomarkov/errors.hpp"
#include "monomarkov/kernels.hpp"

namespace monomarkov {

std::string_view branch_name(Branch b) {
  switch (b) {
    case Branch::SPlus: return "S+";
    case Branch::SMinus: return "S-";
    case Branch::F: return "F";
    case Branch::H: return "H";
    case Branch::Tie: return "tie";
  }
  return "?";
}

WeightId branch_weight(Branch b) {
  switch (b) {
    case Branch::SPlus: return WeightId::Plus;
    case Branch::SMinus: return WeightId::Minus;
    case Branch::F: return WeightId::Legendre;
    case Branch::H: return WeightId::Bridge;
    case Branch::Tie: break;
  }
  throw ArgumentError("branch_weight: a tie has no single weight");
}

int branch_kernel_degree(Branch b, int k) { return b == Branch::H ? k - 1 : k; }

namespace {

void require_degree(int n) {
  if (n < 1) throw ArgumentError("degree must be >= 1, got " + std::to_string(n));
}

/// Evaluates the two branches for a fixed n with the bases built once.
class BranchPair {
 public:
  explicit BranchPair(int n)
      : n_(n),
        parity_(n % 2 == 0 ? Parity::Even : Parity::Odd),
        k_(parity_ == Parity::Even ? (n - 2) / 2 : (n - 1) / 2),
        tag_a_(parity_ == Parity::Even ? Branch::SPlus : Branch::F),
        tag_b_(parity_ == Parity::Even ? Branch::SMinus : Branch::H),
        deg_a_(branch_kernel_degree(tag_a_, k_)),
        deg_b_(branch_kernel_degree(tag_b_, k_)),
        basis_a_(branch_weight(tag_a_), std::max(deg_a_, 0)),
        basis_b_(branch_weight(tag_b_), std::max(deg_b_, 0)) {}

  double a(double x) const { return value(basis_a_, deg_a_, x); }
  double b(double x) const { return value(basis_b_, deg_b_, x); }

  BoundReport report(double x0) const {
    BoundReport r;
    r.n = n_;
    r.x0 = x0;
    r.parity = parity_;
    r.k = k_;
    r.branch_a_tag = tag_a_;
    r.branch_b_tag = tag_b_;
    r.branch_a = a(x0);
    r.branch_b = b(x0);
    r.bound = 2.0 * std::max(r.branch_a, r.branch_b);
    r.winner = r.branch_a > r.branch_b   ? tag_a_
               : r.branch_b > r.branch_a ? tag_b_
                                         : Branch::Tie;
    return r;
  }

  double bound(double x0) const { return 2.0 * std::max(a(x0), b(x0)); }

 private:
  static double value(const OrthoBasis& basis, int deg, double x) {
    if (deg < 0) return 0.0;
    return evaluate_weight(basis.weight(), x) * cd_kernel_direct(basis, deg, x, x);
  }

  int n_;
  Parity parity_;
  int k_;
  Branch tag_a_;
  Branch tag_b_;
  int deg_a_;
  int deg_b_;
  OrthoBasis basis_a_;
  OrthoBasis basis_b_;
};

/// Grid scan on kSupGrid Chebyshev points (endpoints included), then
/// golden-section refinement around every grid local maximum whose value is
/// within 1e-3 (relative) of the best. Sequential and deterministic.
SupResult grid_sup(const std::function<double(double)>& f) {
  const std::vector<double> grid = chebyshev_grid(kSupGrid);
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = f(grid[i]);
  std::size_t best_i = 0;
  for (std::size_t i = 1; i < vals.size(); ++i) {
    if (vals[i] > vals[best_i]) best_i = i;
  }
  SupResult best{vals[best_i], grid[best_i]};
  const double cutoff = vals[best_i] - 1e-3 * std::abs(vals[best_i]);
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    if (vals[i] < cutoff || vals[i] < vals[i - 1] || vals[i] < vals[i + 1]) continue;
    const double x = golden_section_argmax(f, grid[i - 1], grid[i + 1]);
    const double v = f(x);
    if (v > best.value) best = {v, x};
  }
  return best;
}

}  // namespace

BoundReport pointwise_bound(int n, double x0) {
  require_degree(n);
  require_unit_interval(x0, "pointwise_bound");
  return BranchPair(n).report(x0);
}

SupResult markov_sup(int n) {
  require_degree(n);
  const BranchPair pair(n);
  return grid_sup([&](double x) { return pair.bound(x); });
}

double markov_constant(int n) { return markov_sup(n).value; }

double bernstein_constant(int n) {
  require_degree(n);
  const BranchPair pair(n);
  auto weighted = [](double x, double v) { return std::sqrt(std::max(0.0, 1.0 - x * x)) * v; };
  const double sup_a = grid_sup([&](double x) { return weighted(x, pair.a(x)); }).value;
  if (n % 2 == 0) return 2.0 * sup_a;
  const double sup_b = grid_sup([&](double x) { return weighted(x, pair.b(x)); }).value;
  return 2.0 * std::max(sup_a, sup_b);
}

std::vector<std::pair<int, double>> growth_profile(const std::vector<int>& ns) {
  std::vector<std::pair<int, double>> out;
  out.reserve(ns.size());
  for (int n : ns) out.emplace_back(n, bernstein_constant(n) / n);
  return out;
}

Baselines baselines(int n) {
  require_degree(n);
  const double nn = n;
  const double qazi = n % 2 == 1 ? (nn + 1.0) * (nn + 1.0) / 4.0 : nn * (nn + 2.0) / 4.0;
  return {nn * nn, qazi};
}

ConstantRow constant_row(int n) {
  const Baselines base = baselines(n);
  return {n, markov_constant(n), base.bernstein_qazi, bernstein_constant(n), base.classical_markov};
}

ConstantTable constant_table(int n_max) {
  require_degree(n_max);
  ConstantTable table;
  table.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) table.push_back(constant_row(n));
  return table;
}

}  // namespace monomarkov

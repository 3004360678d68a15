#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "monomarkov/orthobasis.hpp"

namespace monomarkov {

/// Scan size for every supremum over [-1, 1] in this module.
inline constexpr int kSupGrid = 2001;

enum class Parity { Even, Odd };

/// Which kernel carries the pointwise bound.
///   Even n = 2k+2: SPlus = S_k(x0) (weight 1+x), SMinus = S_k(-x0) (weight 1-x).
///   Odd n = 2k+1:  F = F_k(x0) (weight 1), H = H_k(x0) (weight 1-x^2).
enum class Branch { SPlus, SMinus, F, H, Tie };

std::string_view branch_name(Branch b);
/// Weight whose squared kernel realises the branch. Tie is not accepted.
WeightId branch_weight(Branch b);
/// Degree of the kernel sum for branch b at the given half-degree k.
int branch_kernel_degree(Branch b, int k);

struct BoundReport {
  int n = 0;
  double x0 = 0.0;
  Parity parity = Parity::Odd;
  int k = 0;
  Branch branch_a_tag = Branch::F;
  Branch branch_b_tag = Branch::H;
  double branch_a = 0.0;
  double branch_b = 0.0;
  double bound = 0.0;  // 2 max(branch_a, branch_b)
  Branch winner = Branch::Tie;
};

/// max P'(x0) over monotone P of degree n with ||P|| = 1.
BoundReport pointwise_bound(int n, double x0);

/// Supremum of a function over [-1, 1] with the point where it is attained.
struct SupResult {
  double value;
  double argmax;
};

/// sup over x0 of pointwise_bound(n, x0).bound, computed numerically.
SupResult markov_sup(int n);
double markov_constant(int n);

/// Weighted analogue: sup over x of sqrt(1-x^2) times the pointwise bound.
double bernstein_constant(int n);

/// (n, bernstein_constant(n) / n) in input order.
std::vector<std::pair<int, double>> growth_profile(const std::vector<int>& ns);

struct Baselines {
  double classical_markov;  // n^2
  double bernstein_qazi;    // (n+1)^2/4 odd, n(n+2)/4 even
};
Baselines baselines(int n);

struct ConstantRow {
  int n;
  double markov_mono;
  double bernstein_qazi;
  double bernstein_mono;
  double classical_markov;
};
using ConstantTable = std::vector<ConstantRow>;

ConstantRow constant_row(int n);
ConstantTable constant_table(int n_max);

}  // namespace monomarkov

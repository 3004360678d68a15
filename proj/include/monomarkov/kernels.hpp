#pragma once

#include "monomarkov/orthobasis.hpp"
#include "monomarkov/polycore.hpp"

namespace monomarkov {

/// Below this separation the Christoffel-Darboux quotient loses too many
/// digits and the direct sum is used instead.
inline constexpr double kConfluentThreshold = 1e-8;

/// K_k(x, y) = sum_{l<=k} p_l(x) p_l(y).
double cd_kernel_direct(const OrthoBasis& basis, int k, double x, double y);

/// (gamma_k / gamma_{k+1}) (p_{k+1}(x) p_k(y) - p_{k+1}(y) p_k(x)) / (x - y).
/// Needs k + 1 <= max_degree and x != y.
double cd_kernel_quotient(const OrthoBasis& basis, int k, double x, double y);

/// Quotient form when |x - y| > kConfluentThreshold and p_{k+1} is
/// available, direct sum otherwise.
double cd_kernel(const OrthoBasis& basis, int k, double x, double y);

/// K_k(., y) as a polynomial in the first argument.
ChebPoly cd_kernel_poly(const OrthoBasis& basis, int k, double y);

/// w(x) K_k(x, x) for one weight; k = -1 is the empty sum.
struct KernelEval {
  WeightId weight;
  int k;
  double x;
  double value;
};

KernelEval weighted_diagonal(WeightId weight, int k, double x);

/// (1+x) sum_{l=0}^{k} p^PLUS_l(x)^2
double kernel_S(int k, double x);
/// (1-x^2) sum_{l=0}^{k-1} p^BRIDGE_l(x)^2, zero for k = 0.
double kernel_H(int k, double x);
/// sum_{l=0}^{k} p^LEGENDRE_l(x)^2
double kernel_F(int k, double x);

/// The divided difference (p_{k+1}(x) p_k(x0) - p_{k+1}(x0) p_k(x)) / (x - x0)
/// as a degree-k series, by synthetic division of the numerator. Equals
/// (gamma_{k+1} / gamma_k) K_k(x, x0). Throws NumericError when the
/// division remainder is not negligible.
ChebPoly g_extremal(const OrthoBasis& basis, int k, double x0);

/// Quotient and remainder of p / (x - x0) in the Chebyshev basis.
struct ChebDivision {
  ChebPoly quotient;
  double remainder;
};
ChebDivision divide_linear(const ChebPoly& p, double x0);

}  // namespace monomarkov

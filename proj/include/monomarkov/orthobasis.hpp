#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "monomarkov/polycore.hpp"

namespace monomarkov {

/// The four weights (1-x)^alpha (1+x)^beta with alpha, beta in {0, 1}.
/// The Jacobi symbol is J^(alpha,beta): PLUS (1+x) is J^(0,1), MINUS (1-x)
/// is J^(1,0).
enum class WeightId { Legendre, Plus, Minus, Bridge };

inline constexpr WeightId kAllWeights[] = {WeightId::Legendre, WeightId::Plus,
                                           WeightId::Minus, WeightId::Bridge};

struct JacobiParams {
  int alpha;
  int beta;
};

JacobiParams jacobi_params(WeightId w);
std::string_view weight_name(WeightId w);
std::string_view jacobi_symbol(WeightId w);

double evaluate_weight(WeightId w, double x);
ChebPoly weight_poly(WeightId w);
/// Integral of the weight over [-1, 1].
double weight_mass(WeightId w);

enum class RecurrenceRoute {
  ClosedForm,  ///< Jacobi recurrence coefficients in closed form.
  Stieltjes,   ///< Discretised Stieltjes on an exact Gauss-Legendre rule.
};

/// Orthonormal polynomials p_0..p_k for one weight, defined by
///   b_{l+1} p_{l+1}(x) = (x - a_l) p_l(x) - b_l p_{l-1}(x),  p_0 = 1/sqrt(mu0),
/// with positive leading coefficients gamma_l = gamma_{l-1} / b_l.
class OrthoBasis {
 public:
  OrthoBasis(WeightId weight, int max_degree,
             RecurrenceRoute route = RecurrenceRoute::ClosedForm);

  WeightId weight() const { return weight_; }
  int max_degree() const { return max_degree_; }
  double mass() const { return mu0_; }

  /// a_0..a_{k-1}
  std::span<const double> diagonal() const { return a_; }
  /// b_1..b_k (b_l is at index l-1)
  std::span<const double> off_diagonal() const { return b_; }
  double a(int l) const { return a_[static_cast<std::size_t>(l)]; }
  double b(int l) const { return b_[static_cast<std::size_t>(l - 1)]; }
  /// gamma_l, the leading monomial coefficient of p_l.
  double leading_coefficient(int l) const { return gamma_[static_cast<std::size_t>(l)]; }

 private:
  WeightId weight_;
  int max_degree_;
  double mu0_;
  std::vector<double> a_;
  std::vector<double> b_;
  std::vector<double> gamma_;
};

OrthoBasis build_basis(WeightId weight, int k,
                       RecurrenceRoute route = RecurrenceRoute::ClosedForm);

/// Largest |difference| between the closed-form and Stieltjes coefficients.
double recurrence_route_discrepancy(WeightId weight, int k);

/// p_0(x)..p_k(x) by the forward recurrence.
std::vector<double> eval_basis(const OrthoBasis& basis, double x);
/// p_0(x)..p_upto(x); upto must not exceed max_degree.
std::vector<double> eval_basis(const OrthoBasis& basis, int upto, double x);

/// p_l as a Chebyshev series.
ChebPoly basis_poly(const OrthoBasis& basis, int l);
/// p_0..p_k as Chebyshev series.
std::vector<ChebPoly> basis_polys(const OrthoBasis& basis);

struct QuadRule {
  std::vector<double> nodes;    // ascending, inside (-1, 1)
  std::vector<double> weights;  // positive
  int order = 0;
};

/// m-point Gauss-Legendre rule, exact through degree 2m - 1.
QuadRule gauss_legendre(int m);

/// sum_i w_i f(x_i)
template <typename F>
double integrate(const QuadRule& rule, F&& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(rule.nodes[i]);
  return s;
}

/// max_{i,j<=k} |int w p_i p_j - delta_ij| on a Gauss-Legendre rule of
/// order k + 3.
double orthonormality_residual(const OrthoBasis& basis);

}  // namespace monomarkov

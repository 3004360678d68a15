#pragma once

#include <functional>
#include <span>
#include <vector>

namespace monomarkov {

/// Coefficients below this fraction of the largest magnitude are trimmed
/// from the top of the series after arithmetic.
inline constexpr double kTrimTolerance = 1e-14;

/// Dense polynomial on [-1, 1] stored as a Chebyshev series
/// sum_j c_j T_j(x). The zero polynomial has no coefficients.
class ChebPoly {
 public:
  ChebPoly() = default;
  /// Exact trailing zeros are dropped; nothing else is touched.
  explicit ChebPoly(std::vector<double> coeffs);

  static ChebPoly constant(double c);
  /// T_j itself.
  static ChebPoly chebyshev_t(int j);
  /// Converts a_0 + a_1 x + ... + a_d x^d.
  static ChebPoly from_monomial(std::span<const double> monomial);

  std::span<const double> coeffs() const { return coeffs_; }
  double coeff(int j) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the series; 0 for constants and for the zero polynomial.
  int degree() const;

  /// Copy without trailing coefficients below rel_tol * max|c|.
  ChebPoly trimmed(double rel_tol = kTrimTolerance) const;

  ChebPoly operator-() const;
  ChebPoly& operator+=(const ChebPoly& other);
  ChebPoly& operator-=(const ChebPoly& other);
  ChebPoly& operator*=(double s);

 private:
  std::vector<double> coeffs_;
};

ChebPoly operator+(ChebPoly lhs, const ChebPoly& rhs);
ChebPoly operator-(ChebPoly lhs, const ChebPoly& rhs);
ChebPoly operator*(ChebPoly p, double s);
ChebPoly operator*(double s, ChebPoly p);

/// Clenshaw evaluation. Throws DomainError for |x| > 1 + 1e-12.
double eval(const ChebPoly& p, double x);

/// Product via T_m T_n = (T_{m+n} + T_{|m-n|}) / 2, trimmed.
ChebPoly mul(const ChebPoly& p, const ChebPoly& q);
/// x * p(x), exact in the Chebyshev basis.
ChebPoly mul_x(const ChebPoly& p);

ChebPoly derivative(const ChebPoly& p);

/// Q with Q' = p and Q(lower) = 0.
ChebPoly antiderivative(const ChebPoly& p, double lower);

/// Integral of p over [-1, 1].
double definite_integral(const ChebPoly& p);

/// Coefficient of x^d in the monomial expansion, d = degree().
double monomial_leading_coefficient(const ChebPoly& p);

/// max |p| on [-1, 1]: Chebyshev-point scan with endpoints, then Newton on
/// p' around each local maximiser (golden-section when Newton escapes the
/// bracket).
double sup_norm(const ChebPoly& p);

/// m >= 2 Chebyshev-Lobatto points in ascending order. The endpoints are
/// exactly -1 and 1, and for odd m the middle point is exactly 0.
std::vector<double> chebyshev_grid(int m);

/// Maximiser of f on [a, b] by golden-section search down to width tol.
/// Returns the better of the final probe and the two endpoints.
double golden_section_argmax(const std::function<double(double)>& f, double a,
                             double b, double tol = 1e-10);

}  // namespace monomarkov

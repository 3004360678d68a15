#include "monomarkov/polycore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "monomarkov/errors.hpp"

namespace monomarkov {

ChebPoly::ChebPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

ChebPoly ChebPoly::constant(double c) { return ChebPoly({c}); }

ChebPoly ChebPoly::chebyshev_t(int j) {
  if (j < 0) throw ArgumentError("chebyshev_t: negative index");
  std::vector<double> c(static_cast<std::size_t>(j) + 1, 0.0);
  c.back() = 1.0;
  return ChebPoly(std::move(c));
}

ChebPoly ChebPoly::from_monomial(std::span<const double> monomial) {
  // Horner in the Chebyshev basis: p = a_0 + x (a_1 + x (a_2 + ...)).
  ChebPoly acc;
  for (auto it = monomial.rbegin(); it != monomial.rend(); ++it) {
    acc = mul_x(acc) + ChebPoly::constant(*it);
  }
  return acc;
}

double ChebPoly::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<std::size_t>(j)];
}

int ChebPoly::degree() const {
  return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1;
}

ChebPoly ChebPoly::trimmed(double rel_tol) const {
  double scale = 0.0;
  for (double c : coeffs_) scale = std::max(scale, std::abs(c));
  std::vector<double> out = coeffs_;
  const double cut = rel_tol * scale;
  while (!out.empty() && std::abs(out.back()) <= cut) out.pop_back();
  return ChebPoly(std::move(out));
}

ChebPoly ChebPoly::operator-() const {
  ChebPoly out = *this;
  for (double& c : out.coeffs_) c = -c;
  return out;
}

ChebPoly& ChebPoly::operator+=(const ChebPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  *this = ChebPoly(std::move(coeffs_));
  return *this;
}

ChebPoly& ChebPoly::operator-=(const ChebPoly& other) { return *this += -other; }

ChebPoly& ChebPoly::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  *this = ChebPoly(std::move(coeffs_));
  return *this;
}

ChebPoly operator+(ChebPoly lhs, const ChebPoly& rhs) { return lhs += rhs; }
ChebPoly operator-(ChebPoly lhs, const ChebPoly& rhs) { return lhs -= rhs; }
ChebPoly operator*(ChebPoly p, double s) { return p *= s; }
ChebPoly operator*(double s, ChebPoly p) { return p *= s; }

double eval(const ChebPoly& p, double x) {
  require_unit_interval(x, "eval");
  const auto c = p.coeffs();
  if (c.empty()) return 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  for (std::size_t j = c.size() - 1; j >= 1; --j) {
    const double b0 = c[j] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return c[0] + x * b1 - b2;
}

ChebPoly mul(const ChebPoly& p, const ChebPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto a = p.coeffs();
  const auto b = q.coeffs();
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t m = 0; m < a.size(); ++m) {
    for (std::size_t n = 0; n < b.size(); ++n) {
      const double half = 0.5 * a[m] * b[n];
      out[m + n] += half;
      out[m > n ? m - n : n - m] += half;
    }
  }
  return ChebPoly(std::move(out)).trimmed();
}

ChebPoly mul_x(const ChebPoly& p) {
  if (p.is_zero()) return {};
  const auto c = p.coeffs();
  std::vector<double> out(c.size() + 1, 0.0);
  // x T_0 = T_1, x T_j = (T_{j+1} + T_{j-1}) / 2.
  out[1] += c[0];
  for (std::size_t j = 1; j < c.size(); ++j) {
    out[j + 1] += 0.5 * c[j];
    out[j - 1] += 0.5 * c[j];
  }
  return ChebPoly(std::move(out));
}

ChebPoly derivative(const ChebPoly& p) {
  const auto c = p.coeffs();
  if (c.size() <= 1) return {};
  const std::size_t d = c.size() - 1;
  std::vector<double> out(d + 1, 0.0);  // out[d] stays 0 as the recurrence seed
  for (std::size_t j = d; j >= 1; --j) {
    out[j - 1] = (j + 1 <= d ? out[j + 1] : 0.0) + 2.0 * static_cast<double>(j) * c[j];
  }
  out[0] *= 0.5;
  out.pop_back();
  return ChebPoly(std::move(out)).trimmed();
}

ChebPoly antiderivative(const ChebPoly& p, double lower) {
  require_unit_interval(lower, "antiderivative");
  const auto c = p.coeffs();
  if (c.empty()) return {};
  const std::size_t d = c.size() - 1;
  auto at = [&](std::size_t j) { return j <= d ? c[j] : 0.0; };
  std::vector<double> out(d + 2, 0.0);
  out[1] = at(0) - 0.5 * at(2);
  for (std::size_t j = 2; j <= d + 1; ++j) {
    out[j] = (at(j - 1) - at(j + 1)) / (2.0 * static_cast<double>(j));
  }
  ChebPoly q(out);
  out[0] = -eval(q, lower);
  return ChebPoly(std::move(out));
}

double definite_integral(const ChebPoly& p) {
  const auto c = p.coeffs();
  double sum = 0.0;
  for (std::size_t j = 0; j < c.size(); j += 2) {
    const double jj = static_cast<double>(j);
    sum += c[j] * 2.0 / (1.0 - jj * jj);
  }
  return sum;
}

double monomial_leading_coefficient(const ChebPoly& p) {
  const int d = p.degree();
  if (d == 0) return p.coeff(0);
  return p.coeff(d) * std::ldexp(1.0, d - 1);
}

std::vector<double> chebyshev_grid(int m) {
  if (m < 2) throw ArgumentError("chebyshev_grid: need at least 2 points");
  std::vector<double> x(static_cast<std::size_t>(m));
  const double denom = 2.0 * static_cast<double>(m - 1);
  for (int j = 0; j < m; ++j) {
    // sin form keeps the grid exactly symmetric about 0.
    const double t = static_cast<double>(2 * j - (m - 1)) / denom;
    x[static_cast<std::size_t>(j)] = std::sin(std::numbers::pi * t);
  }
  x.front() = -1.0;
  x.back() = 1.0;
  return x;
}

double golden_section_argmax(const std::function<double(double)>& f, double a,
                             double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = a;
  double hi = b;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  double best = f1 >= f2 ? x1 : x2;
  double fbest = std::max(f1, f2);
  for (double end : {a, b}) {
    const double fe = f(end);
    if (fe > fbest) {
      fbest = fe;
      best = end;
    }
  }
  return best;
}

namespace {

double refine_local_max(const ChebPoly& p, const ChebPoly& dp, const ChebPoly& ddp,
                        double start, double lo, double hi) {
  double x = start;
  bool escaped = false;
  for (int it = 0; it < 5; ++it) {
    const double curvature = eval(ddp, x);
    if (curvature == 0.0) break;
    const double step = eval(dp, x) / curvature;
    const double next = x - step;
    if (!(next >= lo && next <= hi)) {
      escaped = true;
      break;
    }
    x = next;
    if (std::abs(step) < 1e-15) break;
  }
  if (escaped) {
    x = golden_section_argmax([&](double t) { return std::abs(eval(p, t)); }, lo, hi);
  }
  return std::abs(eval(p, x));
}

}  // namespace

double sup_norm(const ChebPoly& p) {
  if (p.degree() == 0) return std::abs(p.coeff(0));
  const int m = std::max(64, 8 * p.degree());
  const std::vector<double> grid = chebyshev_grid(m);
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = std::abs(eval(p, grid[i]));

  double best = *std::max_element(vals.begin(), vals.end());
  const ChebPoly dp = derivative(p);
  const ChebPoly ddp = derivative(dp);
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    if (vals[i] >= vals[i - 1] && vals[i] >= vals[i + 1]) {
      best = std::max(best, refine_local_max(p, dp, ddp, grid[i], grid[i - 1], grid[i + 1]));
    }
  }
  return best;
}

}  // namespace monomarkov

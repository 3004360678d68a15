#include "monomarkov/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "monomarkov/bounds.hpp"
#include "monomarkov/errors.hpp"
#include "monomarkov/extremal.hpp"
#include "monomarkov/polycore.hpp"

namespace monomarkov {

namespace {

std::vector<double> chebyshev_row(int n, double t) {
  std::vector<double> row(static_cast<std::size_t>(n));
  row[0] = 1.0;
  if (n > 1) row[1] = t;
  for (std::size_t j = 2; j < row.size(); ++j) row[j] = 2.0 * t * row[j - 1] - row[j - 2];
  return row;
}

}  // namespace

LPProblem density_lp(int n, double x0, int grid_size, double mass) {
  if (n < 1) throw ArgumentError("density_lp: degree must be >= 1");
  require_unit_interval(x0, "density_lp");
  if (grid_size < 4 * n + 16) {
    throw ArgumentError("density_lp: grid_size must be at least 4n + 16");
  }
  LPProblem lp;
  lp.objective = chebyshev_row(n, x0);

  LinearRow integral;
  integral.a.assign(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; j += 2) integral.a[static_cast<std::size_t>(j)] = 2.0 / (1.0 - double(j) * j);
  integral.b = mass;
  lp.equalities.push_back(std::move(integral));

  std::vector<double> points = chebyshev_grid(grid_size);
  if (std::find(points.begin(), points.end(), x0) == points.end()) {
    points.insert(std::upper_bound(points.begin(), points.end(), x0), x0);
  }
  lp.inequalities.reserve(points.size());
  for (double t : points) lp.inequalities.push_back({chebyshev_row(n, t), 0.0});
  return lp;
}

std::optional<double> grid_upper_bound(int n, double x0, int grid_size, double mass) {
  const LPResult res = solve_lp(density_lp(n, x0, grid_size, mass));
  switch (res.status) {
    case LPStatus::Optimal: return res.value;
    case LPStatus::Unbounded: return std::nullopt;
    case LPStatus::Infeasible: break;
  }
  // A positive constant is always feasible.
  throw SolverError("grid_upper_bound: relaxation reported infeasible");
}

SandwichResult sandwich(int n, double x0) {
  SandwichResult out;
  out.n = n;
  out.x0 = x0;
  out.theory = pointwise_bound(n, x0).bound / 2.0;

  const ExtremalPoly ext = build_pointwise_extremal(n, x0);
  out.lower = eval(ext.deriv, x0) / definite_integral(ext.deriv);

  int grid = std::max(64, 4 * n + 16);
  std::optional<double> upper;
  for (;;) {
    upper = grid_upper_bound(n, x0, grid);
    if (upper && *upper - out.lower < kSandwichGap) break;
    if (grid >= kGridCap) break;
    grid = std::min(2 * grid, kGridCap);
  }
  out.grid_size = grid;
  out.upper = upper.value_or(std::numeric_limits<double>::infinity());
  out.gap = out.upper - out.lower;
  out.status = upper && out.gap < kSandwichGap ? SandwichStatus::Closed : SandwichStatus::Inconclusive;

  const double slack = 1e-9 * std::max(1.0, out.theory);
  if (out.lower > out.theory + slack || out.theory > out.upper + slack) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "sandwich violated for n=" << n << " x0=" << x0 << ": lower=" << out.lower
        << " theory=" << out.theory << " upper=" << out.upper;
    throw VerificationError(msg.str());
  }
  return out;
}

}  // namespace monomarkov

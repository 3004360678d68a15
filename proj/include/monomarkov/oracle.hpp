#pragma once

#include <optional>

#include "monomarkov/lp.hpp"

namespace monomarkov {

/// Largest grid tried before a sandwich is declared inconclusive.
inline constexpr int kGridCap = 1 << 16;
/// Target width of the oracle bracket.
inline constexpr double kSandwichGap = 1e-3;

/// The grid relaxation of max D(x0) over densities D of degree n-1 with
/// integral `mass` that are nonnegative on grid_size Chebyshev points plus
/// {-1, 1, x0}. Variables are the Chebyshev coefficients of D.
LPProblem density_lp(int n, double x0, int grid_size, double mass = 1.0);

/// LP optimum of density_lp, an upper bound on max D(x0)/int D. Empty when
/// the relaxation is unbounded (grid too coarse). Requires
/// grid_size >= 4n + 16.
std::optional<double> grid_upper_bound(int n, double x0, int grid_size, double mass = 1.0);

enum class SandwichStatus { Closed, Inconclusive };

struct SandwichResult {
  int n = 0;
  double x0 = 0.0;
  double theory = 0.0;  // pointwise_bound / 2
  double lower = 0.0;   // extremal density D(x0) / int D
  double upper = 0.0;   // LP optimum
  int grid_size = 0;
  double gap = 0.0;     // upper - lower
  SandwichStatus status = SandwichStatus::Inconclusive;
};

/// Brackets max D(x0)/int D between the extremal density (below) and the
/// grid LP (above), doubling the grid until the gap drops below
/// kSandwichGap or kGridCap is reached. Throws VerificationError when the
/// theoretical value falls outside the bracket by more than 1e-9.
SandwichResult sandwich(int n, double x0);

}  // namespace monomarkov

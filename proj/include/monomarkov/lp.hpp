#pragma once

#include <stdexcept>
#include <vector>

namespace monomarkov {

/// a . v = b (equality rows) or a . v >= b (inequality rows).
struct LinearRow {
  std::vector<double> a;
  double b = 0.0;
};

/// maximize objective . v over free variables v.
struct LPProblem {
  std::vector<double> objective;
  std::vector<LinearRow> equalities;
  std::vector<LinearRow> inequalities;
};

enum class LPStatus { Optimal, Unbounded, Infeasible };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  double value = 0.0;
  std::vector<double> solution;  // meaningful only when Optimal
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense two-phase tableau simplex. Free variables are split into
/// nonnegative parts and slacks are kept implicit, so the tableau is
/// (rows + 2) x (2 * vars + 2). Entering column: most negative reduced cost,
/// ties to the lowest variable index; leaving row: minimum ratio, ties to
/// the lowest basic index. Switches to Bland's rule after a run of
/// degenerate pivots. Throws SolverError past the iteration cap.
LPResult solve_lp(const LPProblem& problem);

}  // namespace monomarkov

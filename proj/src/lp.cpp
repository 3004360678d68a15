#include "monomarkov/lp.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace monomarkov {

namespace {

constexpr double kEps = 1e-9;
constexpr int kDegenerateSwitch = 50;

/// Tableau for max c.x s.t. A x <= b, x >= 0 with implicit slacks.
/// Column n is the phase-one artificial, column n+1 the right-hand side;
/// row m is the objective, row m+1 the phase-one objective.
class Tableau {
 public:
  Tableau(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
          const std::vector<double>& c)
      : m_(static_cast<int>(b.size())),
        n_(static_cast<int>(c.size())),
        width_(n_ + 2),
        cells_(static_cast<std::size_t>(m_ + 2) * static_cast<std::size_t>(width_), 0.0),
        nonbasic_(static_cast<std::size_t>(n_) + 1),
        basic_(static_cast<std::size_t>(m_)) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) at(i, j) = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      basic_[static_cast<std::size_t>(i)] = n_ + i;
      at(i, n_) = -1.0;
      at(i, n_ + 1) = b[static_cast<std::size_t>(i)];
    }
    for (int j = 0; j < n_; ++j) {
      nonbasic_[static_cast<std::size_t>(j)] = j;
      at(m_, j) = -c[static_cast<std::size_t>(j)];
    }
    nonbasic_[static_cast<std::size_t>(n_)] = -1;
    at(m_ + 1, n_) = 1.0;
    iteration_cap_ = 50L * (m_ + n_) + 1000L;
  }

  /// Returns the optimum, +inf when unbounded, -inf when infeasible.
  double solve(std::vector<double>& x) {
    int r = 0;
    for (int i = 1; i < m_; ++i) {
      if (at(i, n_ + 1) < at(r, n_ + 1)) r = i;
    }
    if (m_ > 0 && at(r, n_ + 1) < -kEps) {
      pivot(r, n_);
      if (!run(2) || at(m_ + 1, n_ + 1) < -kEps) return -std::numeric_limits<double>::infinity();
      for (int i = 0; i < m_; ++i) {
        if (basic_[static_cast<std::size_t>(i)] != -1) continue;
        int s = 0;
        for (int j = 1; j <= n_; ++j) {
          if (better(at(i, j), j, at(i, s), s)) s = j;
        }
        pivot(i, s);
      }
    }
    const bool bounded = run(1);
    x.assign(static_cast<std::size_t>(n_), 0.0);
    for (int i = 0; i < m_; ++i) {
      const int var = basic_[static_cast<std::size_t>(i)];
      if (var >= 0 && var < n_) x[static_cast<std::size_t>(var)] = at(i, n_ + 1);
    }
    return bounded ? at(m_, n_ + 1) : std::numeric_limits<double>::infinity();
  }

 private:
  double& at(int i, int j) {
    return cells_[static_cast<std::size_t>(i) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(j)];
  }

  bool better(double v1, int j1, double v2, int j2) const {
    const int id1 = nonbasic_[static_cast<std::size_t>(j1)];
    const int id2 = nonbasic_[static_cast<std::size_t>(j2)];
    return v1 < v2 || (v1 == v2 && id1 < id2);
  }

  void pivot(int r, int s) {
    double* row_r = &at(r, 0);
    const double inv = 1.0 / row_r[s];
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r) continue;
      double* row_i = &at(i, 0);
      if (std::abs(row_i[s]) <= kEps * 1e-3) continue;
      const double factor = row_i[s] * inv;
      for (int j = 0; j < width_; ++j) row_i[j] -= row_r[j] * factor;
      row_i[s] = row_r[s] * factor;
    }
    for (int j = 0; j < width_; ++j) {
      if (j != s) row_r[j] *= inv;
    }
    for (int i = 0; i < m_ + 2; ++i) {
      if (i != r) at(i, s) *= -inv;
    }
    row_r[s] = inv;
    std::swap(basic_[static_cast<std::size_t>(r)], nonbasic_[static_cast<std::size_t>(s)]);
  }

  /// Simplex iterations on objective row m + phase - 1.
  bool run(int phase) {
    const int obj = m_ + phase - 1;
    int degenerate_streak = 0;
    for (;;) {
      if (++iterations_ > iteration_cap_) {
        throw SolverError("solve_lp: iteration cap " + std::to_string(iteration_cap_) + " reached");
      }
      const bool bland = degenerate_streak >= kDegenerateSwitch;
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        if (nonbasic_[static_cast<std::size_t>(j)] == -phase) continue;
        if (bland) {
          if (at(obj, j) < -kEps &&
              (s == -1 || nonbasic_[static_cast<std::size_t>(j)] < nonbasic_[static_cast<std::size_t>(s)])) {
            s = j;
          }
        } else if (s == -1 || better(at(obj, j), j, at(obj, s), s)) {
          s = j;
        }
      }
      if (s == -1 || at(obj, s) >= -kEps) return true;

      int r = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < m_; ++i) {
        if (at(i, s) <= kEps) continue;
        const double ratio = at(i, n_ + 1) / at(i, s);
        if (r == -1 || ratio < best_ratio ||
            (ratio == best_ratio && basic_[static_cast<std::size_t>(i)] < basic_[static_cast<std::size_t>(r)])) {
          r = i;
          best_ratio = ratio;
        }
      }
      if (r == -1) return false;
      degenerate_streak = std::abs(best_ratio) <= kEps ? degenerate_streak + 1 : 0;
      pivot(r, s);
    }
  }

  int m_;
  int n_;
  int width_;
  std::vector<double> cells_;
  std::vector<int> nonbasic_;
  std::vector<int> basic_;
  long iterations_ = 0;
  long iteration_cap_ = 0;
};

}  // namespace

LPResult solve_lp(const LPProblem& problem) {
  const std::size_t vars = problem.objective.size();
  auto check = [&](const LinearRow& row) {
    if (row.a.size() != vars) throw SolverError("solve_lp: row width does not match objective");
  };
  for (const auto& row : problem.equalities) check(row);
  for (const auto& row : problem.inequalities) check(row);

  // v = v+ - v-, every constraint rewritten as (.) <= b.
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  a.reserve(2 * problem.equalities.size() + problem.inequalities.size());
  auto push = [&](const std::vector<double>& coeffs, double rhs, double sign) {
    std::vector<double> split(2 * vars);
    for (std::size_t j = 0; j < vars; ++j) {
      split[j] = sign * coeffs[j];
      split[j + vars] = -sign * coeffs[j];
    }
    a.push_back(std::move(split));
    b.push_back(sign * rhs);
  };
  for (const auto& row : problem.equalities) {
    push(row.a, row.b, 1.0);
    push(row.a, row.b, -1.0);
  }
  for (const auto& row : problem.inequalities) push(row.a, row.b, -1.0);

  std::vector<double> c(2 * vars);
  for (std::size_t j = 0; j < vars; ++j) {
    c[j] = problem.objective[j];
    c[j + vars] = -problem.objective[j];
  }

  Tableau tableau(a, b, c);
  std::vector<double> x;
  const double value = tableau.solve(x);

  LPResult result;
  if (value == -std::numeric_limits<double>::infinity()) {
    result.status = LPStatus::Infeasible;
    return result;
  }
  if (value == std::numeric_limits<double>::infinity()) {
    result.status = LPStatus::Unbounded;
    return result;
  }
  result.status = LPStatus::Optimal;
  result.value = value;
  result.solution.resize(vars);
  for (std::size_t j = 0; j < vars; ++j) result.solution[j] = x[j] - x[j + vars];
  return result;
}

}  // namespace monomarkov

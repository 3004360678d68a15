#include "monomarkov/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

#include "monomarkov/bounds.hpp"
#include "monomarkov/errors.hpp"
#include "monomarkov/kernels.hpp"
#include "monomarkov/oracle.hpp"
#include "monomarkov/orthobasis.hpp"

namespace monomarkov {

using Json = nlohmann::ordered_json;

std::optional<Command> parse_command(const std::string& name) {
  if (name == "bound") return Command::Bound;
  if (name == "table") return Command::Table;
  if (name == "profile") return Command::Profile;
  if (name == "extremal") return Command::Extremal;
  if (name == "verify") return Command::Verify;
  return std::nullopt;
}

std::optional<Format> parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

void validate(const RunConfig& config) {
  auto need = [](const auto& opt, const char* flag, const char* cmd) {
    if (!opt) throw ArgumentError(std::string(cmd) + " requires " + flag);
  };
  if (config.n && *config.n < 1) throw ArgumentError("--n must be >= 1");
  if (config.n_max && *config.n_max < 1) throw ArgumentError("--n-max must be >= 1");
  if (config.x0 && !(std::abs(*config.x0) <= 1.0)) throw ArgumentError("--x0 must lie in [-1, 1]");
  if (config.grid < 64) throw ArgumentError("--grid must be >= 64");
  switch (config.command) {
    case Command::Bound:
      need(config.n, "--n", "bound");
      need(config.x0, "--x0", "bound");
      break;
    case Command::Profile:
    case Command::Extremal:
      need(config.n, "--n", config.command == Command::Profile ? "profile" : "extremal");
      break;
    case Command::Table:
      if (config.n_max.value_or(kDefaultTableMax) > 200) throw ArgumentError("table: --n-max must be <= 200");
      break;
    case Command::Verify:
      break;
  }
}

namespace {

std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

}  // namespace

std::string cmd_bound(int n, double x0, Format format) {
  const BoundReport r = pointwise_bound(n, x0);
  const Baselines base = baselines(n);
  if (format == Format::Json) {
    Json j;
    j["n"] = r.n;
    j["x0"] = r.x0;
    j["parity"] = parity_name(r.parity);
    j["k"] = r.k;
    j["branch_a_tag"] = branch_name(r.branch_a_tag);
    j["branch_a"] = r.branch_a;
    j["branch_b_tag"] = branch_name(r.branch_b_tag);
    j["branch_b"] = r.branch_b;
    j["winner"] = branch_name(r.winner);
    j["bound"] = r.bound;
    j["classical_markov"] = base.classical_markov;
    j["bernstein_qazi"] = base.bernstein_qazi;
    return dump(j);
  }
  return render_csv({"n", "x0", "parity", "k", "branch_a_tag", "branch_a", "branch_b_tag", "branch_b",
                     "winner", "bound", "classical_markov", "bernstein_qazi"},
                    {{std::to_string(r.n), format_real(r.x0), parity_name(r.parity), std::to_string(r.k),
                      std::string(branch_name(r.branch_a_tag)), format_real(r.branch_a),
                      std::string(branch_name(r.branch_b_tag)), format_real(r.branch_b),
                      std::string(branch_name(r.winner)), format_real(r.bound),
                      format_real(base.classical_markov), format_real(base.bernstein_qazi)}});
}

std::string cmd_table(int n_max, Format format) {
  if (n_max < 1 || n_max > 200) throw ArgumentError("table: n_max must be in [1, 200]");
  const ConstantTable table = constant_table(n_max);
  if (format == Format::Json) {
    Json rows = Json::array();
    for (const ConstantRow& r : table) {
      Json j;
      j["n"] = r.n;
      j["markov_mono"] = r.markov_mono;
      j["bernstein_qazi"] = r.bernstein_qazi;
      j["bernstein_mono"] = r.bernstein_mono;
      j["classical_markov"] = r.classical_markov;
      j["ratio_bernstein_over_n"] = r.bernstein_mono / r.n;
      rows.push_back(std::move(j));
    }
    return dump(rows);
  }
  std::vector<std::vector<std::string>> rows;
  for (const ConstantRow& r : table) {
    rows.push_back({std::to_string(r.n), format_real(r.markov_mono), format_real(r.bernstein_qazi),
                    format_real(r.bernstein_mono), format_real(r.classical_markov),
                    format_real(r.bernstein_mono / r.n)});
  }
  return render_csv({"n", "markov_mono", "bernstein_qazi", "bernstein_mono", "classical_markov",
                     "ratio_bernstein_over_n"},
                    rows);
}

std::string cmd_profile(int n, int grid, Format format) {
  std::vector<std::vector<std::string>> rows;
  Json arr = Json::array();
  for (double x : chebyshev_grid(grid)) {
    const BoundReport r = pointwise_bound(n, x);
    const double weighted = std::sqrt(std::max(0.0, 1.0 - x * x)) * r.bound;
    if (format == Format::Json) {
      Json j;
      j["x"] = x;
      j["bound"] = r.bound;
      j["branch_a"] = r.branch_a;
      j["branch_b"] = r.branch_b;
      j["winner"] = branch_name(r.winner);
      j["weighted_bound"] = weighted;
      arr.push_back(std::move(j));
    } else {
      rows.push_back({format_real(x), format_real(r.bound), format_real(r.branch_a), format_real(r.branch_b),
                      std::string(branch_name(r.winner)), format_real(weighted)});
    }
  }
  if (format == Format::Json) return dump(arr);
  return render_csv({"x", "bound", "branch_a", "branch_b", "winner", "weighted_bound"}, rows);
}

std::string cmd_extremal(int n, std::optional<double> x0, int grid, Format format) {
  std::vector<ExtremalPoly> polys;
  if (x0) {
    polys.push_back(build_pointwise_extremal(n, *x0));
  } else {
    polys = build_remark_family(n);
  }
  if (format == Format::Json) {
    Json arr = Json::array();
    for (const ExtremalPoly& e : polys) {
      Json j;
      j["name"] = e.name;
      j["n"] = e.n;
      j["x0"] = e.x0 ? Json(*e.x0) : Json(nullptr);
      j["weight"] = weight_name(e.branch);
      j["norm"] = sup_norm(e.poly);
      j["poly_chebyshev"] = std::vector<double>(e.poly.coeffs().begin(), e.poly.coeffs().end());
      j["deriv_chebyshev"] = std::vector<double>(e.deriv.coeffs().begin(), e.deriv.coeffs().end());
      if (e.x0) {
        j["sharpness_ratio"] = sharpness_ratio(e, *e.x0);
      } else {
        const BestSharpness best = best_sharpness(e, 201);
        j["best_sharpness_ratio"] = best.ratio;
        j["best_sharpness_x0"] = best.x0;
      }
      arr.push_back(std::move(j));
    }
    return dump(arr);
  }
  std::vector<std::vector<std::string>> rows;
  for (const ExtremalPoly& e : polys) {
    for (double x : chebyshev_grid(grid)) {
      rows.push_back({e.name, format_real(x), format_real(eval(e.poly, x)), format_real(eval(e.deriv, x))});
    }
  }
  return render_csv({"name", "x", "p", "dp"}, rows);
}

namespace {

/// Collects entries section by section and tracks failures.
class Report {
 public:
  Json& section(const std::string& name) {
    root_[name] = Json::array();
    current_ = name;
    return root_[name];
  }

  /// Adds {name, n, value, expected, tol, pass}; extra keys follow.
  Json& add(const std::string& name, int n, double value, double expected, double tol, bool pass) {
    Json j;
    j["name"] = name;
    j["n"] = n;
    j["value"] = value;
    j["expected"] = expected;
    j["tol"] = tol;
    j["pass"] = pass;
    ++entries_;
    if (!pass) {
      ++failures_;
      failing_.push_back(current_ + "/" + name + "/n=" + std::to_string(n));
    }
    root_[current_].push_back(std::move(j));
    return root_[current_].back();
  }

  /// |value - expected| <= tol
  Json& near(const std::string& name, int n, double value, double expected, double tol) {
    return add(name, n, value, expected, tol, std::abs(value - expected) <= tol);
  }

  void fail_with(const std::string& name, int n, const std::exception& ex) {
    add(name, n, std::nan(""), std::nan(""), 0.0, false)["error"] = ex.what();
  }

  VerifyOutput finish(int inconclusive) {
    Json summary;
    summary["entries"] = entries_;
    summary["failures"] = failures_;
    summary["inconclusive"] = inconclusive;
    summary["pass"] = failures_ == 0;
    summary["failing"] = failing_;
    root_["summary"] = std::move(summary);
    return {dump(root_), entries_, failures_, failures_ == 0};
  }

 private:
  Json root_ = Json::object();
  std::string current_;
  int entries_ = 0;
  int failures_ = 0;
  std::vector<std::string> failing_;
};

const double kSandwichPoints[] = {-0.9, -0.5, 0.0, 0.5, 0.9};
const double kSharpnessPoints[] = {-0.95, -0.5, 0.0, 0.5, 0.95};

void orthonormality_section(Report& rep) {
  rep.section("orthonormality");
  for (WeightId w : kAllWeights) {
    const std::string name(weight_name(w));
    rep.near("orthonormality/" + name, 25, orthonormality_residual(build_basis(w, 25)), 0.0, 1e-12);
    rep.near("recurrence_routes/" + name, 25, recurrence_route_discrepancy(w, 25), 0.0, 1e-10);
  }
}

void cd_identity_section(Report& rep, int n_max, std::uint64_t seed) {
  rep.section("cd_identity");
  const int k_max = std::min(n_max, 20);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (WeightId w : kAllWeights) {
    const std::string name(weight_name(w));
    const OrthoBasis basis = build_basis(w, k_max + 1);
    double quotient_err = 0.0;
    double reproducing_err = 0.0;
    double confluent_err = 0.0;
    for (int k = 0; k <= k_max; ++k) {
      for (int trial = 0; trial < 100; ++trial) {
        double x = unit(rng);
        double y = unit(rng);
        while (std::abs(x - y) <= 1e-3) y = unit(rng);
        const double direct = cd_kernel_direct(basis, k, x, y);
        const double scale = std::sqrt(cd_kernel_direct(basis, k, x, x) * cd_kernel_direct(basis, k, y, y));
        quotient_err = std::max(quotient_err, std::abs(cd_kernel_quotient(basis, k, x, y) - direct) / scale);
      }
      const QuadRule rule = gauss_legendre(k + 3);
      const OrthoBasis gbasis = build_basis(w, k + 1);
      for (double x0 : {-1.0, -0.3, 0.3, 1.0}) {
        const double diag = cd_kernel_direct(basis, k, x0, x0);
        const double integral = integrate(rule, [&](double t) {
          const double kv = cd_kernel_direct(basis, k, t, x0);
          return evaluate_weight(w, t) * kv * kv;
        });
        reproducing_err = std::max(reproducing_err, std::abs(integral - diag) / diag);
        const double g0 = eval(g_extremal(gbasis, k, x0), x0);
        const double expected = diag / gbasis.b(k + 1);
        confluent_err = std::max(confluent_err, std::abs(g0 - expected) / std::abs(expected));
      }
    }
    rep.near("quotient_vs_direct/" + name, k_max, quotient_err, 0.0, 1e-10);
    rep.near("reproducing/" + name, k_max, reproducing_err, 0.0, 1e-10);
    rep.near("confluent_g_extremal/" + name, k_max, confluent_err, 0.0, 1e-9);
  }
}

void szego_section(Report& rep) {
  rep.section("szego");
  const OrthoBasis basis = build_basis(WeightId::Plus, 30);
  const std::vector<double> grid = chebyshev_grid(2001);
  std::vector<double> best(31, -1.0);
  std::vector<double> arg(31, 0.0);
  for (double x : grid) {
    const std::vector<double> p = eval_basis(basis, x);
    for (std::size_t l = 0; l < p.size(); ++l) {
      const double v = (1.0 + x) * p[l] * p[l];
      if (v > best[l]) {
        best[l] = v;
        arg[l] = x;
      }
    }
  }
  for (int l = 0; l <= 30; ++l) {
    const auto li = static_cast<std::size_t>(l);
    const double expected = l + 1.0;
    const bool pass = best[li] <= expected + 1e-10 && std::abs(best[li] - expected) <= 1e-8 && arg[li] == 1.0;
    rep.add("weighted_plus_square/l=" + std::to_string(l), l, best[li], expected, 1e-8, pass)["argmax"] = arg[li];
  }
}

void endpoint_section(Report& rep) {
  rep.section("endpoint_laws");
  const OrthoBasis plus = build_basis(WeightId::Plus, 40);
  const OrthoBasis minus = build_basis(WeightId::Minus, 40);
  const OrthoBasis legendre = build_basis(WeightId::Legendre, 40);
  const std::vector<double> p1 = eval_basis(plus, 1.0);
  const std::vector<double> m1 = eval_basis(minus, -1.0);
  const std::vector<double> l1 = eval_basis(legendre, 1.0);
  double plus_err = 0.0;
  double minus_err = 0.0;
  double legendre_err = 0.0;
  for (int l = 0; l <= 40; ++l) {
    const auto li = static_cast<std::size_t>(l);
    plus_err = std::max(plus_err, std::abs(p1[li] - std::sqrt((l + 1.0) / 2.0)));
    minus_err = std::max(minus_err, std::abs(std::abs(m1[li]) - std::sqrt((l + 1.0) / 2.0)));
    legendre_err = std::max(legendre_err, std::abs(l1[li] - std::sqrt((2.0 * l + 1.0) / 2.0)));
  }
  rep.near("plus_at_1", 40, plus_err, 0.0, 1e-12);
  rep.near("minus_at_minus_1", 40, minus_err, 0.0, 1e-12);
  rep.near("legendre_at_1", 40, legendre_err, 0.0, 1e-12);
}

void markov_section(Report& rep, int n_max) {
  rep.section("markov_constants");
  for (int n = 1; n <= n_max; ++n) {
    const SupResult sup = markov_sup(n);
    const double expected = baselines(n).bernstein_qazi;
    rep.near("markov_mono", n, sup.value, expected, 1e-9 * expected)["argmax"] = sup.argmax;
  }
}

int sandwich_section(Report& rep, int n_max) {
  rep.section("sandwiches");
  int inconclusive = 0;
  for (int n = 1; n <= std::min(n_max, 16); ++n) {
    for (double x0 : kSandwichPoints) {
      const std::string name = "sandwich/x0=" + format_real(x0);
      try {
        const SandwichResult s = sandwich(n, x0);
        const bool closed = s.status == SandwichStatus::Closed;
        if (!closed) ++inconclusive;
        Json& j = rep.add(name, n, s.gap, 0.0, kSandwichGap, true);
        j["x0"] = x0;
        j["lower"] = s.lower;
        j["theory"] = s.theory;
        j["upper"] = s.upper;
        j["grid_size"] = s.grid_size;
        j["status"] = closed ? "closed" : "inconclusive";
      } catch (const std::exception& ex) {
        rep.fail_with(name, n, ex);
      }
    }
  }
  return inconclusive;
}

void sharpness_section(Report& rep, int n_max, std::uint64_t seed) {
  rep.section("sharpness");
  for (int n = 1; n <= std::min(n_max, 20); ++n) {
    try {
      double worst = 1.0;
      for (double x0 : kSharpnessPoints) {
        const double r = sharpness_ratio(build_pointwise_extremal(n, x0), x0);
        if (std::abs(r - 1.0) > std::abs(worst - 1.0)) worst = r;
      }
      rep.near("pointwise_extremal", n, worst, 1.0, 1e-9);
    } catch (const std::exception& ex) {
      rep.fail_with("pointwise_extremal", n, ex);
    }
  }
  const std::vector<ChebPoly> corpus = random_monotone_corpus(100, seed);
  std::mt19937_64 rng(seed ^ 0x5A5A5A5AULL);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double worst = 0.0;
  for (const ChebPoly& p : corpus) {
    const ExtremalPoly e = as_extremal(p);
    const double norm = sup_norm(p);
    for (int t = 0; t < 20; ++t) {
      const double x0 = unit(rng);
      worst = std::max(worst, eval(e.deriv, x0) / (pointwise_bound(e.n, x0).bound * norm));
    }
  }
  rep.add("random_corpus_max_ratio", 20, worst, 1.0, 1e-9, worst <= 1.0 + 1e-9)["seed"] = seed;
}

void remark_section(Report& rep, int n_max) {
  rep.section("remark_ratios");
  for (int n = 1; n <= n_max; ++n) {
    for (const ExtremalPoly& e : build_remark_family(n)) {
      const BestSharpness best = best_sharpness(e, 201);
      const bool agrees = std::abs(best.ratio - 1.0) <= 1e-9;
      // Recorded, never fatal.
      Json& j = rep.add(e.name, n, best.ratio, 1.0, 1e-9, true);
      j["k"] = n % 2 == 0 ? (n - 2) / 2 : (n - 1) / 2;
      j["argmax"] = best.x0;
      j["note"] = agrees ? "agrees" : "discrepancy-recorded";
    }
  }
}

void growth_section(Report& rep, int n_max) {
  rep.section("growth");
  std::vector<int> ns;
  for (int n = 1; n <= n_max; ++n) ns.push_back(n);
  for (const auto& [n, ratio] : growth_profile(ns)) {
    rep.add("bernstein_over_n", n, ratio, 1.0, 0.0, ratio < 1.0);
  }
  for (int m = 25; 2 * m <= n_max; m *= 2) {
    const double r = bernstein_constant(2 * m) / bernstein_constant(m);
    rep.near("doubling_ratio", m, r, 2.0, 0.1);
  }
}

}  // namespace

VerifyOutput cmd_verify(int n_max, std::uint64_t seed) {
  if (n_max < 1) throw ArgumentError("verify: n_max must be >= 1");
  Report rep;
  orthonormality_section(rep);
  cd_identity_section(rep, n_max, seed);
  szego_section(rep);
  endpoint_section(rep);
  markov_section(rep, n_max);
  const int inconclusive = sandwich_section(rep, n_max);
  sharpness_section(rep, n_max, seed);
  remark_section(rep, n_max);
  growth_section(rep, n_max);
  return rep.finish(inconclusive);
}

CommandOutput run_command(const RunConfig& config) {
  validate(config);
  switch (config.command) {
    case Command::Bound: return {cmd_bound(*config.n, *config.x0, config.format)};
    case Command::Table:
      return {cmd_table(config.n_max.value_or(config.n.value_or(kDefaultTableMax)), config.format)};
    case Command::Profile: return {cmd_profile(*config.n, config.grid, config.format)};
    case Command::Extremal: return {cmd_extremal(*config.n, config.x0, config.grid, config.format)};
    case Command::Verify: {
      const VerifyOutput v = cmd_verify(config.n_max.value_or(config.n.value_or(kDefaultVerifyMax)), config.seed);
      return {v.json, v.pass ? exit_status::kOk : exit_status::kVerificationFailure};
    }
  }
  throw ArgumentError("unknown command");
}

}  // namespace monomarkov

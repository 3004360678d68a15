#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "monomarkov/orthobasis.hpp"
#include "monomarkov/polycore.hpp"

namespace monomarkov {

/// A monotone polynomial built from a nonnegative density, shifted so that
/// poly(-1) = -poly(1).
struct ExtremalPoly {
  int n = 0;
  std::optional<double> x0;  // empty for the diagonal-sum family
  WeightId branch = WeightId::Legendre;
  std::string name;  // "pointwise", or "s_<k>", "h_<k>", "f_<k>" for the diagonal-sum family
  ChebPoly poly;
  ChebPoly deriv;
};

/// The polynomial attaining the pointwise bound at x0: its derivative is
/// w(t) K_k(t, x0)^2 for the winning branch. Throws
/// InternalConsistencyError if P'(x0) != bound * ||P|| to 1e-9 relative.
ExtremalPoly build_pointwise_extremal(int n, double x0);

/// Diagonal-sum family: s_k for n = 2k+2; h_k and f_k for n = 2k+1 (h_0 is
/// identically zero and is omitted).
std::vector<ExtremalPoly> build_remark_family(int n);

/// P'(x0) / (pointwise_bound(n, x0) * ||P||).
double sharpness_ratio(const ExtremalPoly& e, double x0);

/// Largest sharpness_ratio over a Chebyshev grid of the given size, with
/// ||P|| computed once.
struct BestSharpness {
  double ratio;
  double x0;
};
BestSharpness best_sharpness(const ExtremalPoly& e, int grid_size);

/// Wraps an arbitrary monotone polynomial for sharpness_ratio.
ExtremalPoly as_extremal(const ChebPoly& monotone_poly, std::string name = "corpus");

/// Nonnegative density of degree m in Lukacs form with standard-normal
/// Chebyshev coefficients:
///   m even: A^2 + (1-x^2) B^2,   m odd: (1+x) C^2 + (1-x) D^2.
ChebPoly lukacs_density(int m, std::mt19937_64& rng);

/// count monotone polynomials (antiderivatives of Lukacs densities with a
/// random additive shift), degrees 1..max_degree, reproducible from seed.
std::vector<ChebPoly> random_monotone_corpus(int count, std::uint64_t seed, int max_degree = 20);

/// Default seed for the corpus: the ASCII bytes "M0N0".
inline constexpr std::uint64_t kDefaultSeed = 0x4D304E30;

}  // namespace monomarkov

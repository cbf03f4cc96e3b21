#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "rinehart/tensor.hpp"

namespace rinehart {

/// Seeded generator of random exact inputs for the invariant suites.
///
/// Coefficients come from a small fixed pool per ring; polynomials have at
/// most `max_terms` terms of total degree <= max_degree. Draws only use raw
/// mt19937_64 output, so a seed reproduces the same inputs everywhere.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, int max_degree = 2, int max_terms = 3)
      : rng_(seed), max_degree_(max_degree), max_terms_(max_terms) {}

  std::size_t index(std::size_t bound) { return static_cast<std::size_t>(rng_() % bound); }
  Scalar scalar(const Ring& ring);
  Scalar nonzero_scalar(const Ring& ring);
  Monomial monomial(std::size_t nvars, int max_degree);
  Poly poly(const Ring& ring, std::size_t nvars);
  QuotientElem function(const FunctionAlgebra& alg) { return alg.reduce(poly(alg.ring(), alg.nvars())); }
  /// Random coefficients in the coordinate basis.
  VectorField field(const FunctionAlgebra& alg);
  /// Random O-combination sum_i g_i S_i of the given spanning fields.
  VectorField combination(std::span<const VectorField> spanning);

  int max_degree() const noexcept { return max_degree_; }

 private:
  std::mt19937_64 rng_;
  int max_degree_;
  int max_terms_;
};

}  // namespace rinehart

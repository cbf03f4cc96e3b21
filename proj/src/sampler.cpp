#include "rinehart/sampler.hpp"

#include <array>

namespace rinehart {

namespace {

const std::array<mpq_class, 8> kRationalPool = {
    mpq_class(1), mpq_class(-1), mpq_class(2), mpq_class(-2), mpq_class(3), mpq_class(1, 2), mpq_class(-1, 3), mpq_class(0)};

}  // namespace

Scalar Sampler::scalar(const Ring& ring) {
  auto base_value = [&]() -> mpq_class {
    if (ring.modulus() != 0) return mpq_class(static_cast<long>(rng_() % ring.modulus()));
    return kRationalPool[index(kRationalPool.size())];
  };
  if (ring.is_quad()) {
    mpq_class a = base_value();
    mpq_class b = base_value();
    return Scalar::from_parts(ring, a, b);
  }
  return Scalar::from_rational(ring, base_value());
}

Scalar Sampler::nonzero_scalar(const Ring& ring) {
  while (true) {
    Scalar s = scalar(ring);
    if (!s.is_zero()) return s;
  }
}

Monomial Sampler::monomial(std::size_t nvars, int max_degree) {
  Monomial m;
  int degree = static_cast<int>(index(static_cast<std::size_t>(max_degree) + 1));
  for (int k = 0; k < degree; ++k) ++m.exp[index(nvars)];
  m.degree = static_cast<std::uint32_t>(degree);
  return m;
}

Poly Sampler::poly(const Ring& ring, std::size_t nvars) {
  std::size_t count = index(static_cast<std::size_t>(max_terms_) + 1);
  std::vector<Term> terms;
  for (std::size_t k = 0; k < count; ++k) terms.push_back({monomial(nvars, max_degree_), nonzero_scalar(ring)});
  return Poly::from_terms(ring, nvars, std::move(terms));
}

VectorField Sampler::field(const FunctionAlgebra& alg) {
  std::vector<QuotientElem> c;
  for (std::size_t i = 0; i < alg.nvars(); ++i) c.push_back(function(alg));
  return VectorField(std::move(c));
}

VectorField Sampler::combination(std::span<const VectorField> spanning) {
  FunctionAlgebra alg = spanning.front().algebra();
  VectorField acc = VectorField::zero(alg);
  for (const auto& s : spanning) {
    QuotientElem g = function(alg);
    if (!g.is_zero()) acc += g * s;
  }
  return acc;
}

}  // namespace rinehart

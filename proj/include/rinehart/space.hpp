#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rinehart/tensor.hpp"

namespace rinehart {

class KoszulCache;

/// A Rinehart space in coordinates: the function algebra O (polynomials,
/// optionally modulo a principal ideal), the free module of vector fields
/// on the coordinate basis, one-forms on the dual basis, and a metric.
class RinehartSpace {
 public:
  /// The metric defaults to the Euclidean one. Metric entries are reduced
  /// into this space's function algebra.
  RinehartSpace(const Ring& ring, std::vector<std::string> names,
                std::shared_ptr<const PrincipalIdeal> ideal = nullptr, std::optional<Metric> metric = std::nullopt);

  const Ring& ring() const noexcept { return algebra_.ring(); }
  std::size_t dim() const noexcept { return algebra_.nvars(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const FunctionAlgebra& algebra() const noexcept { return algebra_; }
  const Metric& metric() const noexcept { return metric_; }
  bool is_euclidean() const noexcept { return euclidean_; }
  /// Euclidean, or the metric determinant is a certified unit.
  bool is_musical() const noexcept { return euclidean_ || inverse_.has_value(); }

  QuotientElem function(const Poly& p) const { return algebra_.reduce(p); }
  /// Parses a polynomial in this space's variables.
  QuotientElem parse(std::string_view text) const;
  QuotientElem coordinate(std::size_t i) const { return algebra_.coordinate(i); }
  VectorField basis(std::size_t i) const { return VectorField::basis(algebra_, i); }
  std::vector<VectorField> basis() const;
  VectorField zero_field() const { return VectorField::zero(algebra_); }
  VectorField field(std::vector<QuotientElem> coeffs) const;
  /// Reduces a field with the same ring and arity into this space.
  VectorField adopt(const VectorField& x) const { return rebase(x, algebra_); }

  QuotientElem inner(const VectorField& x, const VectorField& y) const;
  OneForm flat(const VectorField& x) const;
  /// Throws MetricNotMusical unless is_musical().
  VectorField sharp(const OneForm& w) const;

  /// df = sum_i (df/dx_i) w_i, computed on the canonical representative.
  OneForm differential(const QuotientElem& f) const;
  /// d_X f = <X, df>.
  QuotientElem derive(const VectorField& x, const QuotientElem& f) const;
  /// grad f = (df)^sharp.
  VectorField gradient(const QuotientElem& f) const;
  /// [X, Y]^k = d_X(Y^k) - d_Y(X^k).
  VectorField lie_bracket(const VectorField& x, const VectorField& y) const;

  /// Componentwise derivative; requires the Euclidean metric (NotEuclidean).
  VectorField flat_connection(const VectorField& x, const VectorField& y) const;
  /// Right side of the Koszul formula evaluated against every basis field:
  /// the one-form Z -> <nabla_X Y, Z>. Requires 2 to be a unit.
  OneForm koszul_form(const VectorField& x, const VectorField& y) const;
  /// Koszul form expanded through cached basis values (tensorial in X,
  /// Leibniz in Y). Agrees with koszul_form.
  OneForm koszul_lowered(const VectorField& x, const VectorField& y) const;
  /// Levi-Civita connection via the Koszul formula and sharp. Throws
  /// TwoNotAUnit or MetricNotMusical.
  VectorField koszul_connection(const VectorField& x, const VectorField& y) const;

 private:
  void require_member(const VectorField& x) const;
  void require_two_unit() const;

  std::vector<std::string> names_;
  FunctionAlgebra algebra_;
  Metric metric_;
  bool euclidean_;
  std::optional<Metric::Matrix> inverse_;
  std::shared_ptr<KoszulCache> koszul_cache_;
};

/// A connection given extensionally. The vector form may be absent when the
/// connection is only known through its lowering <nabla_X Y, .> (a Koszul
/// connection for a nondegenerate metric whose determinant is not a unit).
class Connection {
 public:
  using VectorFn = std::function<VectorField(const VectorField&, const VectorField&)>;
  using LoweredFn = std::function<OneForm(const VectorField&, const VectorField&)>;

  Connection(std::string name, VectorFn vector_fn, LoweredFn lowered_fn = {})
      : name_(std::move(name)), vector_fn_(std::move(vector_fn)), lowered_fn_(std::move(lowered_fn)) {}

  const std::string& name() const noexcept { return name_; }
  bool has_vector_form() const noexcept { return static_cast<bool>(vector_fn_); }

  /// Throws MetricNotMusical without a vector form.
  VectorField operator()(const VectorField& x, const VectorField& y) const;
  /// <nabla_X Y, .> with respect to the space's metric.
  OneForm lowered(const RinehartSpace& space, const VectorField& x, const VectorField& y) const;

 private:
  std::string name_;
  VectorFn vector_fn_;
  LoweredFn lowered_fn_;
};

/// Throws NotEuclidean for non-Euclidean metrics.
Connection make_flat_connection(const RinehartSpace& space);
/// Throws TwoNotAUnit in characteristic 2. The vector form is present only
/// for musical metrics.
Connection make_koszul_connection(const RinehartSpace& space);
/// The flat connection for Euclidean spaces, the Koszul one otherwise.
Connection make_levi_civita(const RinehartSpace& space);

/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
VectorField curvature(const RinehartSpace& space, const Connection& conn, const VectorField& x,
                      const VectorField& y, const VectorField& z);

}  // namespace rinehart

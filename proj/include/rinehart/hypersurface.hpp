#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rinehart/checks.hpp"

namespace rinehart {

struct SpaceFormReport {
  bool passed = false;
  bool curvature_ok = false;
  /// <Y_i, Y_j> == delta_ij - c y_i y_j for all i, j.
  bool metric_ok = false;
  std::size_t triples = 0;
  std::optional<std::array<std::size_t, 3>> failing_triple;
  std::optional<Counterexample> counterexample;
  std::optional<std::array<std::size_t, 2>> failing_metric_pair;
};

/// Quotient of an ambient space by a principal ideal (f), realized through
/// the normal field N = grad f and the projection X -> X - q<X,N>N, which is
/// a projection modulo (f) as long as 1 - q<N,N> lies in (f).
///
/// Fields passed in may live over the ambient polynomial ring or over the
/// quotient; results live over the quotient (coefficients in normal form).
class HypersurfaceSpace {
 public:
  /// Validates f nonconstant and 1 - q<N,N> in (f) (ValidationError). The
  /// ambient space must have no ideal and a Euclidean or constant musical
  /// metric.
  static HypersurfaceSpace make(const RinehartSpace& ambient, const Poly& f, const Poly& q);

  /// f = 1/2 (x1^2 + ... + xn^2 - 1/c), q = c. Requires c a unit, n >= 2 and
  /// characteristic != 2 (NotAUnit, ValidationError, CharTwoUnsupported).
  static HypersurfaceSpace make_sphere(const Ring& ring, std::size_t n, const Scalar& c,
                                       std::vector<std::string> names = {});

  const RinehartSpace& ambient() const noexcept { return ambient_; }
  const RinehartSpace& quotient_space() const noexcept { return quotient_; }
  const std::shared_ptr<const PrincipalIdeal>& ideal() const noexcept { return ideal_; }
  const Poly& generator() const noexcept { return ideal_->generator(); }
  /// N over the ambient ring.
  const VectorField& normal() const noexcept { return normal_; }
  const Poly& projection_unit() const noexcept { return q_; }
  /// Y_i = project_tangent(X_i).
  const std::vector<VectorField>& spanning() const noexcept { return spanning_; }
  /// c for spaces built with make_sphere.
  const std::optional<Scalar>& sphere_constant() const noexcept { return sphere_c_; }

  /// Representatives over the ambient ring.
  VectorField lift(const VectorField& x) const;
  /// Coefficients reduced modulo f.
  VectorField reduce(const VectorField& x) const;

  /// <X, N> in (f).
  bool is_tangent(const VectorField& x) const;
  VectorField project_tangent(const VectorField& x) const;
  /// q<X,N>N, the complement of project_tangent.
  VectorField project_normal(const VectorField& x) const;
  /// Every coefficient of X - Y lies in (f).
  bool quotient_equal(const VectorField& x, const VectorField& y) const;

  /// Tangential part of the ambient Levi-Civita connection. Throws
  /// NotTangent naming the offending argument.
  VectorField induced_connection(const VectorField& x, const VectorField& y) const;
  /// Normal part of the ambient connection on tangent fields.
  VectorField second_fundamental_form(const VectorField& x, const VectorField& y) const;
  /// The ambient connection applied to lifts, reduced modulo f.
  VectorField ambient_connection(const VectorField& x, const VectorField& y) const;

  Connection induced() const;

  /// Curvature identity over all spanning triples plus the induced metric
  /// values against delta_ij - c y_i y_j.
  SpaceFormReport verify_space_form(const Scalar& c) const;

 private:
  HypersurfaceSpace(RinehartSpace ambient, std::shared_ptr<const PrincipalIdeal> ideal, VectorField normal, Poly q,
                    RinehartSpace quotient);

  void require_tangent(const VectorField& x, const char* which) const;

  RinehartSpace ambient_;
  std::shared_ptr<const PrincipalIdeal> ideal_;
  VectorField normal_;
  Poly q_;
  RinehartSpace quotient_;
  Connection ambient_conn_;
  std::vector<VectorField> spanning_;
  std::optional<Scalar> sphere_c_;
};

}  // namespace rinehart

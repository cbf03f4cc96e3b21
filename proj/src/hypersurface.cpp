#include "rinehart/hypersurface.hpp"

#include <memory>

namespace rinehart {

namespace {

Connection ambient_levi_civita(const RinehartSpace& ambient) {
  if (ambient.algebra().is_quotient()) {
    throw Error(ErrorCode::ValidationError, "the ambient space must not carry an ideal");
  }
  if (!ambient.is_euclidean() && !(ambient.metric().is_constant() && ambient.is_musical())) {
    throw Error(ErrorCode::ValidationError, "hypersurfaces need a Euclidean or constant musical ambient metric");
  }
  return make_levi_civita(ambient);
}

}  // namespace

HypersurfaceSpace::HypersurfaceSpace(RinehartSpace ambient, std::shared_ptr<const PrincipalIdeal> ideal,
                                     VectorField normal, Poly q, RinehartSpace quotient)
    : ambient_(std::move(ambient)),
      ideal_(std::move(ideal)),
      normal_(std::move(normal)),
      q_(std::move(q)),
      quotient_(std::move(quotient)),
      ambient_conn_(ambient_levi_civita(ambient_)) {
  for (std::size_t i = 0; i < ambient_.dim(); ++i) spanning_.push_back(project_tangent(ambient_.basis(i)));
}

HypersurfaceSpace HypersurfaceSpace::make(const RinehartSpace& ambient, const Poly& f, const Poly& q) {
  ambient_levi_civita(ambient);
  auto ideal = std::make_shared<const PrincipalIdeal>(f);
  VectorField normal = ambient.gradient(ambient.function(f));
  QuotientElem nn = ambient.inner(normal, normal);
  Poly defect = Poly::constant(ambient.ring(), ambient.dim(), 1) - q * nn.rep();
  if (!ideal_member(defect, *ideal)) {
    throw Error(ErrorCode::ValidationError, "1 - q<N,N> is not in the ideal (f); q = " + q.to_string(ambient.names()));
  }
  RinehartSpace quotient(ambient.ring(), ambient.names(), ideal, ambient.metric());
  return HypersurfaceSpace(ambient, std::move(ideal), std::move(normal), q, std::move(quotient));
}

HypersurfaceSpace HypersurfaceSpace::make_sphere(const Ring& ring, std::size_t n, const Scalar& c,
                                                 std::vector<std::string> names) {
  if (ring.characteristic() == 2) {
    throw Error(ErrorCode::CharTwoUnsupported, "sphere construction needs 2 to be a unit");
  }
  if (n < 2) throw Error(ErrorCode::ValidationError, "sphere needs at least 2 coordinates");
  if (!c.is_unit()) throw Error(ErrorCode::NotAUnit, "curvature constant " + c.to_string() + " is not a unit");
  if (names.empty()) {
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  }
  if (names.size() != n) throw Error(ErrorCode::ArityMismatch, "need one name per coordinate");

  Poly sum_sq(ring, n);
  for (std::size_t i = 0; i < n; ++i) {
    Poly x = Poly::variable(ring, n, i);
    sum_sq += x * x;
  }
  Scalar half = Scalar::from_int(ring, 2).inverse();
  Poly f = half * (sum_sq - Poly::constant(ring, n, c.inverse()));
  RinehartSpace ambient(ring, std::move(names));
  HypersurfaceSpace h = make(ambient, f, Poly::constant(ring, n, c));
  h.sphere_c_ = c;
  return h;
}

VectorField HypersurfaceSpace::lift(const VectorField& x) const {
  if (x.dim() != ambient_.dim() || !(x.algebra().ring() == ambient_.ring())) {
    throw Error(ErrorCode::SpaceMismatch, "vector field does not belong to this hypersurface");
  }
  return rebase(x, ambient_.algebra());
}

VectorField HypersurfaceSpace::reduce(const VectorField& x) const { return rebase(lift(x), quotient_.algebra()); }

bool HypersurfaceSpace::is_tangent(const VectorField& x) const {
  return ideal_member(ambient_.inner(lift(x), normal_).rep(), *ideal_);
}

VectorField HypersurfaceSpace::project_tangent(const VectorField& x) const {
  VectorField xl = lift(x);
  QuotientElem t = ambient_.function(q_) * ambient_.inner(xl, normal_);
  return rebase(xl - t * normal_, quotient_.algebra());
}

VectorField HypersurfaceSpace::project_normal(const VectorField& x) const {
  VectorField xl = lift(x);
  QuotientElem t = ambient_.function(q_) * ambient_.inner(xl, normal_);
  return rebase(t * normal_, quotient_.algebra());
}

bool HypersurfaceSpace::quotient_equal(const VectorField& x, const VectorField& y) const {
  return (reduce(x) - reduce(y)).is_zero();
}

void HypersurfaceSpace::require_tangent(const VectorField& x, const char* which) const {
  if (!is_tangent(x)) {
    throw Error(ErrorCode::NotTangent, std::string(which) + " argument is not tangent: " +
                                           reduce(x).to_string(ambient_.names()));
  }
}

VectorField HypersurfaceSpace::ambient_connection(const VectorField& x, const VectorField& y) const {
  return rebase(ambient_conn_(lift(x), lift(y)), quotient_.algebra());
}

VectorField HypersurfaceSpace::induced_connection(const VectorField& x, const VectorField& y) const {
  require_tangent(x, "first");
  require_tangent(y, "second");
  return project_tangent(ambient_conn_(lift(x), lift(y)));
}

VectorField HypersurfaceSpace::second_fundamental_form(const VectorField& x, const VectorField& y) const {
  require_tangent(x, "first");
  require_tangent(y, "second");
  return project_normal(ambient_conn_(lift(x), lift(y)));
}

Connection HypersurfaceSpace::induced() const {
  auto self = std::make_shared<const HypersurfaceSpace>(*this);
  return Connection("induced", [self](const VectorField& x, const VectorField& y) {
    return self->induced_connection(x, y);
  });
}

SpaceFormReport HypersurfaceSpace::verify_space_form(const Scalar& c) const {
  SpaceFormReport report;
  CurvatureReport curv = check_constant_curvature(quotient_, induced(), c, spanning_);
  report.curvature_ok = curv.passed;
  report.triples = curv.triples;
  report.failing_triple = curv.failing_triple;
  report.counterexample = curv.counterexample;

  report.metric_ok = true;
  const FunctionAlgebra& alg = quotient_.algebra();
  const QuotientElem cc = alg.constant(c);
  for (std::size_t i = 0; i < spanning_.size() && report.metric_ok; ++i) {
    for (std::size_t j = 0; j < spanning_.size(); ++j) {
      QuotientElem expected = (i == j ? alg.one() : alg.zero()) - cc * alg.coordinate(i) * alg.coordinate(j);
      if (quotient_.inner(spanning_[i], spanning_[j]) == expected) continue;
      report.metric_ok = false;
      report.failing_metric_pair = {i, j};
      break;
    }
  }
  report.passed = report.curvature_ok && report.metric_ok;
  return report;
}

}  // namespace rinehart

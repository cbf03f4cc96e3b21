#include "rinehart/quotient.hpp"

namespace rinehart {

namespace {

Poly reduce_rep(const std::shared_ptr<const PrincipalIdeal>& ideal, Poly p) {
  if (!ideal) return p;
  if (!(p.ring() == ideal->generator().ring()) || p.nvars() != ideal->generator().nvars()) {
    throw Error(ErrorCode::IdealMismatch, "polynomial does not live in the ideal's ring");
  }
  return normal_form(p, *ideal);
}

void require_same_ideal(const QuotientElem& a, const QuotientElem& b) {
  if (!same_ideal(a.ideal(), b.ideal())) {
    throw Error(ErrorCode::IdealMismatch, "operands live in different quotient algebras");
  }
}

// Units of K[x1..xn] are the units of K whenever K has no nilpotents,
// which fails only for the split extension al^2 = 1 in characteristic 2.
bool ground_ring_reduced(const Ring& ring) { return !(ring.is_quad() && ring.characteristic() == 2); }

std::optional<std::size_t> single_variable(const Poly& p) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    if (!p.uses_variable(i)) continue;
    if (found) return std::nullopt;
    found = i;
  }
  return found;
}

}  // namespace

bool same_ideal(const std::shared_ptr<const PrincipalIdeal>& a, const std::shared_ptr<const PrincipalIdeal>& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

FunctionAlgebra::FunctionAlgebra(const Ring& ring, std::size_t nvars, std::shared_ptr<const PrincipalIdeal> ideal)
    : ring_(&ring), nvars_(nvars), ideal_(std::move(ideal)) {
  if (ideal_ && (!(ideal_->generator().ring() == ring) || ideal_->generator().nvars() != nvars)) {
    throw Error(ErrorCode::IdealMismatch, "ideal generator does not match the algebra");
  }
}

QuotientElem FunctionAlgebra::reduce(const Poly& p) const { return QuotientElem(ideal_, p); }
QuotientElem FunctionAlgebra::zero() const { return reduce(Poly(*ring_, nvars_)); }
QuotientElem FunctionAlgebra::one() const { return constant(1); }
QuotientElem FunctionAlgebra::constant(const Scalar& c) const { return reduce(Poly::constant(*ring_, nvars_, c)); }
QuotientElem FunctionAlgebra::constant(long c) const { return reduce(Poly::constant(*ring_, nvars_, c)); }
QuotientElem FunctionAlgebra::coordinate(std::size_t i) const { return reduce(Poly::variable(*ring_, nvars_, i)); }

bool operator==(const FunctionAlgebra& a, const FunctionAlgebra& b) {
  return a.ring_ == b.ring_ && a.nvars_ == b.nvars_ && same_ideal(a.ideal_, b.ideal_);
}

QuotientElem::QuotientElem(std::shared_ptr<const PrincipalIdeal> ideal, Poly rep)
    : ideal_(std::move(ideal)), rep_(reduce_rep(ideal_, std::move(rep))) {}

QuotientElem QuotientElem::operator-() const {
  QuotientElem r = *this;
  r.rep_ = -rep_;
  return r;
}

QuotientElem operator+(const QuotientElem& a, const QuotientElem& b) {
  require_same_ideal(a, b);
  // sums of normal forms stay reduced
  QuotientElem r = a;
  r.rep_ = a.rep_ + b.rep_;
  return r;
}

QuotientElem operator-(const QuotientElem& a, const QuotientElem& b) {
  require_same_ideal(a, b);
  QuotientElem r = a;
  r.rep_ = a.rep_ - b.rep_;
  return r;
}

QuotientElem operator*(const QuotientElem& a, const QuotientElem& b) {
  require_same_ideal(a, b);
  if (a.rep_.is_constant() || b.rep_.is_constant()) {
    QuotientElem r = a;
    r.rep_ = a.rep_ * b.rep_;
    return r;
  }
  return QuotientElem(a.ideal_, a.rep_ * b.rep_);
}

QuotientElem operator*(const Scalar& c, const QuotientElem& a) {
  QuotientElem r = a;
  r.rep_ = c * a.rep_;
  return r;
}

bool operator==(const QuotientElem& a, const QuotientElem& b) {
  return same_ideal(a.ideal_, b.ideal_) && a.rep_ == b.rep_;
}

QuotientElem quotient_arith(const QuotientElem& a, const QuotientElem& b, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
  }
  return a;
}

UnitCertificate quotient_is_unit(const QuotientElem& a) {
  const Poly& rep = a.rep();
  const Ring& ring = rep.ring();
  FunctionAlgebra alg = a.algebra();
  if (rep.is_zero()) return {UnitStatus::NotUnit, std::nullopt};

  if (rep.is_constant()) {
    Scalar c = rep.constant_value();
    if (c.is_unit()) return {UnitStatus::Unit, alg.constant(c.inverse())};
    // A generator with unit leading coefficient never divides a nonzero
    // constant, so a zero divisor of K stays a zero divisor in O.
    return {UnitStatus::NotUnit, std::nullopt};
  }

  if (!ground_ring_reduced(ring)) return {UnitStatus::Undecidable, std::nullopt};
  if (!a.ideal()) return {UnitStatus::NotUnit, std::nullopt};

  const Poly& f = a.ideal()->generator();
  bool disjoint = true;
  for (std::size_t i = 0; i < rep.nvars(); ++i) {
    if (rep.uses_variable(i) && f.uses_variable(i)) disjoint = false;
  }
  // a is a nonconstant polynomial over K in variables free in K[vars(f)]/(f)
  if (disjoint) return {UnitStatus::NotUnit, std::nullopt};

  auto va = single_variable(rep);
  auto vf = single_variable(f);
  if (!va || !vf || *va != *vf || !ring.is_field()) return {UnitStatus::Undecidable, std::nullopt};

  // Extended Euclid in K[x_k]; tracks the cofactor of a only.
  Poly r0 = f, r1 = rep;
  Poly s0(ring, rep.nvars()), s1 = Poly::constant(ring, rep.nvars(), 1);
  while (!r1.is_zero()) {
    DivisionResult qr = divide(r0, r1);
    Poly s2 = s0 - qr.quotient * s1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (!r0.is_constant()) return {UnitStatus::NotUnit, std::nullopt};
  Scalar g_inv = r0.constant_value().inverse();
  return {UnitStatus::Unit, alg.reduce(g_inv * s0)};
}

}  // namespace rinehart

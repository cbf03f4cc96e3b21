#pragma once

#include <memory>
#include <optional>

#include "rinehart/poly.hpp"

namespace rinehart {

class QuotientElem;

/// The function algebra O: either K[x1..xn] or K[x1..xn]/(f).
class FunctionAlgebra {
 public:
  FunctionAlgebra(const Ring& ring, std::size_t nvars, std::shared_ptr<const PrincipalIdeal> ideal = nullptr);

  const Ring& ring() const noexcept { return *ring_; }
  std::size_t nvars() const noexcept { return nvars_; }
  /// Null for the ambient polynomial ring.
  const std::shared_ptr<const PrincipalIdeal>& ideal() const noexcept { return ideal_; }
  bool is_quotient() const noexcept { return ideal_ != nullptr; }

  QuotientElem reduce(const Poly& p) const;
  QuotientElem zero() const;
  QuotientElem one() const;
  QuotientElem constant(const Scalar& c) const;
  QuotientElem constant(long c) const;
  QuotientElem coordinate(std::size_t i) const;

  /// Same ring, arity and ideal.
  friend bool operator==(const FunctionAlgebra& a, const FunctionAlgebra& b);

 private:
  const Ring* ring_;
  std::size_t nvars_;
  std::shared_ptr<const PrincipalIdeal> ideal_;
};

/// Canonical representative of a class in O. Equality is representation
/// equality, which is class equality because normal forms are unique.
class QuotientElem {
 public:
  QuotientElem(std::shared_ptr<const PrincipalIdeal> ideal, Poly rep);

  const Poly& rep() const noexcept { return rep_; }
  const std::shared_ptr<const PrincipalIdeal>& ideal() const noexcept { return ideal_; }
  const Ring& ring() const noexcept { return rep_.ring(); }
  std::size_t nvars() const noexcept { return rep_.nvars(); }
  FunctionAlgebra algebra() const { return FunctionAlgebra(rep_.ring(), rep_.nvars(), ideal_); }

  bool is_zero() const noexcept { return rep_.is_zero(); }

  QuotientElem operator-() const;
  friend QuotientElem operator+(const QuotientElem& a, const QuotientElem& b);
  friend QuotientElem operator-(const QuotientElem& a, const QuotientElem& b);
  friend QuotientElem operator*(const QuotientElem& a, const QuotientElem& b);
  friend QuotientElem operator*(const Scalar& c, const QuotientElem& a);
  QuotientElem& operator+=(const QuotientElem& b) { return *this = *this + b; }
  QuotientElem& operator-=(const QuotientElem& b) { return *this = *this - b; }
  QuotientElem& operator*=(const QuotientElem& b) { return *this = *this * b; }

  friend bool operator==(const QuotientElem& a, const QuotientElem& b);

  std::string to_string(std::span<const std::string> names) const { return rep_.to_string(names); }

 private:
  std::shared_ptr<const PrincipalIdeal> ideal_;
  Poly rep_;
};

bool same_ideal(const std::shared_ptr<const PrincipalIdeal>& a, const std::shared_ptr<const PrincipalIdeal>& b);

QuotientElem quotient_arith(const QuotientElem& a, const QuotientElem& b, PolyOp op);

enum class UnitStatus { Unit, NotUnit, Undecidable };

struct UnitCertificate {
  UnitStatus status = UnitStatus::Undecidable;
  /// Present whenever status is Unit.
  std::optional<QuotientElem> inverse;
};

/// Decides invertibility where this is possible with elementary means:
/// constants, the ambient ring, univariate quotients (extended Euclid) and
/// elements whose variables are disjoint from the generator's.
UnitCertificate quotient_is_unit(const QuotientElem& a);

}  // namespace rinehart

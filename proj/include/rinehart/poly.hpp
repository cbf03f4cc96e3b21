#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rinehart/ground_ring.hpp"

namespace rinehart {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector. Slots at or beyond the owning polynomial's arity are 0.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t degree = 0;

  static Monomial variable(std::size_t i) {
    Monomial m;
    m.exp[i] = 1;
    m.degree = 1;
    return m;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exp[i] > other.exp[i]) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
    m.degree = a.degree + b.degree;
    return m;
  }

  /// a / b; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
    m.degree = a.degree - b.degree;
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

/// Graded reverse lexicographic order with x1 > x2 > ... > xn.
/// Returns true when a is strictly greater than b.
bool grevlex_greater(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse multivariate polynomial over a ground ring, terms kept strictly
/// descending in grevlex with no zero coefficients.
class Poly {
 public:
  Poly(const Ring& ring, std::size_t nvars);

  static Poly constant(const Ring& ring, std::size_t nvars, const Scalar& c);
  static Poly constant(const Ring& ring, std::size_t nvars, long c) {
    return constant(ring, nvars, Scalar::from_int(ring, c));
  }
  /// The coordinate x_i (0-based index).
  static Poly variable(const Ring& ring, std::size_t nvars, std::size_t i);
  static Poly monomial(const Ring& ring, std::size_t nvars, const Monomial& m, const Scalar& c);
  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static Poly from_terms(const Ring& ring, std::size_t nvars, std::vector<Term> terms);

  const Ring& ring() const noexcept { return *ring_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree == 0); }
  /// Constant coefficient value (zero for the zero polynomial).
  Scalar constant_value() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree); }
  const Term& leading() const { return terms_.front(); }
  /// True if x_i occurs in some term.
  bool uses_variable(std::size_t i) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& c, const Poly& a);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  /// c*m*this without re-sorting (multiplication by a monomial preserves order).
  Poly mul_term(const Monomial& m, const Scalar& c) const;

  friend bool operator==(const Poly& a, const Poly& b);

  /// Renders with the given variable names; output re-parses to an equal Poly.
  std::string to_string(std::span<const std::string> names) const;

 private:
  const Ring* ring_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

enum class PolyOp { Add, Sub, Mul };

Poly poly_arith(const Poly& a, const Poly& b, PolyOp op);

/// Formal derivative with respect to x_i (0-based).
Poly partial_derivative(const Poly& a, std::size_t i);

/// Principal ideal (f) with f nonconstant and a unit leading coefficient.
class PrincipalIdeal {
 public:
  explicit PrincipalIdeal(Poly generator);

  const Poly& generator() const noexcept { return generator_; }
  /// generator scaled so its leading coefficient is 1
  const Poly& monic() const noexcept { return monic_; }

  friend bool operator==(const PrincipalIdeal& a, const PrincipalIdeal& b) { return a.monic_ == b.monic_; }

 private:
  Poly generator_;
  Poly monic_;
};

struct DivisionResult {
  Poly quotient;
  Poly remainder;
};

/// Multivariate division of g by the single divisor f (grevlex). The
/// remainder has no term divisible by lead(f) and g = quotient*f + remainder.
DivisionResult divide(const Poly& g, const Poly& f);

Poly normal_form(const Poly& g, const PrincipalIdeal& f);
bool ideal_member(const Poly& g, const PrincipalIdeal& f);

}  // namespace rinehart

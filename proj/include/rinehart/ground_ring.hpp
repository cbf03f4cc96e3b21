#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "rinehart/errors.hpp"

namespace rinehart {

enum class RingKind { Rationals, PrimeField, QuadExt };

/// Plain description of a ground ring, as it appears in spec files.
///
/// For QuadExt the base is either Rationals or PrimeField(p) (carried in
/// `base_kind` / `p`) and the adjoined element satisfies al^2 = s.
struct RingDescriptor {
  RingKind kind = RingKind::Rationals;
  RingKind base_kind = RingKind::Rationals;
  std::uint64_t p = 0;
  int s = 0;

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

/// An interned ground ring. Rings are created once per descriptor and live
/// for the duration of the program, so two rings are equal iff they are the
/// same object.
class Ring {
 public:
  static const Ring& rationals();
  /// Throws InvalidRing unless p is prime.
  static const Ring& prime_field(std::uint64_t p);
  /// Throws InvalidRing unless base is Rationals or PrimeField and s = +-1.
  static const Ring& quad_ext(const Ring& base, int s);
  static const Ring& from_descriptor(const RingDescriptor& d);

  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

  RingKind kind() const noexcept { return desc_.kind; }
  const RingDescriptor& descriptor() const noexcept { return desc_; }
  /// Base ring of a quadratic extension; the ring itself otherwise.
  const Ring& base() const noexcept { return base_ ? *base_ : *this; }
  std::uint64_t characteristic() const noexcept { return desc_.p; }
  /// Modulus of the prime field underlying this ring (0 over Q).
  std::uint64_t modulus() const noexcept { return desc_.p; }
  int quad_s() const noexcept { return desc_.s; }
  bool is_quad() const noexcept { return desc_.kind == RingKind::QuadExt; }
  /// False for quadratic extensions in which al^2 - s splits.
  bool is_field() const;

  std::string to_string() const;

 private:
  friend class RingRegistry;
  explicit Ring(RingDescriptor d, const Ring* base) : desc_(d), base_(base) {}

  RingDescriptor desc_;
  const Ring* base_ = nullptr;
};

inline bool operator==(const Ring& a, const Ring& b) noexcept { return &a == &b; }

std::uint64_t characteristic(const Ring& ring);
bool is_prime(std::uint64_t n);

/// Exact element of a ground ring in canonical form.
///
/// Over Q the value is a normalized fraction, over F_p a residue in [0, p),
/// and over a quadratic extension a pair (a, b) meaning a + b*al.
class Scalar {
 public:
  using Base = std::variant<mpq_class, std::uint64_t>;

  explicit Scalar(const Ring& ring);
  static Scalar zero(const Ring& ring) { return Scalar(ring); }
  static Scalar one(const Ring& ring) { return from_int(ring, 1); }
  static Scalar from_int(const Ring& ring, long value);
  /// Maps num/den into the ring. Over F_p this needs den to be invertible
  /// mod p (NotAUnit otherwise).
  static Scalar from_rational(const Ring& ring, const mpq_class& value);
  /// a + b*al; only valid for quadratic extensions.
  static Scalar from_parts(const Ring& ring, const mpq_class& a, const mpq_class& b);
  static Scalar adjoined(const Ring& ring);

  const Ring& ring() const noexcept { return *ring_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;
  /// Throws NotAUnit when no inverse exists.
  Scalar inverse() const;

  /// Real part (or the whole value) as a base-ring element.
  const Base& re() const noexcept { return re_; }
  const Base& im() const noexcept { return im_; }
  /// True when the value needs more than one summand to print.
  bool is_compound() const;
  /// True when printing starts with a minus sign (rationals only).
  bool is_negative_rational() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical exact rendering: "5/6", "3", "1+2*al", "-al".
  std::string to_string() const;

 private:
  Scalar(const Ring& ring, Base re, Base im) : ring_(&ring), re_(std::move(re)), im_(std::move(im)) {}

  const Ring* ring_;
  Base re_;
  Base im_;
};

Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_inverse(const Scalar& a);
bool is_unit(const Scalar& a);

}  // namespace rinehart

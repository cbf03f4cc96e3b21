#include "rinehart/ground_ring.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace rinehart {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::InvalidRing: return "InvalidRing";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidIdeal: return "InvalidIdeal";
    case ErrorCode::IdealMismatch: return "IdealMismatch";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::MetricNotMusical: return "MetricNotMusical";
    case ErrorCode::NotEuclidean: return "NotEuclidean";
    case ErrorCode::TwoNotAUnit: return "TwoNotAUnit";
    case ErrorCode::NotTangent: return "NotTangent";
    case ErrorCode::CharTwoUnsupported: return "CharTwoUnsupported";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

class RingRegistry {
 public:
  static const Ring& get(const RingDescriptor& d) {
    static RingRegistry registry;
    std::lock_guard lock(registry.mutex_);
    auto key = std::make_tuple(static_cast<int>(d.kind), static_cast<int>(d.base_kind), d.p, d.s);
    auto it = registry.rings_.find(key);
    if (it != registry.rings_.end()) return *it->second;
    const Ring* base = nullptr;
    if (d.kind == RingKind::QuadExt) {
      RingDescriptor bd{d.base_kind, d.base_kind, d.p, 0};
      auto bkey = std::make_tuple(static_cast<int>(bd.kind), static_cast<int>(bd.kind), bd.p, 0);
      auto& slot = registry.rings_[bkey];
      if (!slot) slot.reset(new Ring(bd, nullptr));
      base = slot.get();
    }
    auto& slot = registry.rings_[key];
    slot.reset(new Ring(d, base));
    return *slot;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, int, std::uint64_t, int>, std::unique_ptr<Ring>> rings_;
};

const Ring& Ring::rationals() {
  return RingRegistry::get({RingKind::Rationals, RingKind::Rationals, 0, 0});
}

const Ring& Ring::prime_field(std::uint64_t p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::InvalidRing, "modulus " + std::to_string(p) + " is not prime");
  }
  if (p >= (std::uint64_t{1} << 62)) {
    throw Error(ErrorCode::InvalidRing, "modulus " + std::to_string(p) + " is too large");
  }
  return RingRegistry::get({RingKind::PrimeField, RingKind::PrimeField, p, 0});
}

const Ring& Ring::quad_ext(const Ring& base, int s) {
  if (base.kind() == RingKind::QuadExt) {
    throw Error(ErrorCode::InvalidRing, "quadratic extensions cannot be nested");
  }
  if (s != 1 && s != -1) {
    throw Error(ErrorCode::InvalidRing, "quadratic extension needs s = 1 or s = -1");
  }
  return RingRegistry::get({RingKind::QuadExt, base.kind(), base.modulus(), s});
}

const Ring& Ring::from_descriptor(const RingDescriptor& d) {
  switch (d.kind) {
    case RingKind::Rationals: return rationals();
    case RingKind::PrimeField: return prime_field(d.p);
    case RingKind::QuadExt: {
      if (d.base_kind == RingKind::QuadExt) {
        throw Error(ErrorCode::InvalidRing, "quadratic extensions cannot be nested");
      }
      const Ring& base = d.base_kind == RingKind::Rationals ? rationals() : prime_field(d.p);
      return quad_ext(base, d.s);
    }
  }
  throw Error(ErrorCode::InvalidRing, "unknown ring kind");
}

bool Ring::is_field() const {
  if (!is_quad()) return true;
  // al^2 - s is irreducible iff s is not a square in the base.
  if (base().kind() == RingKind::Rationals) return desc_.s == -1;
  std::uint64_t p = desc_.p;
  std::uint64_t target = desc_.s == 1 ? 1 : p - 1;
  if (p == 2) return false;
  for (std::uint64_t x = 0; x < p; ++x) {
    if (static_cast<unsigned __int128>(x) * x % p == target) return false;
  }
  return true;
}

std::string Ring::to_string() const {
  switch (kind()) {
    case RingKind::Rationals: return "Q";
    case RingKind::PrimeField: return "F" + std::to_string(desc_.p);
    case RingKind::QuadExt:
      return base().to_string() + "[al]/(al^2" + (desc_.s == 1 ? "-1" : "+1") + ")";
  }
  return "?";
}

std::uint64_t characteristic(const Ring& ring) { return ring.characteristic(); }

namespace {

using Base = Scalar::Base;

std::uint64_t mod_reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return r.get_ui();
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 result = 1, base = b % p;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

// Base-ring helpers. `p == 0` selects the rationals.
Base base_zero(std::uint64_t p) {
  if (p == 0) return mpq_class(0);
  return std::uint64_t{0};
}

Base base_from(const mpq_class& v, std::uint64_t p) {
  if (p == 0) {
    mpq_class c(v);
    c.canonicalize();
    return c;
  }
  std::uint64_t den = mod_reduce(v.get_den(), p);
  if (den == 0) {
    throw Error(ErrorCode::NotAUnit,
                "denominator " + v.get_den().get_str() + " is not invertible mod " + std::to_string(p));
  }
  std::uint64_t num = mod_reduce(v.get_num(), p);
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(num) * mod_pow(den, p - 2, p) % p);
}

Base base_add(const Base& a, const Base& b, std::uint64_t p) {
  if (p == 0) return mpq_class(std::get<mpq_class>(a) + std::get<mpq_class>(b));
  std::uint64_t s = std::get<std::uint64_t>(a) + std::get<std::uint64_t>(b);
  return s >= p ? s - p : s;
}

Base base_neg(const Base& a, std::uint64_t p) {
  if (p == 0) return mpq_class(-std::get<mpq_class>(a));
  std::uint64_t v = std::get<std::uint64_t>(a);
  return v == 0 ? v : p - v;
}

Base base_mul(const Base& a, const Base& b, std::uint64_t p) {
  if (p == 0) return mpq_class(std::get<mpq_class>(a) * std::get<mpq_class>(b));
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(std::get<std::uint64_t>(a)) *
                                    std::get<std::uint64_t>(b) % p);
}

bool base_is_zero(const Base& a, std::uint64_t p) {
  if (p == 0) return sgn(std::get<mpq_class>(a)) == 0;
  return std::get<std::uint64_t>(a) == 0;
}

Base base_inverse(const Base& a, std::uint64_t p) {
  if (base_is_zero(a, p)) throw Error(ErrorCode::NotAUnit, "zero is not a unit");
  if (p == 0) return mpq_class(1 / std::get<mpq_class>(a));
  return mod_pow(std::get<std::uint64_t>(a), p - 2, p);
}

std::string base_str(const Base& a, std::uint64_t p) {
  if (p == 0) return std::get<mpq_class>(a).get_str();
  return std::to_string(std::get<std::uint64_t>(a));
}

bool base_is_one(const Base& a, std::uint64_t p) {
  if (p == 0) return std::get<mpq_class>(a) == 1;
  return std::get<std::uint64_t>(a) == 1;
}

void require_same(const Scalar& a, const Scalar& b) {
  if (!(a.ring() == b.ring())) {
    throw Error(ErrorCode::RingMismatch,
                "ring mismatch: " + a.ring().to_string() + " vs " + b.ring().to_string());
  }
}

}  // namespace

Scalar::Scalar(const Ring& ring)
    : ring_(&ring), re_(base_zero(ring.modulus())), im_(base_zero(ring.modulus())) {}

Scalar Scalar::from_int(const Ring& ring, long value) {
  return from_rational(ring, mpq_class(value));
}

Scalar Scalar::from_rational(const Ring& ring, const mpq_class& value) {
  std::uint64_t p = ring.modulus();
  return Scalar(ring, base_from(value, p), base_zero(p));
}

Scalar Scalar::from_parts(const Ring& ring, const mpq_class& a, const mpq_class& b) {
  if (!ring.is_quad()) {
    throw Error(ErrorCode::RingMismatch, "al is only defined in quadratic extensions");
  }
  std::uint64_t p = ring.modulus();
  return Scalar(ring, base_from(a, p), base_from(b, p));
}

Scalar Scalar::adjoined(const Ring& ring) { return from_parts(ring, 0, 1); }

bool Scalar::is_zero() const {
  std::uint64_t p = ring_->modulus();
  return base_is_zero(re_, p) && base_is_zero(im_, p);
}

bool Scalar::is_one() const {
  std::uint64_t p = ring_->modulus();
  return base_is_one(re_, p) && base_is_zero(im_, p);
}

bool Scalar::is_unit() const {
  std::uint64_t p = ring_->modulus();
  if (!ring_->is_quad()) return !base_is_zero(re_, p);
  // norm a^2 - s*b^2 must be nonzero in the base field
  Base s = base_from(mpq_class(ring_->quad_s()), p);
  Base norm = base_add(base_mul(re_, re_, p), base_neg(base_mul(s, base_mul(im_, im_, p), p), p), p);
  return !base_is_zero(norm, p);
}

Scalar Scalar::inverse() const {
  std::uint64_t p = ring_->modulus();
  if (!ring_->is_quad()) {
    if (base_is_zero(re_, p)) throw Error(ErrorCode::NotAUnit, "0 is not a unit in " + ring_->to_string());
    return Scalar(*ring_, base_inverse(re_, p), base_zero(p));
  }
  Base s = base_from(mpq_class(ring_->quad_s()), p);
  Base norm = base_add(base_mul(re_, re_, p), base_neg(base_mul(s, base_mul(im_, im_, p), p), p), p);
  if (base_is_zero(norm, p)) {
    throw Error(ErrorCode::NotAUnit, to_string() + " is not a unit in " + ring_->to_string());
  }
  Base inv = base_inverse(norm, p);
  return Scalar(*ring_, base_mul(re_, inv, p), base_neg(base_mul(im_, inv, p), p));
}

bool Scalar::is_compound() const {
  std::uint64_t p = ring_->modulus();
  return !base_is_zero(re_, p) && !base_is_zero(im_, p);
}

bool Scalar::is_negative_rational() const {
  if (ring_->modulus() != 0) return false;
  if (!base_is_zero(re_, 0)) return sgn(std::get<mpq_class>(re_)) < 0;
  return sgn(std::get<mpq_class>(im_)) < 0;
}

Scalar Scalar::operator-() const {
  std::uint64_t p = ring_->modulus();
  return Scalar(*ring_, base_neg(re_, p), base_neg(im_, p));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  std::uint64_t p = a.ring_->modulus();
  return Scalar(*a.ring_, base_add(a.re_, b.re_, p), base_add(a.im_, b.im_, p));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  const Ring& r = *a.ring_;
  std::uint64_t p = r.modulus();
  if (!r.is_quad()) return Scalar(r, base_mul(a.re_, b.re_, p), base_zero(p));
  // (a + b al)(c + d al) = ac + s bd + (ad + bc) al
  Base bd = base_mul(a.im_, b.im_, p);
  if (r.quad_s() == -1) bd = base_neg(bd, p);
  Base re = base_add(base_mul(a.re_, b.re_, p), bd, p);
  Base im = base_add(base_mul(a.re_, b.im_, p), base_mul(a.im_, b.re_, p), p);
  return Scalar(r, std::move(re), std::move(im));
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.ring_ == b.ring_ && a.re_ == b.re_ && a.im_ == b.im_;
}

std::string Scalar::to_string() const {
  std::uint64_t p = ring_->modulus();
  bool has_re = !base_is_zero(re_, p);
  bool has_im = !base_is_zero(im_, p);
  if (!has_im) return base_str(re_, p);
  std::string im;
  if (base_is_one(im_, p)) {
    im = "al";
  } else if (p == 0 && std::get<mpq_class>(im_) == -1) {
    im = "-al";
  } else {
    im = base_str(im_, p) + "*al";
  }
  if (!has_re) return im;
  std::string out = base_str(re_, p);
  if (im.front() != '-') out += '+';
  return out + im;
}

Scalar scalar_add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }
Scalar scalar_inverse(const Scalar& a) { return a.inverse(); }
bool is_unit(const Scalar& a) { return a.is_unit(); }

}  // namespace rinehart

#include "rinehart/poly.hpp"

#include <algorithm>
#include <map>

namespace rinehart {

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree > b.degree;
  // Equal degree: the smaller exponent in the last differing variable wins.
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
  }
  return false;
}

namespace {

void require_compatible(const Poly& a, const Poly& b) {
  if (!(a.ring() == b.ring())) {
    throw Error(ErrorCode::RingMismatch,
                "ring mismatch: " + a.ring().to_string() + " vs " + b.ring().to_string());
  }
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorCode::ArityMismatch, "arity mismatch: " + std::to_string(a.nvars()) + " vs " +
                                              std::to_string(b.nvars()));
  }
}

std::string monomial_string(const Monomial& m, std::size_t n, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m.exp[i] > 1) out += '^' + std::to_string(m.exp[i]);
  }
  return out;
}

}  // namespace

Poly::Poly(const Ring& ring, std::size_t nvars) : ring_(&ring), nvars_(nvars) {
  if (nvars == 0 || nvars > kMaxVars) {
    throw Error(ErrorCode::ArityMismatch,
                "variable count must be between 1 and " + std::to_string(kMaxVars));
  }
}

Poly Poly::constant(const Ring& ring, std::size_t nvars, const Scalar& c) {
  return monomial(ring, nvars, Monomial{}, c);
}

Poly Poly::variable(const Ring& ring, std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw Error(ErrorCode::IndexOutOfRange, "variable index " + std::to_string(i) + " out of range");
  return monomial(ring, nvars, Monomial::variable(i), Scalar::one(ring));
}

Poly Poly::monomial(const Ring& ring, std::size_t nvars, const Monomial& m, const Scalar& c) {
  if (!(c.ring() == ring)) throw Error(ErrorCode::RingMismatch, "coefficient from a different ring");
  Poly p(ring, nvars);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(const Ring& ring, std::size_t nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex_greater(a.mono, b.mono); });
  Poly p(ring, nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
  return p;
}

Scalar Poly::constant_value() const {
  if (!terms_.empty() && terms_.back().mono.degree == 0) return terms_.back().coeff;
  return Scalar::zero(*ring_);
}

bool Poly::uses_variable(std::size_t i) const {
  return std::any_of(terms_.begin(), terms_.end(), [i](const Term& t) { return t.mono.exp[i] != 0; });
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  require_compatible(a, b);
  Poly r(*a.ring_, a.nvars_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() && j != b.terms_.end()) {
    if (i->mono == j->mono) {
      Scalar c = i->coeff + j->coeff;
      if (!c.is_zero()) r.terms_.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    } else if (grevlex_greater(i->mono, j->mono)) {
      r.terms_.push_back(*i++);
    } else {
      r.terms_.push_back(*j++);
    }
  }
  r.terms_.insert(r.terms_.end(), i, a.terms_.end());
  r.terms_.insert(r.terms_.end(), j, b.terms_.end());
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  require_compatible(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(*a.ring_, a.nvars_);
  if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  }
  return Poly::from_terms(*a.ring_, a.nvars_, std::move(prod));
}

Poly operator*(const Scalar& c, const Poly& a) { return a.mul_term(Monomial{}, c); }

Poly Poly::mul_term(const Monomial& m, const Scalar& c) const {
  if (!(c.ring() == *ring_)) throw Error(ErrorCode::RingMismatch, "coefficient from a different ring");
  Poly r(*ring_, nvars_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar p = t.coeff * c;
    // zero divisors in split quadratic extensions can annihilate terms
    if (!p.is_zero()) r.terms_.push_back({t.mono * m, std::move(p)});
  }
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!(a.ring() == b.ring()) || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (!(a.terms_[k].mono == b.terms_[k].mono) || !(a.terms_[k].coeff == b.terms_[k].coeff)) return false;
  }
  return true;
}

std::string Poly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coeff.is_negative_rational();
    Scalar magnitude = negative ? -t.coeff : t.coeff;
    std::string mono = monomial_string(t.mono, nvars_, names);
    std::string body;
    if (mono.empty()) {
      body = magnitude.to_string();
      if (magnitude.is_compound() && (!first || negative)) body = "(" + body + ")";
    } else if (magnitude.is_one()) {
      body = mono;
    } else if (magnitude.is_compound()) {
      body = "(" + magnitude.to_string() + ")*" + mono;
    } else {
      body = magnitude.to_string() + "*" + mono;
    }
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += body;
    first = false;
  }
  return out;
}

Poly poly_arith(const Poly& a, const Poly& b, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
  }
  return a;
}

Poly partial_derivative(const Poly& a, std::size_t i) {
  if (i >= a.nvars()) {
    throw Error(ErrorCode::IndexOutOfRange, "derivative index " + std::to_string(i) + " out of range");
  }
  std::vector<Term> out;
  for (const auto& t : a.terms()) {
    if (t.mono.exp[i] == 0) continue;
    Term d = t;
    d.coeff = t.coeff * Scalar::from_int(a.ring(), t.mono.exp[i]);
    if (d.coeff.is_zero()) continue;
    --d.mono.exp[i];
    --d.mono.degree;
    out.push_back(std::move(d));
  }
  // Differentiation can reorder monomials, so normalize.
  return Poly::from_terms(a.ring(), a.nvars(), std::move(out));
}

PrincipalIdeal::PrincipalIdeal(Poly generator) : generator_(std::move(generator)), monic_(generator_) {
  if (generator_.is_constant()) {
    throw Error(ErrorCode::InvalidIdeal, "ideal generator must be nonconstant");
  }
  const Scalar& lc = generator_.leading().coeff;
  if (!lc.is_unit()) {
    throw Error(ErrorCode::InvalidIdeal, "leading coefficient " + lc.to_string() + " is not a unit");
  }
  monic_ = lc.inverse() * generator_;
}

DivisionResult divide(const Poly& g, const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidIdeal, "division by zero polynomial");
  if (!(g.ring() == f.ring()) || g.nvars() != f.nvars()) {
    // reuse the arity/ring diagnostics of addition
    (void)(g + f);
  }
  const Ring& ring = g.ring();
  const std::size_t n = g.nvars();
  const Monomial& lead = f.leading().mono;
  Scalar lc_inv = f.leading().coeff.inverse();
  Poly tail = f - Poly::monomial(ring, n, lead, f.leading().coeff);

  struct Descending {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
  };
  std::map<Monomial, Scalar, Descending> rest;
  for (const auto& t : g.terms()) rest.emplace(t.mono, t.coeff);

  std::vector<Term> quotient;
  std::vector<Term> remainder;
  while (!rest.empty()) {
    auto top = rest.begin();
    Term lt{top->first, std::move(top->second)};
    rest.erase(top);
    if (!lead.divides(lt.mono)) {
      remainder.push_back(std::move(lt));
      continue;
    }
    Monomial m = lt.mono / lead;
    Scalar c = lt.coeff * lc_inv;
    // subtract c*m*tail; the leading term cancels by construction
    for (const auto& t : tail.terms()) {
      Scalar delta = -(t.coeff * c);
      auto [it, inserted] = rest.try_emplace(t.mono * m, delta);
      if (!inserted) {
        it->second = it->second + delta;
        if (it->second.is_zero()) rest.erase(it);
      } else if (delta.is_zero()) {
        rest.erase(it);
      }
    }
    quotient.push_back({m, std::move(c)});
  }
  return {Poly::from_terms(ring, n, std::move(quotient)), Poly::from_terms(ring, n, std::move(remainder))};
}

Poly normal_form(const Poly& g, const PrincipalIdeal& f) { return divide(g, f.monic()).remainder; }

bool ideal_member(const Poly& g, const PrincipalIdeal& f) { return normal_form(g, f).is_zero(); }

}  // namespace rinehart

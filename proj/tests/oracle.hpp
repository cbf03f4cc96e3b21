#pragma once

// Evaluation at points of the sphere sum x_i^2 = 1/c. Two polynomials that
// agree modulo the sphere ideal agree at every such point, and the check
// goes through plain GMP arithmetic only, never through the division code.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "rinehart/poly.hpp"

namespace oracle {

/// a + b*i with rational parts; i^2 = -1.
struct Gauss {
  mpq_class re = 0, im = 0;

  friend Gauss operator+(const Gauss& x, const Gauss& y) { return {x.re + y.re, x.im + y.im}; }
  friend Gauss operator-(const Gauss& x, const Gauss& y) { return {x.re - y.re, x.im - y.im}; }
  friend Gauss operator*(const Gauss& x, const Gauss& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const Gauss& x, const Gauss& y) { return x.re == y.re && x.im == y.im; }
  bool is_zero() const { return re == 0 && im == 0; }
};

inline mpq_class rational_of(const rinehart::Scalar& s) {
  mpq_class q(s.to_string());
  q.canonicalize();
  return q;
}

/// Evaluates a polynomial over Q at a point with Gaussian-rational entries.
inline Gauss eval(const rinehart::Poly& p, const std::vector<Gauss>& point) {
  Gauss sum;
  for (const auto& t : p.terms()) {
    Gauss term{rational_of(t.coeff), 0};
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (unsigned e = 0; e < t.mono.exp[i]; ++e) term = term * point[i];
    }
    sum = sum + term;
  }
  return sum;
}

/// Rational points on the unit sphere in dimension n by inverse
/// stereographic projection from (u_1, ..., u_{n-1}).
inline std::vector<std::vector<mpq_class>> unit_sphere_points(std::size_t n, std::size_t count) {
  std::vector<std::vector<mpq_class>> out;
  for (std::size_t k = 0; out.size() < count; ++k) {
    std::vector<mpq_class> u(n - 1);
    mpq_class norm = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      u[i] = mpq_class(static_cast<long>((k * (2 * i + 3) + i) % 7) - 3, static_cast<long>(i % 3 + 1 + k % 2));
      u[i].canonicalize();
      norm += u[i] * u[i];
    }
    std::vector<mpq_class> x(n);
    for (std::size_t i = 0; i + 1 < n; ++i) x[i] = 2 * u[i] / (norm + 1);
    x[n - 1] = (norm - 1) / (norm + 1);
    for (auto& v : x) v.canonicalize();
    out.push_back(std::move(x));
  }
  return out;
}

/// Points with sum x_i^2 = 1/c for c in {1, 4, -1, ...}: c > 0 must be a
/// square of an integer, c < 0 must be minus such a square.
inline std::vector<std::vector<Gauss>> sphere_points(std::size_t n, long c, std::size_t count) {
  long mag = c < 0 ? -c : c;
  long root = 1;
  while (root * root < mag) ++root;
  std::vector<std::vector<Gauss>> out;
  for (const auto& x : unit_sphere_points(n, count)) {
    std::vector<Gauss> p;
    for (const auto& v : x) {
      mpq_class s = v / root;
      s.canonicalize();
      p.push_back(c < 0 ? Gauss{0, s} : Gauss{s, 0});
    }
    out.push_back(std::move(p));
  }
  return out;
}

/// True when a and b agree at every sample point.
inline bool agree_on(const rinehart::Poly& a, const rinehart::Poly& b, const std::vector<std::vector<Gauss>>& points) {
  for (const auto& pt : points) {
    if (!(eval(a, pt) == eval(b, pt))) return false;
  }
  return true;
}

}  // namespace oracle

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rinehart/quotient.hpp"

namespace rinehart {

/// Coefficient tuple over O in a fixed coordinate basis. Instantiated as
/// VectorField (basis X_i = d/dx_i) and OneForm (dual basis w_i = dx_i).
template <class Tag>
class CoordinateField {
 public:
  explicit CoordinateField(std::vector<QuotientElem> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorCode::ArityMismatch, "fields need at least one coefficient");
    for (const auto& c : coeffs_) {
      if (!same_ideal(c.ideal(), coeffs_[0].ideal()) || !(c.ring() == coeffs_[0].ring()) ||
          c.nvars() != coeffs_.size()) {
        throw Error(ErrorCode::SpaceMismatch, "field coefficients must share one function algebra");
      }
    }
  }

  static CoordinateField zero(const FunctionAlgebra& alg) {
    return CoordinateField(std::vector<QuotientElem>(alg.nvars(), alg.zero()));
  }
  /// i-th basis element.
  static CoordinateField basis(const FunctionAlgebra& alg, std::size_t i) {
    if (i >= alg.nvars()) throw Error(ErrorCode::IndexOutOfRange, "basis index out of range");
    std::vector<QuotientElem> c(alg.nvars(), alg.zero());
    c[i] = alg.one();
    return CoordinateField(std::move(c));
  }

  std::size_t dim() const noexcept { return coeffs_.size(); }
  const QuotientElem& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<QuotientElem>& coeffs() const noexcept { return coeffs_; }
  FunctionAlgebra algebra() const { return coeffs_[0].algebra(); }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  friend CoordinateField operator+(const CoordinateField& a, const CoordinateField& b) {
    require_same_space(a, b);
    std::vector<QuotientElem> c;
    c.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) c.push_back(a.coeffs_[i] + b.coeffs_[i]);
    return CoordinateField(std::move(c));
  }
  friend CoordinateField operator-(const CoordinateField& a, const CoordinateField& b) {
    require_same_space(a, b);
    std::vector<QuotientElem> c;
    c.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) c.push_back(a.coeffs_[i] - b.coeffs_[i]);
    return CoordinateField(std::move(c));
  }
  CoordinateField operator-() const {
    std::vector<QuotientElem> c;
    for (const auto& x : coeffs_) c.push_back(-x);
    return CoordinateField(std::move(c));
  }
  friend CoordinateField operator*(const QuotientElem& f, const CoordinateField& a) {
    std::vector<QuotientElem> c;
    c.reserve(a.dim());
    for (const auto& x : a.coeffs_) c.push_back(f * x);
    return CoordinateField(std::move(c));
  }
  friend CoordinateField operator*(const Scalar& s, const CoordinateField& a) {
    std::vector<QuotientElem> c;
    c.reserve(a.dim());
    for (const auto& x : a.coeffs_) c.push_back(s * x);
    return CoordinateField(std::move(c));
  }
  CoordinateField& operator+=(const CoordinateField& b) { return *this = *this + b; }
  CoordinateField& operator-=(const CoordinateField& b) { return *this = *this - b; }

  friend bool operator==(const CoordinateField& a, const CoordinateField& b) { return a.coeffs_ == b.coeffs_; }

  /// JSON-style list of polynomial strings: ["2*x", "0"].
  std::string to_string(std::span<const std::string> names) const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) out += ", ";
      out += '"' + coeffs_[i].to_string(names) + '"';
    }
    return out + "]";
  }

  static void require_same_space(const CoordinateField& a, const CoordinateField& b) {
    if (a.dim() != b.dim() || !(a.algebra() == b.algebra())) {
      throw Error(ErrorCode::SpaceMismatch, "fields belong to different spaces");
    }
  }

 private:
  std::vector<QuotientElem> coeffs_;
};

struct TangentTag;
struct CotangentTag;
using VectorField = CoordinateField<TangentTag>;
using OneForm = CoordinateField<CotangentTag>;

/// Reinterprets the coefficients in another function algebra with the same
/// ring and arity (lift to the ambient ring, or reduce into a quotient).
template <class Tag>
CoordinateField<Tag> rebase(const CoordinateField<Tag>& field, const FunctionAlgebra& target) {
  std::vector<QuotientElem> c;
  c.reserve(field.dim());
  for (const auto& x : field.coeffs()) c.push_back(target.reduce(x.rep()));
  return CoordinateField<Tag>(std::move(c));
}

/// Symmetric bilinear form given by its Gram matrix in the coordinate basis.
class Metric {
 public:
  using Matrix = std::vector<std::vector<QuotientElem>>;

  /// Throws ValidationError unless square, n x n and symmetric.
  explicit Metric(Matrix g);

  static Metric euclidean(const FunctionAlgebra& alg);
  static Metric diagonal(std::vector<QuotientElem> entries);

  std::size_t dim() const noexcept { return g_.size(); }
  const QuotientElem& operator()(std::size_t i, std::size_t j) const { return g_[i][j]; }
  const Matrix& matrix() const noexcept { return g_; }
  FunctionAlgebra algebra() const { return g_[0][0].algebra(); }

  bool is_euclidean() const;
  /// Every entry is a ground-ring constant.
  bool is_constant() const;

  QuotientElem determinant() const;
  /// Inverse via adjugate over det; nullopt unless det is a certified unit.
  std::optional<Matrix> inverse() const;
  /// Same entries reduced into another algebra of the same arity.
  Metric rebase(const FunctionAlgebra& target) const;

 private:
  Matrix g_;
};

/// Determinant by division-free expansion over subsets of columns.
QuotientElem determinant(const Metric::Matrix& m);

QuotientElem pairing(const VectorField& x, const OneForm& w);
QuotientElem inner(const VectorField& x, const VectorField& y, const Metric& g);
OneForm flat(const VectorField& x, const Metric& g);
/// Throws MetricNotMusical unless det(g) is a certified unit.
VectorField sharp(const OneForm& w, const Metric& g);
/// Applies a precomputed inverse Gram matrix.
VectorField sharp_with(const OneForm& w, const Metric::Matrix& inverse);

/// X lies in the maximal ideal submodule of (f): <X, X_j> in (f) for all j.
bool in_maximal_ideal_submodule(const VectorField& x, const PrincipalIdeal& f, const Metric& g);

}  // namespace rinehart

#include "rinehart/tensor.hpp"

#include <bit>

namespace rinehart {

Metric::Metric(Matrix g) : g_(std::move(g)) {
  const std::size_t n = g_.size();
  if (n == 0) throw Error(ErrorCode::ValidationError, "metric must be nonempty");
  for (const auto& row : g_) {
    if (row.size() != n) throw Error(ErrorCode::ValidationError, "metric must be square");
  }
  if (g_[0][0].nvars() != n) {
    throw Error(ErrorCode::ValidationError, "metric size must equal the number of coordinates");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(g_[i][j].algebra() == g_[0][0].algebra())) {
        throw Error(ErrorCode::SpaceMismatch, "metric entries must share one function algebra");
      }
      if (j > i && !(g_[i][j] == g_[j][i])) {
        throw Error(ErrorCode::ValidationError,
                    "metric is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
}

Metric Metric::euclidean(const FunctionAlgebra& alg) {
  Matrix g(alg.nvars(), std::vector<QuotientElem>(alg.nvars(), alg.zero()));
  for (std::size_t i = 0; i < alg.nvars(); ++i) g[i][i] = alg.one();
  return Metric(std::move(g));
}

Metric Metric::diagonal(std::vector<QuotientElem> entries) {
  if (entries.empty()) throw Error(ErrorCode::ValidationError, "metric must be nonempty");
  FunctionAlgebra alg = entries[0].algebra();
  Matrix g(entries.size(), std::vector<QuotientElem>(entries.size(), alg.zero()));
  for (std::size_t i = 0; i < entries.size(); ++i) g[i][i] = std::move(entries[i]);
  return Metric(std::move(g));
}

bool Metric::is_euclidean() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      const Poly& p = g_[i][j].rep();
      if (i == j ? !(p.is_constant() && p.constant_value().is_one()) : !p.is_zero()) return false;
    }
  }
  return true;
}

bool Metric::is_constant() const {
  for (const auto& row : g_) {
    for (const auto& e : row) {
      if (!e.rep().is_constant()) return false;
    }
  }
  return true;
}

QuotientElem determinant(const Metric::Matrix& m) {
  const std::size_t n = m.size();
  FunctionAlgebra alg = m[0][0].algebra();
  // minors[S] = det of rows 0..|S|-1 restricted to the columns in S
  std::vector<std::optional<QuotientElem>> minors(std::size_t{1} << n);
  minors[0] = alg.one();
  for (std::size_t set = 1; set < minors.size(); ++set) {
    std::size_t row = static_cast<std::size_t>(std::popcount(set)) - 1;
    QuotientElem acc = alg.zero();
    std::size_t k = 0;
    for (std::size_t col = 0; col < n; ++col) {
      if (!(set & (std::size_t{1} << col))) continue;
      const QuotientElem& entry = m[row][col];
      if (!entry.is_zero()) {
        QuotientElem term = entry * *minors[set & ~(std::size_t{1} << col)];
        if ((row + k) % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      ++k;
    }
    minors[set] = std::move(acc);
  }
  return *minors.back();
}

QuotientElem Metric::determinant() const { return rinehart::determinant(g_); }

std::optional<Metric::Matrix> Metric::inverse() const {
  UnitCertificate cert = quotient_is_unit(determinant());
  if (cert.status != UnitStatus::Unit) return std::nullopt;
  const std::size_t n = dim();
  FunctionAlgebra alg = algebra();
  Matrix inv(n, std::vector<QuotientElem>(n, alg.zero()));
  if (n == 1) {
    inv[0][0] = *cert.inverse;
    return inv;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<QuotientElem> row;
        for (std::size_t c = 0; c < n; ++c) {
          if (c != j) row.push_back(g_[r][c]);
        }
        minor.push_back(std::move(row));
      }
      QuotientElem cof = rinehart::determinant(minor) * *cert.inverse;
      // adjugate is the transposed cofactor matrix
      inv[j][i] = (i + j) % 2 == 0 ? cof : -cof;
    }
  }
  return inv;
}

Metric Metric::rebase(const FunctionAlgebra& target) const {
  Matrix g;
  for (const auto& row : g_) {
    std::vector<QuotientElem> r;
    for (const auto& e : row) r.push_back(target.reduce(e.rep()));
    g.push_back(std::move(r));
  }
  return Metric(std::move(g));
}

QuotientElem pairing(const VectorField& x, const OneForm& w) {
  if (x.dim() != w.dim() || !(x.algebra() == w.algebra())) {
    throw Error(ErrorCode::SpaceMismatch, "vector field and one-form belong to different spaces");
  }
  QuotientElem acc = x.algebra().zero();
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (!x[i].is_zero() && !w[i].is_zero()) acc += x[i] * w[i];
  }
  return acc;
}

OneForm flat(const VectorField& x, const Metric& g) {
  if (x.dim() != g.dim() || !(x.algebra() == g.algebra())) {
    throw Error(ErrorCode::SpaceMismatch, "vector field and metric belong to different spaces");
  }
  FunctionAlgebra alg = x.algebra();
  std::vector<QuotientElem> c;
  c.reserve(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    QuotientElem acc = alg.zero();
    for (std::size_t j = 0; j < x.dim(); ++j) {
      if (!g(i, j).is_zero() && !x[j].is_zero()) acc += g(i, j) * x[j];
    }
    c.push_back(std::move(acc));
  }
  return OneForm(std::move(c));
}

QuotientElem inner(const VectorField& x, const VectorField& y, const Metric& g) {
  return pairing(x, flat(y, g));
}

VectorField sharp_with(const OneForm& w, const Metric::Matrix& inverse) {
  FunctionAlgebra alg = w.algebra();
  std::vector<QuotientElem> c;
  c.reserve(w.dim());
  for (std::size_t i = 0; i < w.dim(); ++i) {
    QuotientElem acc = alg.zero();
    for (std::size_t j = 0; j < w.dim(); ++j) {
      if (!inverse[i][j].is_zero() && !w[j].is_zero()) acc += inverse[i][j] * w[j];
    }
    c.push_back(std::move(acc));
  }
  return VectorField(std::move(c));
}

VectorField sharp(const OneForm& w, const Metric& g) {
  if (w.dim() != g.dim() || !(w.algebra() == g.algebra())) {
    throw Error(ErrorCode::SpaceMismatch, "one-form and metric belong to different spaces");
  }
  if (g.is_euclidean()) return VectorField(w.coeffs());
  auto inv = g.inverse();
  if (!inv) {
    throw Error(ErrorCode::MetricNotMusical, "metric determinant is not a certified unit");
  }
  return sharp_with(w, *inv);
}

bool in_maximal_ideal_submodule(const VectorField& x, const PrincipalIdeal& f, const Metric& g) {
  if (g.is_euclidean()) {
    for (const auto& c : x.coeffs()) {
      if (!ideal_member(c.rep(), f)) return false;
    }
    return true;
  }
  if (quotient_is_unit(g.determinant()).status != UnitStatus::Unit) {
    throw Error(ErrorCode::MetricNotMusical, "metric determinant is not a certified unit");
  }
  OneForm lowered = flat(x, g);
  for (const auto& c : lowered.coeffs()) {
    if (!ideal_member(c.rep(), f)) return false;
  }
  return true;
}

}  // namespace rinehart

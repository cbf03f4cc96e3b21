#include "rinehart/space.hpp"

#include <map>
#include <mutex>

#include "rinehart/parse.hpp"

namespace rinehart {

/// Memo of the Koszul connection on basis pairs. Entries are deterministic
/// functions of the space, so concurrent writers store identical values.
class KoszulCache {
 public:
  template <class Compute>
  OneForm lowered(std::size_t i, std::size_t j, Compute&& compute) {
    {
      std::lock_guard lock(mutex_);
      auto it = lowered_.find({i, j});
      if (it != lowered_.end()) return it->second;
    }
    OneForm value = compute();
    std::lock_guard lock(mutex_);
    return lowered_.insert_or_assign({i, j}, std::move(value)).first->second;
  }

  template <class Compute>
  VectorField raised(std::size_t i, std::size_t j, Compute&& compute) {
    {
      std::lock_guard lock(mutex_);
      auto it = raised_.find({i, j});
      if (it != raised_.end()) return it->second;
    }
    VectorField value = compute();
    std::lock_guard lock(mutex_);
    return raised_.insert_or_assign({i, j}, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, std::size_t>, OneForm> lowered_;
  std::map<std::pair<std::size_t, std::size_t>, VectorField> raised_;
};

RinehartSpace::RinehartSpace(const Ring& ring, std::vector<std::string> names,
                             std::shared_ptr<const PrincipalIdeal> ideal, std::optional<Metric> metric)
    : names_(std::move(names)),
      algebra_(ring, names_.size(), std::move(ideal)),
      metric_(metric ? metric->rebase(algebra_) : Metric::euclidean(algebra_)),
      euclidean_(metric_.is_euclidean()),
      koszul_cache_(std::make_shared<KoszulCache>()) {
  if (!euclidean_) inverse_ = metric_.inverse();
}

QuotientElem RinehartSpace::parse(std::string_view text) const {
  return algebra_.reduce(parse_poly(text, ring(), names_));
}

std::vector<VectorField> RinehartSpace::basis() const {
  std::vector<VectorField> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis(i));
  return out;
}

VectorField RinehartSpace::field(std::vector<QuotientElem> coeffs) const {
  VectorField x(std::move(coeffs));
  require_member(x);
  return x;
}

void RinehartSpace::require_member(const VectorField& x) const {
  if (x.dim() != dim() || !(x.algebra() == algebra_)) {
    throw Error(ErrorCode::SpaceMismatch, "vector field does not belong to this space");
  }
}

void RinehartSpace::require_two_unit() const {
  if (!Scalar::from_int(ring(), 2).is_unit()) {
    throw Error(ErrorCode::TwoNotAUnit, "2 is not a unit in " + ring().to_string());
  }
}

QuotientElem RinehartSpace::inner(const VectorField& x, const VectorField& y) const {
  require_member(x);
  require_member(y);
  if (euclidean_) return pairing(x, OneForm(y.coeffs()));
  return rinehart::inner(x, y, metric_);
}

OneForm RinehartSpace::flat(const VectorField& x) const {
  require_member(x);
  if (euclidean_) return OneForm(x.coeffs());
  return rinehart::flat(x, metric_);
}

VectorField RinehartSpace::sharp(const OneForm& w) const {
  if (w.dim() != dim() || !(w.algebra() == algebra_)) {
    throw Error(ErrorCode::SpaceMismatch, "one-form does not belong to this space");
  }
  if (euclidean_) return VectorField(w.coeffs());
  if (!inverse_) throw Error(ErrorCode::MetricNotMusical, "metric determinant is not a certified unit");
  return sharp_with(w, *inverse_);
}

OneForm RinehartSpace::differential(const QuotientElem& f) const {
  if (!(f.algebra() == algebra_)) {
    throw Error(ErrorCode::SpaceMismatch, "function does not belong to this space");
  }
  std::vector<QuotientElem> c;
  c.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) c.push_back(algebra_.reduce(partial_derivative(f.rep(), i)));
  return OneForm(std::move(c));
}

QuotientElem RinehartSpace::derive(const VectorField& x, const QuotientElem& f) const {
  require_member(x);
  if (!(f.algebra() == algebra_)) {
    throw Error(ErrorCode::SpaceMismatch, "function does not belong to this space");
  }
  if (f.rep().is_constant()) return algebra_.zero();
  Poly acc(ring(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero() || !f.rep().uses_variable(i)) continue;
    acc += x[i].rep() * partial_derivative(f.rep(), i);
  }
  return algebra_.reduce(acc);
}

VectorField RinehartSpace::gradient(const QuotientElem& f) const { return sharp(differential(f)); }

VectorField RinehartSpace::lie_bracket(const VectorField& x, const VectorField& y) const {
  require_member(x);
  require_member(y);
  std::vector<QuotientElem> c;
  c.reserve(dim());
  for (std::size_t k = 0; k < dim(); ++k) c.push_back(derive(x, y[k]) - derive(y, x[k]));
  return VectorField(std::move(c));
}

VectorField RinehartSpace::flat_connection(const VectorField& x, const VectorField& y) const {
  if (!euclidean_) throw Error(ErrorCode::NotEuclidean, "the flat connection needs the Euclidean metric");
  require_member(x);
  require_member(y);
  std::vector<QuotientElem> c;
  c.reserve(dim());
  for (std::size_t k = 0; k < dim(); ++k) c.push_back(derive(x, y[k]));
  return VectorField(std::move(c));
}

OneForm RinehartSpace::koszul_form(const VectorField& x, const VectorField& y) const {
  require_two_unit();
  require_member(x);
  require_member(y);
  const Scalar half = Scalar::from_int(ring(), 2).inverse();
  const QuotientElem xy = inner(x, y);
  const VectorField bracket_xy = lie_bracket(x, y);
  std::vector<QuotientElem> c;
  c.reserve(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    VectorField z = basis(k);
    VectorField bracket_yz = lie_bracket(y, z);
    VectorField bracket_zx = lie_bracket(z, x);
    QuotientElem x_yz = inner(x, bracket_yz);
    QuotientElem dz_xy = derive(z, xy);
    QuotientElem cyclic = derive(x, inner(y, z)) + x_yz + derive(y, inner(z, x)) + inner(y, bracket_zx) +
                          dz_xy + inner(z, bracket_xy);
    c.push_back(half * cyclic - dz_xy - x_yz);
  }
  return OneForm(std::move(c));
}

OneForm RinehartSpace::koszul_lowered(const VectorField& x, const VectorField& y) const {
  require_two_unit();
  require_member(x);
  require_member(y);
  std::vector<QuotientElem> dxy;
  for (std::size_t k = 0; k < dim(); ++k) dxy.push_back(derive(x, y[k]));
  OneForm acc = flat(VectorField(std::move(dxy)));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      OneForm gamma = koszul_cache_->lowered(i, j, [&] { return koszul_form(basis(i), basis(j)); });
      if (!gamma.is_zero()) acc += (x[i] * y[j]) * gamma;
    }
  }
  return acc;
}

VectorField RinehartSpace::koszul_connection(const VectorField& x, const VectorField& y) const {
  require_two_unit();
  if (!is_musical()) throw Error(ErrorCode::MetricNotMusical, "metric determinant is not a certified unit");
  require_member(x);
  require_member(y);
  std::vector<QuotientElem> c;
  for (std::size_t k = 0; k < dim(); ++k) c.push_back(derive(x, y[k]));
  VectorField acc(std::move(c));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      VectorField gamma = koszul_cache_->raised(i, j, [&] {
        return sharp(koszul_cache_->lowered(i, j, [&] { return koszul_form(basis(i), basis(j)); }));
      });
      if (!gamma.is_zero()) acc += (x[i] * y[j]) * gamma;
    }
  }
  return acc;
}

VectorField Connection::operator()(const VectorField& x, const VectorField& y) const {
  if (!vector_fn_) {
    throw Error(ErrorCode::MetricNotMusical, "connection '" + name_ + "' has no vector form for this metric");
  }
  return vector_fn_(x, y);
}

OneForm Connection::lowered(const RinehartSpace& space, const VectorField& x, const VectorField& y) const {
  if (lowered_fn_) return lowered_fn_(x, y);
  return space.flat((*this)(x, y));
}

Connection make_flat_connection(const RinehartSpace& space) {
  if (!space.is_euclidean()) throw Error(ErrorCode::NotEuclidean, "the flat connection needs the Euclidean metric");
  return Connection("flat", [space](const VectorField& x, const VectorField& y) {
    return space.flat_connection(x, y);
  });
}

Connection make_koszul_connection(const RinehartSpace& space) {
  if (!Scalar::from_int(space.ring(), 2).is_unit()) {
    throw Error(ErrorCode::TwoNotAUnit, "2 is not a unit in " + space.ring().to_string());
  }
  Connection::VectorFn vec;
  if (space.is_musical()) {
    vec = [space](const VectorField& x, const VectorField& y) { return space.koszul_connection(x, y); };
  }
  return Connection("koszul", std::move(vec), [space](const VectorField& x, const VectorField& y) {
    return space.koszul_lowered(x, y);
  });
}

Connection make_levi_civita(const RinehartSpace& space) {
  return space.is_euclidean() ? make_flat_connection(space) : make_koszul_connection(space);
}

VectorField curvature(const RinehartSpace& space, const Connection& conn, const VectorField& x,
                      const VectorField& y, const VectorField& z) {
  return conn(x, conn(y, z)) - conn(y, conn(x, z)) - conn(space.lie_bracket(x, y), z);
}

}  // namespace rinehart

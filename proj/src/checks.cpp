#include "rinehart/checks.hpp"

#include "rinehart/sampler.hpp"

namespace rinehart {

namespace {

std::string show(const RinehartSpace& space, const VectorField& x) { return x.to_string(space.names()); }
std::string show(const RinehartSpace& space, const OneForm& w) { return w.to_string(space.names()); }

struct LeviCivitaProbe {
  const RinehartSpace& space;
  const Connection& conn;
  LeviCivitaReport& report;

  void torsion(const VectorField& x, const VectorField& y) {
    if (!report.torsion_free) return;
    VectorField bracket = space.lie_bracket(x, y);
    if (conn.has_vector_form()) {
      VectorField residual = conn(x, y) - conn(y, x) - bracket;
      if (residual.is_zero()) return;
      report.torsion_free = false;
      report.torsion_counterexample = Counterexample{{"X = " + show(space, x), "Y = " + show(space, y),
                                                      "nabla_X Y - nabla_Y X - [X,Y] = " + show(space, residual)}};
      return;
    }
    OneForm residual = conn.lowered(space, x, y) - conn.lowered(space, y, x) - space.flat(bracket);
    if (residual.is_zero()) return;
    report.torsion_free = false;
    report.torsion_counterexample =
        Counterexample{{"X = " + show(space, x), "Y = " + show(space, y),
                        "<nabla_X Y - nabla_Y X - [X,Y], .> = " + show(space, residual)}};
  }

  void compatibility(const VectorField& x, const VectorField& y, const VectorField& z) {
    if (!report.metric_compatible) return;
    QuotientElem lhs = space.derive(x, space.inner(y, z));
    QuotientElem rhs = pairing(z, conn.lowered(space, x, y)) + pairing(y, conn.lowered(space, x, z));
    QuotientElem residual = lhs - rhs;
    if (residual.is_zero()) return;
    report.metric_compatible = false;
    report.compatibility_counterexample = Counterexample{
        {"X = " + show(space, x), "Y = " + show(space, y), "Z = " + show(space, z),
         "d_X<Y,Z> - <nabla_X Y,Z> - <Y,nabla_X Z> = " + residual.to_string(space.names())}};
  }
};

}  // namespace

LeviCivitaReport check_levi_civita(const RinehartSpace& space, const Connection& conn, const CheckOptions& options,
                                   std::span<const VectorField> spanning) {
  std::vector<VectorField> basis;
  if (spanning.empty()) {
    basis = space.basis();
    spanning = basis;
  }
  LeviCivitaReport report;
  LeviCivitaProbe probe{space, conn, report};
  for (const auto& x : spanning) {
    for (const auto& y : spanning) {
      probe.torsion(x, y);
      ++report.cases;
      for (const auto& z : spanning) {
        probe.compatibility(x, y, z);
        ++report.cases;
      }
    }
  }
  Sampler sampler(options.seed, options.max_degree);
  for (std::size_t k = 0; k < options.samples; ++k) {
    VectorField x = sampler.combination(spanning);
    VectorField y = sampler.combination(spanning);
    VectorField z = sampler.combination(spanning);
    probe.torsion(x, y);
    probe.compatibility(x, y, z);
    report.cases += 2;
  }
  return report;
}

CurvatureReport check_constant_curvature(const RinehartSpace& space, const Connection& conn, const Scalar& c,
                                         std::span<const VectorField> spanning) {
  CurvatureReport report;
  if (spanning.empty()) throw Error(ErrorCode::ValidationError, "spanning set must be nonempty");
  const QuotientElem cc = space.algebra().constant(c);
  for (std::size_t i = 0; i < spanning.size(); ++i) {
    for (std::size_t j = 0; j < spanning.size(); ++j) {
      for (std::size_t k = 0; k < spanning.size(); ++k) {
        const VectorField& x = spanning[i];
        const VectorField& y = spanning[j];
        const VectorField& z = spanning[k];
        ++report.triples;
        VectorField r = curvature(space, conn, x, y, z);
        VectorField expected = cc * (space.inner(y, z) * x - space.inner(x, z) * y);
        VectorField residual = r - expected;
        if (residual.is_zero()) continue;
        report.passed = false;
        report.failing_triple = {i, j, k};
        report.counterexample = Counterexample{{"X = " + show(space, x), "Y = " + show(space, y),
                                                "Z = " + show(space, z), "R(X,Y)Z = " + show(space, r),
                                                "c(<Y,Z>X - <X,Z>Y) = " + show(space, expected)}};
        return report;
      }
    }
  }
  return report;
}

}  // namespace rinehart

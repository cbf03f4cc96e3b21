#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rinehart/space.hpp"

namespace rinehart {

struct CheckOptions {
  std::uint64_t seed = 0;
  int max_degree = 2;
  /// Random cases drawn after the exhaustive pass over spanning fields.
  std::size_t samples = 20;
};

/// Exact witness of a failed identity, one "label = value" line per entry.
struct Counterexample {
  std::vector<std::string> lines;
};

struct LeviCivitaReport {
  bool torsion_free = true;
  bool metric_compatible = true;
  std::optional<Counterexample> torsion_counterexample;
  std::optional<Counterexample> compatibility_counterexample;
  std::size_t cases = 0;

  bool passed() const noexcept { return torsion_free && metric_compatible; }
};

/// Checks nabla_X Y - nabla_Y X = [X,Y] and
/// d_X<Y,Z> = <nabla_X Y, Z> + <Y, nabla_X Z>
/// on all pairs/triples of the spanning fields (the coordinate basis when
/// empty) and on seeded random O-combinations of them. Connections without
/// a vector form are checked through their lowering.
LeviCivitaReport check_levi_civita(const RinehartSpace& space, const Connection& conn, const CheckOptions& options = {},
                                   std::span<const VectorField> spanning = {});

struct CurvatureReport {
  bool passed = true;
  std::size_t triples = 0;
  /// 0-based indices into the spanning list.
  std::optional<std::array<std::size_t, 3>> failing_triple;
  std::optional<Counterexample> counterexample;
};

/// R(X,Y)Z == c(<Y,Z>X - <X,Z>Y) for every triple of spanning fields.
CurvatureReport check_constant_curvature(const RinehartSpace& space, const Connection& conn, const Scalar& c,
                                         std::span<const VectorField> spanning);

}  // namespace rinehart

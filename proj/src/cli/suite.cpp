#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "rinehart/cli.hpp"
#include "rinehart/sampler.hpp"

namespace rinehart::cli {

namespace {

struct Outcome {
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::vector<std::string> counterexample;
};

Outcome skipped(std::string why) { return {CheckStatus::Skipped, std::move(why), {}}; }

Outcome failed(std::string what, std::vector<std::string> witness) {
  return {CheckStatus::Fail, std::move(what), std::move(witness)};
}

Outcome passed(std::size_t cases) { return {CheckStatus::Pass, std::to_string(cases) + " cases", {}}; }

std::uint64_t name_hash(std::string_view name) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

class Context {
 public:
  Context(const SpaceSetup& setup, const SuiteOptions& options, std::string_view name)
      : setup(setup),
        space(setup.space()),
        spanning(setup.spanning()),
        options(options),
        sampler(options.seed ^ name_hash(name), options.max_degree) {}

  /// Random field of the space; tangent combinations for quotients.
  VectorField field() {
    if (setup.hypersurface()) return sampler.combination(spanning);
    return sampler.field(space.algebra());
  }
  QuotientElem function() { return sampler.function(space.algebra()); }

  std::string show(const VectorField& x) const { return x.to_string(space.names()); }
  std::string show(const OneForm& w) const { return w.to_string(space.names()); }
  std::string show(const QuotientElem& f) const { return f.to_string(space.names()); }

  const SpaceSetup& setup;
  const RinehartSpace& space;
  std::vector<VectorField> spanning;
  const SuiteOptions& options;
  Sampler sampler;
};

Outcome check_leibniz(Context& ctx) {
  const RinehartSpace& s = ctx.space;
  for (std::size_t k = 0; k < ctx.options.cases; ++k) {
    QuotientElem f = ctx.function(), g = ctx.function();
    if (!s.algebra().is_quotient()) {
      OneForm residual = s.differential(f * g) - (f * s.differential(g) + g * s.differential(f));
      if (!residual.is_zero()) {
        return failed("d(fg) != f dg + g df", {"f = " + ctx.show(f), "g = " + ctx.show(g), "residual = " + ctx.show(residual)});
      }
    } else {
      VectorField x = ctx.field();
      QuotientElem residual = s.derive(x, f * g) - (f * s.derive(x, g) + g * s.derive(x, f));
      if (!residual.is_zero()) {
        return failed("d_X(fg) != f d_X g + g d_X f",
                      {"X = " + ctx.show(x), "f = " + ctx.show(f), "g = " + ctx.show(g), "residual = " + ctx.show(residual)});
      }
    }
  }
  return passed(ctx.options.cases);
}

Outcome check_anchor(Context& ctx) {
  const RinehartSpace& s = ctx.space;
  for (std::size_t k = 0; k < ctx.options.cases; ++k) {
    VectorField x = ctx.field(), y = ctx.field();
    QuotientElem f = ctx.function();
    VectorField residual = s.lie_bracket(x, f * y) - (s.derive(x, f) * y + f * s.lie_bracket(x, y));
    if (!residual.is_zero()) {
      return failed("[X, fY] != d_X f Y + f[X,Y]",
                    {"X = " + ctx.show(x), "Y = " + ctx.show(y), "f = " + ctx.show(f), "residual = " + ctx.show(residual)});
    }
  }
  return passed(ctx.options.cases);
}

Outcome check_jacobi(Context& ctx) {
  const RinehartSpace& s = ctx.space;
  for (std::size_t k = 0; k < ctx.options.cases; ++k) {
    VectorField x = ctx.field(), y = ctx.field(), z = ctx.field();
    VectorField sum = s.lie_bracket(x, s.lie_bracket(y, z)) + s.lie_bracket(y, s.lie_bracket(z, x)) +
                      s.lie_bracket(z, s.lie_bracket(x, y));
    if (!sum.is_zero()) {
      return failed("Jacobi identity fails",
                    {"X = " + ctx.show(x), "Y = " + ctx.show(y), "Z = " + ctx.show(z), "cyclic sum = " + ctx.show(sum)});
    }
  }
  return passed(ctx.options.cases);
}

Outcome check_connection_leibniz(Context& ctx) {
  const RinehartSpace& s = ctx.space;
  Connection conn = ctx.setup.connection();
  for (std::size_t k = 0; k < ctx.options.cases; ++k) {
    VectorField x = ctx.field(), y = ctx.field();
    QuotientElem f = ctx.function();
    OneForm leibniz = conn.lowered(s, x, f * y) - (s.derive(x, f) * s.flat(y) + f * conn.lowered(s, x, y));
    OneForm linear = conn.lowered(s, f * x, y) - f * conn.lowered(s, x, y);
    if (!leibniz.is_zero() || !linear.is_zero()) {
      return failed("connection is not a covariant derivative",
                    {"X = " + ctx.show(x), "Y = " + ctx.show(y), "f = " + ctx.show(f),
                     "<nabla_X(fY) - d_X f Y - f nabla_X Y, .> = " + ctx.show(leibniz),
                     "<nabla_(fX) Y - f nabla_X Y, .> = " + ctx.show(linear)});
    }
  }
  return passed(ctx.options.cases);
}

Outcome check_curvature_tensoriality(Context& ctx) {
  const RinehartSpace& s = ctx.space;
  Connection conn = ctx.setup.connection();
  if (!conn.has_vector_form()) return skipped("connection has no vector form (metric not musical)");
  for (std::size_t k = 0; k < ctx.options.cases; ++k) {
    VectorField x = ctx.field(), y = ctx.field(), z = ctx.field();
    QuotientElem f = ctx.function();
    VectorField r = f * curvature(s, conn, x, y, z);
    const std::array<std::pair<const char*, VectorField>, 3> slots = {
        std::pair{"X", curvature(s, conn, f * x, y, z)}, std::pair{"Y", curvature(s, conn, x, f * y, z)},
        std::pair{"Z", curvature(s, conn, x, y, f * z)}};
    for (const auto& [slot, value] : slots) {
      VectorField residual = value - r;
      if (!residual.is_zero()) {
        return failed(std::string("curvature is not O-linear in ") + slot,
                      {"X = " + ctx.show(x), "Y = " + ctx.show(y), "Z = " + ctx.show(z), "f = " + ctx.show(f),
                       "residual = " + ctx.show(residual)});
      }
    }
  }
  return passed(ctx.options.cases);
}

Outcome check_flatness(Context& ctx) {
  const RinehartSpace& s = ctx.space;
  if (ctx.setup.hypersurface() || !s.is_euclidean()) return skipped("only for Euclidean ambient spaces");
  Connection conn = make_flat_connection(s);
  std::size_t cases = 0;
  auto probe = [&](const VectorField& x, const VectorField& y, const VectorField& z) -> std::optional<Outcome> {
    ++cases;
    VectorField r = curvature(s, conn, x, y, z);
    if (r.is_zero()) return std::nullopt;
    return failed("R != 0", {"X = " + ctx.show(x), "Y = " + ctx.show(y), "Z = " + ctx.show(z), "R(X,Y)Z = " + ctx.show(r)});
  };
  for (const auto& x : ctx.spanning) {
    for (const auto& y : ctx.spanning) {
      for (const auto& z : ctx.spanning) {
        if (auto bad = probe(x, y, z)) return *bad;
      }
    }
  }
  for (std::size_t k = 0; k < ctx.options.cases; ++k) {
    VectorField x = ctx.field(), y = ctx.field(), z = ctx.field();
    if (auto bad = probe(x, y, z)) return *bad;
  }
  return passed(cases);
}

Outcome check_levi_civita_suite(Context& ctx) {
  Connection conn = ctx.setup.connection();
  CheckOptions opts{ctx.options.seed ^ name_hash("levi_civita"), ctx.options.max_degree, ctx.options.cases};
  LeviCivitaReport report = check_levi_civita(ctx.space, conn, opts, ctx.spanning);
  if (!report.torsion_free) return failed("connection '" + conn.name() + "' has torsion", report.torsion_counterexample->lines);
  if (!report.metric_compatible) {
    return failed("connection '" + conn.name() + "' is not metric compatible", report.compatibility_counterexample->lines);
  }
  return passed(report.cases);
}

Outcome check_musical_roundtrip(Context& ctx) {
  const RinehartSpace& s = ctx.space;
  if (!s.is_musical()) return skipped("metric determinant is not a certified unit");
  for (std::size_t k = 0; k < ctx.options.cases; ++k) {
    VectorField x = ctx.sampler.field(s.algebra());
    OneForm w(ctx.sampler.field(s.algebra()).coeffs());
    VectorField back = s.sharp(s.flat(x));
    if (!(back == x)) return failed("sharp(flat(X)) != X", {"X = " + ctx.show(x), "sharp(flat(X)) = " + ctx.show(back)});
    OneForm wback = s.flat(s.sharp(w));
    if (!(wback == w)) return failed("flat(sharp(w)) != w", {"w = " + ctx.show(w), "flat(sharp(w)) = " + ctx.show(wback)});
  }
  return passed(ctx.options.cases);
}

Outcome check_projection(Context& ctx) {
  const auto& h = ctx.setup.hypersurface();
  if (!h) return skipped("only for quotient spaces");
  const RinehartSpace& s = ctx.space;
  for (std::size_t k = 0; k < ctx.options.cases; ++k) {
    VectorField x = ctx.sampler.field(h->ambient().algebra());
    VectorField t = ctx.field();
    VectorField diff = h->reduce(x) - h->project_tangent(x);
    QuotientElem ip = s.inner(diff, t);
    if (!ip.is_zero()) {
      return failed("<X - X^T, T> not in (f)", {"X = " + ctx.show(h->reduce(x)), "T = " + ctx.show(t), "<X - X^T, T> = " + ctx.show(ip)});
    }
    if (!h->quotient_equal(h->project_tangent(t), t)) {
      return failed("projection moves a tangent field", {"T = " + ctx.show(t), "T^T = " + ctx.show(h->project_tangent(t))});
    }
    if (!h->is_tangent(h->project_tangent(x))) {
      return failed("projection is not tangent", {"X = " + ctx.show(h->reduce(x))});
    }
  }
  return passed(ctx.options.cases);
}

Outcome check_retraction(Context& ctx) {
  const auto& h = ctx.setup.hypersurface();
  if (!h) return skipped("only for quotient spaces");
  for (std::size_t k = 0; k < ctx.options.cases; ++k) {
    VectorField x = ctx.sampler.field(h->ambient().algebra());
    VectorField once = h->project_tangent(x);
    VectorField twice = h->project_tangent(once);
    if (!h->quotient_equal(once, twice)) {
      return failed("projection is not a retraction", {"X = " + ctx.show(h->reduce(x)), "X^T = " + ctx.show(once), "X^TT = " + ctx.show(twice)});
    }
  }
  return passed(ctx.options.cases);
}

Outcome check_gauss_split(Context& ctx) {
  const auto& h = ctx.setup.hypersurface();
  if (!h) return skipped("only for quotient spaces");
  for (std::size_t k = 0; k < ctx.options.cases; ++k) {
    VectorField x = ctx.field(), y = ctx.field();
    VectorField residual = h->ambient_connection(x, y) - h->induced_connection(x, y) - h->second_fundamental_form(x, y);
    if (!residual.is_zero()) {
      return failed("ambient connection != induced + h", {"X = " + ctx.show(x), "Y = " + ctx.show(y), "residual = " + ctx.show(residual)});
    }
  }
  return passed(ctx.options.cases);
}

Outcome check_h_symmetry(Context& ctx) {
  const auto& h = ctx.setup.hypersurface();
  if (!h) return skipped("only for quotient spaces");
  for (std::size_t k = 0; k < ctx.options.cases; ++k) {
    VectorField x = ctx.field(), y = ctx.field();
    QuotientElem f = ctx.function();
    VectorField hxy = h->second_fundamental_form(x, y);
    if (!h->quotient_equal(hxy, h->second_fundamental_form(y, x))) {
      return failed("h(X,Y) != h(Y,X)", {"X = " + ctx.show(x), "Y = " + ctx.show(y), "h(X,Y) = " + ctx.show(hxy)});
    }
    if (!h->quotient_equal(h->second_fundamental_form(f * x, y), f * hxy)) {
      return failed("h(fX,Y) != f h(X,Y)", {"X = " + ctx.show(x), "Y = " + ctx.show(y), "f = " + ctx.show(f)});
    }
  }
  return passed(ctx.options.cases);
}

Outcome check_induced_metric(Context& ctx) {
  const auto& h = ctx.setup.hypersurface();
  if (!h || !h->sphere_constant()) return skipped("only for sphere quotients");
  const RinehartSpace& s = ctx.space;
  const QuotientElem c = s.algebra().constant(*h->sphere_constant());
  const auto& ys = h->spanning();
  for (std::size_t i = 0; i < ys.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      QuotientElem expected = (i == j ? s.algebra().one() : s.algebra().zero()) - c * s.coordinate(i) * s.coordinate(j);
      QuotientElem got = s.inner(ys[i], ys[j]);
      if (!(got == expected)) {
        return failed("<Y_i,Y_j> != delta_ij - c y_i y_j",
                      {"i = " + std::to_string(i + 1), "j = " + std::to_string(j + 1), "<Y_i,Y_j> = " + ctx.show(got),
                       "expected = " + ctx.show(expected)});
      }
    }
  }
  return passed(ys.size() * ys.size());
}

Outcome check_representative_independence(Context& ctx) {
  const auto& h = ctx.setup.hypersurface();
  if (!h) return skipped("only for quotient spaces");
  const RinehartSpace& amb = h->ambient();
  QuotientElem f = amb.function(h->generator());
  for (std::size_t k = 0; k < ctx.options.cases; ++k) {
    VectorField x = ctx.field(), y = ctx.field();
    VectorField w = ctx.sampler.field(amb.algebra());
    VectorField x_shift = h->lift(x) + f * w;
    VectorField y_shift = h->lift(y) + f * w;
    VectorField base = h->induced_connection(x, y);
    if (!h->quotient_equal(h->induced_connection(x_shift, y), base) ||
        !h->quotient_equal(h->induced_connection(x, y_shift), base)) {
      return failed("induced connection depends on the representative",
                    {"X = " + ctx.show(x), "Y = " + ctx.show(y), "W = " + w.to_string(amb.names())});
    }
  }
  return passed(ctx.options.cases);
}

Outcome check_space_form(Context& ctx) {
  const auto& h = ctx.setup.hypersurface();
  if (!h || !h->sphere_constant()) return skipped("only for sphere quotients");
  SpaceFormReport r = h->verify_space_form(*h->sphere_constant());
  if (!r.curvature_ok) return failed("R(X,Y)Z != c(<Y,Z>X - <X,Z>Y)", r.counterexample->lines);
  if (!r.metric_ok) return failed("induced metric mismatch", {});
  return passed(r.triples);
}

using CheckFn = Outcome (*)(Context&);

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> checks = {
      {"anchor", check_anchor},
      {"connection_leibniz", check_connection_leibniz},
      {"curvature_tensoriality", check_curvature_tensoriality},
      {"flatness", check_flatness},
      {"gauss_split", check_gauss_split},
      {"h_symmetry", check_h_symmetry},
      {"induced_metric", check_induced_metric},
      {"jacobi", check_jacobi},
      {"leibniz", check_leibniz},
      {"levi_civita", check_levi_civita_suite},
      {"musical_roundtrip", check_musical_roundtrip},
      {"projection", check_projection},
      {"representative_independence", check_representative_independence},
      {"retraction", check_retraction},
      {"space_form", check_space_form},
  };
  return checks;
}

}  // namespace

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_suite(const SpaceSetup& setup, const std::vector<std::string>& names,
                                   const SuiteOptions& options) {
  std::vector<std::string> selected = names.empty() ? known_checks() : names;
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

  std::vector<CheckResult> results;
  for (const auto& name : selected) {
    auto it = registry().find(name);
    if (it == registry().end()) throw Error(ErrorCode::ValidationError, "unknown check \"" + name + "\"");
    auto start = std::chrono::steady_clock::now();
    Context ctx(setup, options, name);
    Outcome outcome;
    try {
      outcome = it->second(ctx);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MetricNotMusical && e.code() != ErrorCode::TwoNotAUnit &&
          e.code() != ErrorCode::NotEuclidean) {
        throw;
      }
      outcome = skipped(std::string(error_code_name(e.code())) + ": " + e.what());
    }
    auto stop = std::chrono::steady_clock::now();
    results.push_back({name, outcome.status, std::move(outcome.detail), std::move(outcome.counterexample),
                       std::chrono::duration<double, std::milli>(stop - start).count()});
  }
  return results;
}

nlohmann::ordered_json report_json(const std::vector<CheckResult>& checks, bool timing) {
  nlohmann::ordered_json out;
  out["schema_version"] = kSchemaVersion;
  out["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["status"] = status_name(c.status);
    entry["detail"] = c.detail;
    if (c.counterexample.empty()) {
      entry["counterexample"] = nullptr;
    } else {
      entry["counterexample"] = c.counterexample;
    }
    if (timing) entry["elapsed_ms"] = c.elapsed_ms;
    out["checks"].push_back(std::move(entry));
  }
  out["engine_version"] = kEngineVersion;
  return out;
}

}  // namespace rinehart::cli

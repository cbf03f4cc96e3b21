// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails or runs past its time budget.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rinehart/checks.hpp"
#include "rinehart/cli.hpp"
#include "rinehart/hypersurface.hpp"
#include "rinehart/parse.hpp"
#include "rinehart/sampler.hpp"

using namespace rinehart;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
  std::vector<std::string> notes;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<Verdict()> body;
};

Verdict fail(std::string why) { return {false, std::move(why), {}}; }

Scalar Qint(long v) { return Scalar::from_int(Ring::rationals(), v); }

Verdict sphere_space_forms() {
  std::size_t triples = 0;
  for (std::size_t n : {2, 3, 4}) {
    for (long c : {1L, -1L, 4L}) {
      HypersurfaceSpace h = HypersurfaceSpace::make_sphere(Ring::rationals(), n, Qint(c));
      SpaceFormReport r = h.verify_space_form(Qint(c));
      if (!r.passed) return fail("n = " + std::to_string(n) + ", c = " + std::to_string(c));
      triples += r.triples;
    }
  }
  return {true, "9 spheres, " + std::to_string(triples) + " spanning triples"};
}

Verdict sphere_intermediate_identities() {
  const Ring& q = Ring::rationals();
  const Scalar c = Qint(1);
  HypersurfaceSpace h = HypersurfaceSpace::make_sphere(q, 3, c);
  const RinehartSpace& s = h.quotient_space();
  const FunctionAlgebra& alg = s.algebra();
  const auto& ys = h.spanning();
  const QuotientElem cc = alg.constant(c);
  std::size_t count = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      QuotientElem y_i = s.coordinate(i), y_j = s.coordinate(j);
      QuotientElem delta = (i == j ? alg.one() : alg.zero()) - cc * y_i * y_j;
      std::string at = " at (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
      if (!(s.inner(ys[i], ys[j]) == delta)) return fail("<Y_i,Y_j>" + at);
      if (!(s.derive(ys[i], y_j) == delta)) return fail("d_{Y_i} y_j" + at);
      if (!(h.induced_connection(ys[i], ys[j]) == -(cc * y_j) * ys[i])) return fail("nabla_{Y_i} Y_j" + at);
      if (!(s.lie_bracket(ys[i], ys[j]) == cc * (y_i * ys[j] - y_j * ys[i]))) return fail("[Y_i,Y_j]" + at);
      count += 4;
    }
  }
  return {true, std::to_string(count) + " identities"};
}

Verdict finite_field_space_forms() {
  std::size_t spaces = 0;
  for (std::uint64_t p : {3u, 5u, 7u}) {
    const Ring& fp = Ring::prime_field(p);
    for (long v = 1; v < static_cast<long>(p); ++v) {
      Scalar c = Scalar::from_int(fp, v);
      HypersurfaceSpace h = HypersurfaceSpace::make_sphere(fp, 3, c);
      if (!h.verify_space_form(c).passed) return fail("p = " + std::to_string(p) + ", c = " + std::to_string(v));
      ++spaces;
    }
  }
  return {true, std::to_string(spaces) + " (p, c) pairs"};
}

Verdict negative_curvature() {
  HypersurfaceSpace h = HypersurfaceSpace::make_sphere(Ring::rationals(), 3, Qint(-1));
  SpaceFormReport r = h.verify_space_form(Qint(-1));
  if (!r.passed) return fail("verify_space_form failed");
  return {true, "sum x_i^2 = -1, " + std::to_string(r.triples) + " triples"};
}

Verdict euclidean_flatness() {
  RinehartSpace s(Ring::rationals(), {"x1", "x2", "x3"});
  Connection flat = make_flat_connection(s);
  for (const auto& x : s.basis()) {
    for (const auto& y : s.basis()) {
      for (const auto& z : s.basis()) {
        if (!curvature(s, flat, x, y, z).is_zero()) return fail("basis triple");
      }
    }
  }
  Sampler sampler(7, 2);
  for (int k = 0; k < 100; ++k) {
    VectorField x = sampler.field(s.algebra()), y = sampler.field(s.algebra()), z = sampler.field(s.algebra());
    if (!curvature(s, flat, x, y, z).is_zero()) return fail("random triple " + std::to_string(k));
  }
  return {true, "27 basis + 100 random triples"};
}

Verdict koszul_consistency() {
  const Ring& q = Ring::rationals();
  RinehartSpace e(q, {"x1", "x2", "x3"});
  for (const auto& x : e.basis()) {
    for (const auto& y : e.basis()) {
      if (!(e.koszul_connection(x, y) == e.flat_connection(x, y))) return fail("koszul != flat on a basis pair");
    }
  }
  std::vector<std::string> names = {"x1", "x2"};
  FunctionAlgebra alg(q, 2);
  Metric g = Metric::diagonal({alg.one(), alg.reduce(parse_poly("x1^2 + 1", q, names))});
  RinehartSpace w(q, names, nullptr, g);
  LeviCivitaReport r = check_levi_civita(w, make_levi_civita(w), {7, 2, 50});
  if (!r.torsion_free) return fail("torsion on diag(1, x1^2 + 1)");
  if (!r.metric_compatible) return fail("not metric compatible on diag(1, x1^2 + 1)");
  return {true, "9 basis pairs; diag(1, x1^2 + 1): " + std::to_string(r.cases) + " cases"};
}

Verdict property_suites() {
  const cli::SuiteOptions opts{7, 2, 200};
  struct Run {
    std::string spec;
    std::vector<std::string> checks;
  };
  const std::vector<Run> runs = {
      {R"({"ring":{"kind":"Q"},"vars":["x","y","z"]})",
       {"leibniz", "anchor", "jacobi", "connection_leibniz", "curvature_tensoriality"}},
      {R"({"ring":{"kind":"Q"},"vars":["x","y","z"],"quotient":{"sphere":{"c":"1"}}})",
       {"leibniz", "anchor", "jacobi", "curvature_tensoriality", "gauss_split", "h_symmetry", "projection",
        "retraction", "representative_independence"}},
      {R"({"ring":{"kind":"Fp","p":5},"vars":["x","y","z"],"quotient":{"sphere":{"c":"2"}}})",
       {"gauss_split", "h_symmetry", "projection", "retraction"}},
      {R"({"ring":{"kind":"Q"},"vars":["x","y"],"metric":{"matrix":[["2","1"],["1","1"]]}})",
       {"musical_roundtrip", "curvature_tensoriality"}},
      {R"({"ring":{"kind":"Fp","p":7},"vars":["x","y","z"],"metric":{"diag":["3","5","1"]}})",
       {"musical_roundtrip"}},
  };
  std::size_t suites = 0;
  for (const auto& run : runs) {
    cli::SpaceSetup setup(cli::parse_spec(run.spec));
    for (const auto& r : cli::run_suite(setup, run.checks, opts)) {
      if (r.status != cli::CheckStatus::Pass) return fail(r.name + " on " + run.spec + ": " + r.detail);
      std::size_t cases = std::stoul(r.detail);
      if (cases < 200) return fail(r.name + " ran only " + r.detail);
      ++suites;
    }
  }
  return {true, std::to_string(suites) + " suites at >= 200 cases"};
}

Verdict negative_controls() {
  // torsion in a perturbed connection, reported twice with identical witnesses
  RinehartSpace s(Ring::rationals(), {"x", "y", "z"});
  VectorField bump = s.field({s.parse("x*y"), s.parse("0"), s.parse("0")});
  Connection bad("perturbed", [&s, bump](const VectorField& a, const VectorField& b) {
    return s.flat_connection(a, b) + s.inner(a, s.basis(0)) * s.inner(b, s.basis(1)) * bump;
  });
  LeviCivitaReport r1 = check_levi_civita(s, bad, {7, 2, 20});
  LeviCivitaReport r2 = check_levi_civita(s, bad, {7, 2, 20});
  if (r1.torsion_free || !r1.torsion_counterexample) return fail("perturbed connection passed torsion check");
  if (r1.torsion_counterexample->lines != r2.torsion_counterexample->lines) return fail("torsion witness not deterministic");

  // curvature constant mismatch
  HypersurfaceSpace h = HypersurfaceSpace::make_sphere(Ring::rationals(), 3, Qint(1));
  SpaceFormReport m = h.verify_space_form(Qint(2));
  if (m.passed || !m.counterexample) return fail("c mismatch passed verify_space_form");
  if (m.counterexample->lines != h.verify_space_form(Qint(2)).counterexample->lines) {
    return fail("mismatch witness not deterministic");
  }

  // parse-time rejections
  const std::array<std::pair<const char*, const char*>, 3> rejected = {{
      {R"({"ring":{"kind":"Q"},"vars":["x","y","z"],"quotient":{"sphere":{"c":"0"}}})",
       "quotient.sphere.c: c must be a unit, got 0"},
      {R"({"ring":{"kind":"Fp","p":5},"vars":["x","y","z"],"quotient":{"sphere":{"c":"10"}}})",
       "quotient.sphere.c: c must be a unit, got 0"},
      {R"({"ring":{"kind":"Fp","p":15},"vars":["x","y","z"]})", "ring.p: 15 is not prime"},
  }};
  for (const auto& [spec, message] : rejected) {
    try {
      cli::parse_spec(spec);
      return fail(std::string("accepted ") + spec);
    } catch (const Error& e) {
      if (std::string(e.what()) != message) return fail(std::string("unexpected message: ") + e.what());
    }
  }
  return {true, "torsion witness, c mismatch, 3 parse rejections", r1.torsion_counterexample->lines};
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

Verdict cli_determinism() {
  const std::string command =
      std::string(RINEHART_BINARY) + " check --json --seed 7 " + RINEHART_SPEC_DIR + "/sphere_q3.json";
  int s1 = 0, s2 = 0;
  std::string a = capture(command, s1);
  std::string b = capture(command, s2);
  if (s1 != 0 || s2 != 0) return fail("exit status " + std::to_string(s1) + " / " + std::to_string(s2));
  if (a.empty()) return fail("empty report");
  if (a != b) return fail("reports differ");
  return {true, std::to_string(a.size()) + " identical bytes"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "sphere space forms over Q, n in {2,3,4}, c in {1,-1,4}", 10, sphere_space_forms},
      {2, "sphere inner products, derivatives, connection, brackets (n=3, c=1)", 2, sphere_intermediate_identities},
      {3, "finite-field space forms, p in {3,5,7}, all unit c, n=3", 30, finite_field_space_forms},
      {4, "negative curvature c=-1 over Q[x1,x2,x3]", 10, negative_curvature},
      {5, "Euclidean flatness", 5, euclidean_flatness},
      {6, "Koszul = flat on Euclidean; Levi-Civita on diag(1, x1^2+1)", 5, koszul_consistency},
      {7, "property suites", 60, property_suites},
      {8, "negative controls", 10, negative_controls},
      {9, "CLI report determinism", 60, cli_determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.ok && secs > c.budget_s) v = fail("exceeded " + std::to_string(static_cast<int>(c.budget_s)) + " s budget");
    if (!v.ok) ++failures;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (v.ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << ": " << v.detail << " (" << secs << " s)";
    std::cout << line.str() << std::endl;
    for (const auto& note : v.notes) std::cout << "       " << note << "\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}

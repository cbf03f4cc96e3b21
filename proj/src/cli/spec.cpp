#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "rinehart/cli.hpp"
#include "rinehart/parse.hpp"

namespace rinehart::cli {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ValidationError, field + ": " + what);
}

std::string text_of(const json& j, const std::string& field) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  invalid(field, "expected a polynomial string");
}

const Ring& parse_ring(const json& j, const std::string& field, bool allow_quad = true) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    invalid(field, "expected an object with a \"kind\" string");
  }
  std::string kind = j["kind"].get<std::string>();
  if (kind == "Q") return Ring::rationals();
  if (kind == "Fp") {
    if (!j.contains("p") || !j["p"].is_number_unsigned()) invalid(field + ".p", "expected a positive integer");
    std::uint64_t p = j["p"].get<std::uint64_t>();
    if (!is_prime(p)) invalid(field + ".p", std::to_string(p) + " is not prime");
    try {
      return Ring::prime_field(p);
    } catch (const Error& e) {
      invalid(field + ".p", e.what());
    }
  }
  if (kind == "quad") {
    if (!allow_quad) invalid(field, "quadratic extensions cannot be nested");
    if (!j.contains("base")) invalid(field + ".base", "missing");
    const Ring& base = parse_ring(j["base"], field + ".base", false);
    if (!j.contains("s") || !j["s"].is_number_integer()) invalid(field + ".s", "expected 1 or -1");
    int s = j["s"].get<int>();
    if (s != 1 && s != -1) invalid(field + ".s", "expected 1 or -1");
    return Ring::quad_ext(base, s);
  }
  invalid(field + ".kind", "unknown ring kind \"" + kind + "\"");
}

Poly parse_field_poly(const json& j, const std::string& field, const Ring& ring, const std::vector<std::string>& vars) {
  std::string text = text_of(j, field);
  try {
    return parse_poly(text, ring, vars);
  } catch (const Error& e) {
    invalid(field, e.what());
  }
}

Metric parse_metric(const json& j, const Ring& ring, const std::vector<std::string>& vars) {
  FunctionAlgebra alg(ring, vars.size());
  const std::size_t n = vars.size();
  if (j.is_string()) {
    if (j.get<std::string>() == "euclidean") return Metric::euclidean(alg);
    invalid("metric", "expected \"euclidean\", {\"diag\": [...]} or {\"matrix\": [[...]]}");
  }
  if (j.is_object() && j.contains("diag")) {
    const json& d = j["diag"];
    if (!d.is_array() || d.size() != n) invalid("metric.diag", "expected " + std::to_string(n) + " entries");
    std::vector<QuotientElem> entries;
    for (std::size_t i = 0; i < n; ++i) {
      entries.push_back(alg.reduce(parse_field_poly(d[i], "metric.diag[" + std::to_string(i) + "]", ring, vars)));
    }
    return Metric::diagonal(std::move(entries));
  }
  if (j.is_object() && j.contains("matrix")) {
    const json& m = j["matrix"];
    if (!m.is_array() || m.size() != n) invalid("metric.matrix", "expected " + std::to_string(n) + " rows");
    Metric::Matrix g;
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i].is_array() || m[i].size() != n) {
        invalid("metric.matrix[" + std::to_string(i) + "]", "expected " + std::to_string(n) + " entries");
      }
      std::vector<QuotientElem> row;
      for (std::size_t k = 0; k < n; ++k) {
        std::string field = "metric.matrix[" + std::to_string(i) + "][" + std::to_string(k) + "]";
        row.push_back(alg.reduce(parse_field_poly(m[i][k], field, ring, vars)));
      }
      g.push_back(std::move(row));
    }
    try {
      return Metric(std::move(g));
    } catch (const Error& e) {
      invalid("metric.matrix", e.what());
    }
  }
  invalid("metric", "expected \"euclidean\", {\"diag\": [...]} or {\"matrix\": [[...]]}");
}

std::string position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

SpaceSpec parse_spec(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "invalid JSON at " + position_of(text, e.byte > 0 ? e.byte - 1 : 0) + ": " + e.what());
  }
  if (!j.is_object()) invalid("<root>", "expected a JSON object");

  if (j.contains("schema_version")) {
    if (!j["schema_version"].is_number_integer() || j["schema_version"].get<int>() != kSchemaVersion) {
      invalid("schema_version", "unsupported version (expected 1)");
    }
  }

  SpaceSpec spec;
  if (!j.contains("ring")) invalid("ring", "missing");
  spec.ring = &parse_ring(j["ring"], "ring");

  if (!j.contains("vars") || !j["vars"].is_array() || j["vars"].empty()) {
    invalid("vars", "expected a nonempty list of names");
  }
  std::set<std::string> seen;
  for (const auto& v : j["vars"]) {
    if (!v.is_string() || !valid_variable_name(v.get<std::string>())) {
      invalid("vars", "invalid variable name " + v.dump());
    }
    if (!seen.insert(v.get<std::string>()).second) invalid("vars", "duplicate variable name " + v.dump());
    spec.vars.push_back(v.get<std::string>());
  }
  if (spec.vars.size() > kMaxVars) invalid("vars", "at most " + std::to_string(kMaxVars) + " variables are supported");

  if (j.contains("metric")) {
    spec.metric = parse_metric(j["metric"], *spec.ring, spec.vars);
    if (spec.metric->is_euclidean()) spec.metric.reset();
  }

  if (j.contains("quotient") && !j["quotient"].is_null()) {
    const json& q = j["quotient"];
    if (q.is_object() && q.contains("sphere")) {
      const json& s = q["sphere"];
      if (!s.is_object() || !s.contains("c")) invalid("quotient.sphere.c", "missing");
      std::string ctext = text_of(s["c"], "quotient.sphere.c");
      Scalar c(*spec.ring);
      try {
        c = parse_scalar(ctext, *spec.ring);
      } catch (const Error& e) {
        invalid("quotient.sphere.c", e.what());
      }
      if (!c.is_unit()) invalid("quotient.sphere.c", "c must be a unit, got " + c.to_string());
      if (spec.ring->characteristic() == 2) invalid("quotient.sphere", "spheres need characteristic != 2");
      if (spec.vars.size() < 2) invalid("quotient.sphere", "spheres need at least 2 variables");
      if (spec.metric) invalid("quotient.sphere", "spheres need the Euclidean metric");
      spec.quotient = SphereQuotient{c};
    } else if (q.is_object() && q.contains("generator")) {
      Poly f = parse_field_poly(q["generator"], "quotient.generator", *spec.ring, spec.vars);
      if (f.is_constant()) invalid("quotient.generator", "generator must be nonconstant");
      if (!q.contains("q")) invalid("quotient.q", "missing");
      Poly unit = parse_field_poly(q["q"], "quotient.q", *spec.ring, spec.vars);
      spec.quotient = GeneratorQuotient{f, unit};
    } else {
      invalid("quotient", "expected {\"sphere\": {...}} or {\"generator\": ..., \"q\": ...}");
    }
  }

  if (j.contains("checks")) {
    if (!j["checks"].is_array()) invalid("checks", "expected a list of check names");
    for (const auto& c : j["checks"]) {
      if (!c.is_string()) invalid("checks", "expected a list of check names");
      std::string name = c.get<std::string>();
      const auto& known = known_checks();
      if (std::find(known.begin(), known.end(), name) == known.end()) invalid("checks", "unknown check \"" + name + "\"");
      spec.checks.push_back(name);
    }
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) invalid("seed", "expected a nonnegative integer");
    spec.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("max_degree")) {
    if (!j["max_degree"].is_number_integer()) invalid("max_degree", "expected an integer");
    spec.max_degree = j["max_degree"].get<int>();
    if (spec.max_degree < 0 || spec.max_degree > 6) invalid("max_degree", "expected 0..6");
  }
  return spec;
}

SpaceSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ValidationError, "cannot read spec file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

SpaceSetup::SpaceSetup(const SpaceSpec& spec) : ambient_(*spec.ring, spec.vars, nullptr, spec.metric) {
  if (const auto* s = std::get_if<SphereQuotient>(&spec.quotient)) {
    hyper_ = HypersurfaceSpace::make_sphere(*spec.ring, spec.vars.size(), s->c, spec.vars);
  } else if (const auto* g = std::get_if<GeneratorQuotient>(&spec.quotient)) {
    hyper_ = HypersurfaceSpace::make(ambient_, g->generator, g->q);
  }
}

const RinehartSpace& SpaceSetup::space() const { return hyper_ ? hyper_->quotient_space() : ambient_; }

std::vector<VectorField> SpaceSetup::spanning() const {
  if (hyper_) return hyper_->spanning();
  return ambient_.basis();
}

Connection SpaceSetup::connection() const {
  if (hyper_) return hyper_->induced();
  return make_levi_civita(ambient_);
}

VectorField SpaceSetup::parse_field(std::string_view text) const {
  const RinehartSpace& s = space();
  std::string t(text);
  t.erase(0, t.find_first_not_of(" \t"));
  t.erase(t.find_last_not_of(" \t") + 1);
  if (!t.empty() && t[0] == '@') {
    std::string name = t.substr(1);
    if (name == "N") {
      if (!hyper_) throw Error(ErrorCode::ValidationError, "@N needs a quotient space");
      return hyper_->reduce(hyper_->normal());
    }
    if (name.size() >= 2 && (name[0] == 'X' || name[0] == 'Y') &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      std::size_t i = std::stoul(name.substr(1));
      if (i < 1 || i > s.dim()) throw Error(ErrorCode::IndexOutOfRange, "field index out of range in " + t);
      if (name[0] == 'X') return s.basis(i - 1);
      if (!hyper_) throw Error(ErrorCode::ValidationError, "@Y fields need a quotient space");
      return hyper_->spanning()[i - 1];
    }
    throw Error(ErrorCode::ValidationError, "unknown named field " + t);
  }
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw Error(ErrorCode::ParseError, "unterminated field list " + t);
    t = t.substr(1, t.size() - 2);
  }
  std::vector<QuotientElem> coeffs;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = t.find(',', start);
    std::string part = t.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    part.erase(std::remove(part.begin(), part.end(), '"'), part.end());
    coeffs.push_back(s.parse(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (coeffs.size() != s.dim()) {
    throw Error(ErrorCode::ValidationError,
                "expected " + std::to_string(s.dim()) + " components, got " + std::to_string(coeffs.size()));
  }
  return VectorField(std::move(coeffs));
}

}  // namespace rinehart::cli

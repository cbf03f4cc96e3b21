#include <cctype>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rinehart/cli.hpp"
#include "rinehart/parse.hpp"

namespace rinehart::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string spec_path;
  bool json = false;
  bool timing = false;
  bool spanning = false;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_degree;
  std::size_t cases = 25;
  std::string c, x, y, z, f;
};

ordered_json field_json(const VectorField& v, const RinehartSpace& s) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : v.coeffs()) arr.push_back(c.to_string(s.names()));
  return arr;
}

void add_spanning(ordered_json& out, const SpaceSetup& setup) {
  ordered_json list = ordered_json::array();
  for (const auto& y : setup.spanning()) list.push_back(field_json(y, setup.space()));
  out["spanning"] = std::move(list);
}

void print_spanning(std::ostream& out, const SpaceSetup& setup) {
  const auto fields = setup.spanning();
  const char* label = setup.hypersurface() ? "Y" : "X";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out << label << (i + 1) << " = " << fields[i].to_string(setup.space().names()) << "\n";
  }
}

int emit_checks(const std::vector<CheckResult>& results, const Options& opt, const SpaceSetup& setup, std::ostream& out) {
  bool any_fail = false;
  for (const auto& r : results) any_fail = any_fail || r.status == CheckStatus::Fail;
  if (opt.json) {
    ordered_json report = report_json(results, opt.timing);
    if (opt.spanning) add_spanning(report, setup);
    out << report.dump(2) << "\n";
  } else {
    if (opt.spanning) print_spanning(out, setup);
    for (const auto& r : results) {
      std::string status(status_name(r.status));
      for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      out << std::left << std::setw(8) << status << std::setw(30) << r.name << r.detail;
      out << "  (" << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms)\n";
      for (const auto& line : r.counterexample) out << "        " << line << "\n";
    }
  }
  return any_fail ? 1 : 0;
}

int emit_result(const std::string& command, ordered_json result, const std::string& text, const Options& opt,
                const SpaceSetup& setup, std::ostream& out) {
  if (opt.json) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["result"] = std::move(result);
    if (opt.spanning) add_spanning(doc, setup);
    doc["engine_version"] = kEngineVersion;
    out << doc.dump(2) << "\n";
  } else {
    if (opt.spanning) print_spanning(out, setup);
    out << text << "\n";
  }
  return 0;
}

const HypersurfaceSpace& require_hypersurface(const SpaceSetup& setup, const std::string& command) {
  if (!setup.hypersurface()) {
    throw Error(ErrorCode::ValidationError, "'" + command + "' needs a spec with a quotient");
  }
  return *setup.hypersurface();
}

int execute(const std::string& command, const Options& opt, std::ostream& out) {
  SpaceSpec spec = load_spec(opt.spec_path);
  SpaceSetup setup(spec);
  const RinehartSpace& space = setup.space();
  SuiteOptions suite{opt.seed.value_or(spec.seed), opt.max_degree.value_or(spec.max_degree), opt.cases};

  if (command == "check") return emit_checks(run_suite(setup, spec.checks, suite), opt, setup, out);

  if (command == "space-form") {
    const HypersurfaceSpace& h = require_hypersurface(setup, command);
    Scalar c = parse_scalar(opt.c, space.ring());
    SpaceFormReport r = h.verify_space_form(c);
    CheckResult res{"space_form", r.passed ? CheckStatus::Pass : CheckStatus::Fail, {}, {}, 0};
    if (r.passed) {
      res.detail = std::to_string(r.triples) + " triples, c = " + c.to_string();
    } else if (!r.curvature_ok) {
      const auto& t = *r.failing_triple;
      res.detail = "curvature identity fails for c = " + c.to_string() + " at (Y" + std::to_string(t[0] + 1) + ", Y" +
                   std::to_string(t[1] + 1) + ", Y" + std::to_string(t[2] + 1) + ")";
      res.counterexample = r.counterexample->lines;
    } else {
      const auto& p = *r.failing_metric_pair;
      res.detail = "induced metric differs from delta_ij - c y_i y_j at (" + std::to_string(p[0] + 1) + ", " +
                   std::to_string(p[1] + 1) + ") for c = " + c.to_string();
    }
    return emit_checks({res}, opt, setup, out);
  }

  if (command == "connection") {
    VectorField v = setup.connection()(setup.parse_field(opt.x), setup.parse_field(opt.y));
    return emit_result(command, field_json(v, space), "nabla_X Y = " + v.to_string(space.names()), opt, setup, out);
  }

  if (command == "curvature") {
    VectorField v = curvature(space, setup.connection(), setup.parse_field(opt.x), setup.parse_field(opt.y),
                              setup.parse_field(opt.z));
    return emit_result(command, field_json(v, space), "R(X,Y)Z = " + v.to_string(space.names()), opt, setup, out);
  }

  if (command == "gradient") {
    VectorField v = space.gradient(space.parse(opt.f));
    return emit_result(command, field_json(v, space), "grad f = " + v.to_string(space.names()), opt, setup, out);
  }

  if (command == "project") {
    const HypersurfaceSpace& h = require_hypersurface(setup, command);
    VectorField x = setup.parse_field(opt.x);
    VectorField t = h.project_tangent(x);
    VectorField n = h.project_normal(x);
    ordered_json result;
    result["tangent"] = field_json(t, space);
    result["normal"] = field_json(n, space);
    std::string text = "tangent = " + t.to_string(space.names()) + "\nnormal = " + n.to_string(space.names());
    return emit_result(command, std::move(result), text, opt, setup, out);
  }
  throw Error(ErrorCode::ValidationError, "unknown command " + command);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Riemannian geometry over commutative ground rings", "rinehart"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&opt](CLI::App* sub) {
    sub->add_option("spec", opt.spec_path, "Space specification (JSON)")->required();
    sub->add_flag("--json", opt.json, "Machine-readable report");
    sub->add_flag("--timing", opt.timing, "Include per-check timings in JSON reports");
    sub->add_flag("--spanning", opt.spanning, "Print the spanning fields of the space");
    sub->add_option("--seed", opt.seed, "Seed for randomized suites");
    sub->add_option("--max-degree", opt.max_degree, "Maximum degree of random coefficients")->check(CLI::Range(0, 6));
    sub->add_option("--cases", opt.cases, "Random cases per property check");
  };

  auto* check = app.add_subcommand("check", "Run the invariant suite for the spec's space");
  common(check);
  auto* space_form = app.add_subcommand("space-form", "Verify the constant-curvature identity");
  common(space_form);
  space_form->add_option("--c", opt.c, "Curvature constant")->required();
  auto* connection = app.add_subcommand("connection", "Evaluate nabla_X Y");
  common(connection);
  connection->add_option("--x", opt.x, "X as [p1,...] or @X1/@Y1/@N")->required();
  connection->add_option("--y", opt.y, "Y")->required();
  auto* curv = app.add_subcommand("curvature", "Evaluate R(X,Y)Z");
  common(curv);
  curv->add_option("--x", opt.x, "X")->required();
  curv->add_option("--y", opt.y, "Y")->required();
  curv->add_option("--z", opt.z, "Z")->required();
  auto* gradient = app.add_subcommand("gradient", "Evaluate grad f");
  common(gradient);
  gradient->add_option("--f", opt.f, "Polynomial")->required();
  auto* project = app.add_subcommand("project", "Split X into tangent and normal parts");
  common(project);
  project->add_option("--x", opt.x, "X")->required();

  std::vector<std::string> argv_store = args;
  std::vector<char*> argv;
  std::string prog = "rinehart";
  argv.push_back(prog.data());
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    return execute(command, opt, out);
  } catch (const Error& e) {
    if (opt.json) {
      ordered_json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
      doc["engine_version"] = kEngineVersion;
      out << doc.dump(2) << "\n";
    }
    err << "error[" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace rinehart::cli

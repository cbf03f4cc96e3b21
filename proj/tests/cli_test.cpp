#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rinehart/cli.hpp"

using namespace rinehart;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string spec_path(const std::string& name) { return std::string(RINEHART_SPEC_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("rinehart_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

ErrorCode code_of(std::string_view text) {
  try {
    cli::parse_spec(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("spec was accepted");
  return ErrorCode::ValidationError;
}

}  // namespace

TEST_CASE("spec parsing") {
  cli::SpaceSpec spec = cli::parse_spec(R"({"ring":{"kind":"Fp","p":7},"vars":["a","b","c"],
    "quotient":{"sphere":{"c":"3"}},"seed":9,"max_degree":1})");
  CHECK(spec.ring == &Ring::prime_field(7));
  CHECK(spec.vars.size() == 3);
  CHECK(spec.seed == 9);
  CHECK(spec.max_degree == 1);
  CHECK(std::holds_alternative<cli::SphereQuotient>(spec.quotient));

  spec = cli::parse_spec(R"({"ring":{"kind":"quad","base":{"kind":"Q"},"s":-1},"vars":["x","y"]})");
  CHECK(spec.ring == &Ring::quad_ext(Ring::rationals(), -1));
}

TEST_CASE("spec errors name the field") {
  CHECK(code_of(R"({"ring":{"kind":"Fp","p":4},"vars":["x"]})") == ErrorCode::ValidationError);
  CHECK(code_of(R"({"ring":{"kind":"Q"},"vars":["x","y"],"quotient":{"sphere":{"c":"0"}}})") ==
        ErrorCode::ValidationError);
  CHECK(code_of(R"({"ring":{"kind":"Q"},"vars":["x", "x"]})") == ErrorCode::ValidationError);
  CHECK(code_of(R"({"ring":{"kind":"Q"},"vars":["al"]})") == ErrorCode::ValidationError);
  CHECK(code_of(R"({"ring":{"kind":"Q"},"vars":["x"],"checks":["nope"]})") == ErrorCode::ValidationError);
  CHECK(code_of(R"({"ring":{"kind":"Q"}, "vars": [)") == ErrorCode::ParseError);
  try {
    cli::parse_spec(R"({"ring":{"kind":"Fp","p":4},"vars":["x"]})");
  } catch (const Error& e) {
    CHECK(std::string(e.what()) == "ring.p: 4 is not prime");
  }
  try {
    cli::parse_spec(R"({"ring":{"kind":"Q"},"vars":["x","y"],"quotient":{"sphere":{"c":"0"}}})");
  } catch (const Error& e) {
    CHECK(std::string(e.what()) == "quotient.sphere.c: c must be a unit, got 0");
  }
}

TEST_CASE("check command on the bundled sphere") {
  Run r = run_cli({"check", spec_path("sphere_q3.json"), "--json", "--cases", "5"});
  CHECK(r.code == 0);
  json report = json::parse(r.out);
  CHECK(report["schema_version"] == 1);
  CHECK(report["engine_version"] == "0.1.0");
  std::vector<std::string> names;
  for (const auto& c : report["checks"]) {
    names.push_back(c["name"]);
    CHECK(c["status"] != "fail");
    CHECK_FALSE(c.contains("elapsed_ms"));
  }
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK(names.size() == cli::known_checks().size());

  Run again = run_cli({"check", spec_path("sphere_q3.json"), "--json", "--cases", "5"});
  CHECK(again.out == r.out);
}

TEST_CASE("computation commands") {
  Run r = run_cli({"connection", spec_path("sphere_q3.json"), "--json", "--x", "@Y1", "--y", "@Y2"});
  REQUIRE(r.code == 0);
  // nabla_{Y1} Y2 = -y Y1 on the unit sphere; x^2 y - y reduces to -y^3 - y z^2
  json doc = json::parse(r.out);
  CHECK(doc["command"] == "connection");
  CHECK(doc["result"] == json::array({"-y^3 - y*z^2", "x*y^2", "x*y*z"}));

  r = run_cli({"gradient", spec_path("hyperbolic_f5.json"), "--f", "x1*x2"});
  CHECK(r.code == 0);
  CHECK(r.out == "grad f = [\"x2\", \"x1\", \"0\"]\n");

  // grad needs sharp, which diag(1, x1^2 + 1) does not have
  r = run_cli({"gradient", spec_path("warped_q2.json"), "--f", "x1*x2"});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error[MetricNotMusical]", 0) == 0);

  r = run_cli({"project", spec_path("sphere_q3.json"), "--json", "--x", "[1, 0, 0]"});
  REQUIRE(r.code == 0);
  doc = json::parse(r.out);
  // x^2 reduces to 1 - y^2 - z^2
  CHECK(doc["result"]["normal"] == json::array({"-y^2 - z^2 + 1", "x*y", "x*z"}));

  r = run_cli({"space-form", spec_path("sphere_q3.json"), "--c", "1", "--json", "--spanning"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["spanning"].size() == 3);
}

TEST_CASE("failures and errors set the exit code") {
  Run r = run_cli({"space-form", spec_path("sphere_q3.json"), "--c", "2"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);

  r = run_cli({"check", write_temp("composite.json", R"({"ring":{"kind":"Fp","p":9},"vars":["x"]})")});
  CHECK(r.code == 2);
  CHECK(r.err == "error[ValidationError]: ring.p: 9 is not prime\n");

  r = run_cli({"check", write_temp("composite2.json", R"({"ring":{"kind":"Fp","p":9},"vars":["x"]})"), "--json"});
  CHECK(r.code == 2);
  CHECK(json::parse(r.out)["error"]["code"] == "ValidationError");

  r = run_cli({"connection", spec_path("sphere_q3.json"), "--x", "[1,0,0]", "--y", "@Y1"});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error[NotTangent]", 0) == 0);

  r = run_cli({"bogus"});
  CHECK(r.code == 2);
  r = run_cli({"check", "/nonexistent/spec.json"});
  CHECK(r.code == 2);
}

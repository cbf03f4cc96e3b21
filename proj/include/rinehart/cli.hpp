#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rinehart/hypersurface.hpp"

namespace rinehart::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kEngineVersion = "0.1.0";

struct SphereQuotient {
  Scalar c;
};

struct GeneratorQuotient {
  Poly generator;
  Poly q;
};

/// Validated contents of a space specification file.
struct SpaceSpec {
  const Ring* ring = nullptr;
  std::vector<std::string> vars;
  /// Over the ambient polynomial ring; absent means Euclidean.
  std::optional<Metric> metric;
  std::variant<std::monostate, SphereQuotient, GeneratorQuotient> quotient;
  std::vector<std::string> checks;
  std::uint64_t seed = 0;
  int max_degree = 2;
};

/// Throws ParseError (with line/column) for malformed JSON and
/// ValidationError naming the offending field otherwise.
SpaceSpec parse_spec(std::string_view text);
SpaceSpec load_spec(const std::string& path);

/// The spaces a spec describes.
class SpaceSetup {
 public:
  explicit SpaceSetup(const SpaceSpec& spec);

  const RinehartSpace& ambient() const noexcept { return ambient_; }
  const std::optional<HypersurfaceSpace>& hypersurface() const noexcept { return hyper_; }
  /// The quotient space when there is one, the ambient space otherwise.
  const RinehartSpace& space() const;
  /// Spanning fields of space(): Y_i for quotients, the basis otherwise.
  std::vector<VectorField> spanning() const;
  /// induced connection for quotients, Levi-Civita otherwise.
  Connection connection() const;

  /// Parses "[p1, p2, ...]", "p1,p2,..." or a named field "@X1", "@Y2", "@N".
  VectorField parse_field(std::string_view text) const;

 private:
  RinehartSpace ambient_;
  std::optional<HypersurfaceSpace> hyper_;
};

enum class CheckStatus { Pass, Fail, Skipped };
std::string_view status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::vector<std::string> counterexample;
  double elapsed_ms = 0;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  int max_degree = 2;
  /// Random cases per property check.
  std::size_t cases = 25;
};

/// Every check name the suite knows, in report order.
const std::vector<std::string>& known_checks();

/// Runs the named checks (all when empty). Results are sorted by name and
/// each name appears once.
std::vector<CheckResult> run_suite(const SpaceSetup& setup, const std::vector<std::string>& names,
                                   const SuiteOptions& options);

nlohmann::ordered_json report_json(const std::vector<CheckResult>& checks, bool timing);

/// Full command-line entry point: returns the process exit code
/// (0 all pass, 1 some check failed, 2 error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rinehart::cli

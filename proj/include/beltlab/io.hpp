#pragma once

// Fixture files, run configuration, and JSON report emission.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "beltlab/belt.hpp"
#include "beltlab/tiling.hpp"
#include "beltlab/wheel.hpp"

namespace beltlab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Provenance { Canonical, Derived, Random };
std::string to_string(Provenance p);
Provenance parse_provenance(const std::string& s);

struct TilingSpec {
  std::vector<Vec3Q> motif;
  LatticeBasis lattice;
  std::size_t k = 1;

  PeriodicMultiset multiset() const { return PeriodicMultiset(motif, lattice); }
  friend bool operator==(const TilingSpec&, const TilingSpec&) = default;
};

struct Fixture {
  std::string name;
  Provenance provenance = Provenance::Derived;
  std::vector<Vec3Q> generators;
  std::optional<TilingSpec> tiling;

  GeneratorSet generator_set() const { return GeneratorSet(generators); }
  friend bool operator==(const Fixture&, const Fixture&) = default;
};

// Accepts either {"generators": ...} at top level or nested under "zonotope".
// Errors are ErrorKind::Parse with the offending field path.
Fixture fixture_from_json(const Json& j);
Json fixture_to_json(const Fixture& f);
// Parses text; syntax errors report line and column.
Fixture parse_fixture(const std::string& text);
Fixture load_fixture(const std::filesystem::path& path);
void save_fixture(const Fixture& f, const std::filesystem::path& path);

// Hex SHA-256 of the canonical serialization.
std::string fixture_hash(const Fixture& f);
std::string sha256_hex(const std::string& data);

inline constexpr double kMaxTolerance = 1e-6;

struct RunConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::size_t trials = 100;
  std::optional<std::filesystem::path> json_path;
  double tolerance = kDefaultAngleTolerance;

  // Throws InvalidArgument on zero counts or tolerance outside (0, 1e-6].
  void validate() const;
  // Applies BELTLAB_TOL if set.
  void apply_environment();
};

Json to_json(const Rational& q);
Json to_json(const Vec3Q& v);
Rational rational_from_json(const Json& j, const std::string& where);
Vec3Q vec_from_json(const Json& j, const std::string& where);

// Fixed-precision float for reproducible reports.
double fixed_precision(double x);

Json analyze_report(const Zonotope& p);
Json classify_report(const Zonotope& p);
Json certificate_to_json(const TilingCertificate& c);
Json wheel_report_to_json(const WheelReport& r);
Json proper_report_to_json(const ProperPointReport& r);

// Wraps a payload with schema version, command name, and fixture hash.
Json envelope(const std::string& command, const Fixture& f, Json payload);

void write_json(const Json& j, const std::filesystem::path& path);
void write_text(const std::string& text, const std::filesystem::path& path);

}  // namespace beltlab

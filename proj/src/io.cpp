#include "beltlab/io.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "beltlab/errors.hpp"

namespace beltlab {

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Parse, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) parse_fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<Vec3Q> vec_list(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array of vectors");
  std::vector<Vec3Q> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(vec_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json vec_list_json(const std::vector<Vec3Q>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

std::string line_col(const std::string& text, std::size_t byte) {
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

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Canonical: return "canonical";
    case Provenance::Derived: return "derived";
    case Provenance::Random: return "random";
  }
  return "derived";
}

Provenance parse_provenance(const std::string& s) {
  if (s == "canonical") return Provenance::Canonical;
  if (s == "derived") return Provenance::Derived;
  if (s == "random") return Provenance::Random;
  throw Error(ErrorKind::Parse, "provenance: unknown tag \"" + s + "\"");
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Vec3Q& v) { return Json::array({to_json(v.x), to_json(v.y), to_json(v.z)}); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      parse_fail(where, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  parse_fail(where, "expected a rational string such as \"3/4\"");
}

Vec3Q vec_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) parse_fail(where, "expected a 3-vector");
  return Vec3Q(rational_from_json(j[0], where + "[0]"), rational_from_json(j[1], where + "[1]"),
               rational_from_json(j[2], where + "[2]"));
}

Fixture fixture_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("fixture", "expected an object");
  Fixture f;
  if (auto it = j.find("schema"); it != j.end()) {
    if (!it->is_number_integer() || it->get<int>() != kSchemaVersion) {
      parse_fail("schema", "unsupported schema version");
    }
  }
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) parse_fail("name", "expected a string");
    f.name = it->get<std::string>();
  }
  if (auto it = j.find("provenance"); it != j.end()) {
    if (!it->is_string()) parse_fail("provenance", "expected a string");
    f.provenance = parse_provenance(it->get<std::string>());
  }
  if (j.contains("zonotope")) {
    f.generators = vec_list(field(j["zonotope"], "generators", "zonotope"),
                            "zonotope.generators");
  } else {
    f.generators = vec_list(field(j, "generators", "fixture"), "generators");
  }
  try {
    (void)GeneratorSet(f.generators);
  } catch (const Error& e) {
    // Keep the semantic kind; the field path still goes into the message.
    throw Error(e.kind(), std::string("generators: ") + e.what());
  }
  const bool has_tiling = j.contains("lattice") || j.contains("motif") || j.contains("k");
  if (has_tiling) {
    const Json& lat = field(j, "lattice", "fixture");
    if (!lat.is_array() || lat.size() != 3) parse_fail("lattice", "expected three basis vectors");
    auto b = vec_list(lat, "lattice");
    std::vector<Vec3Q> motif{Vec3Q()};
    if (j.contains("motif")) motif = vec_list(j["motif"], "motif");
    if (motif.empty()) parse_fail("motif", "must be nonempty");
    std::size_t k = 1;
    if (j.contains("k")) {
      if (!j["k"].is_number_unsigned() || j["k"].get<std::size_t>() == 0) {
        parse_fail("k", "expected a positive integer");
      }
      k = j["k"].get<std::size_t>();
    }
    try {
      f.tiling = TilingSpec{std::move(motif), LatticeBasis(b[0], b[1], b[2]), k};
    } catch (const Error& e) {
      throw Error(e.kind(), std::string("lattice: ") + e.what());
    }
  }
  return f;
}

Json fixture_to_json(const Fixture& f) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["name"] = f.name;
  j["provenance"] = to_string(f.provenance);
  j["zonotope"] = Json{{"generators", vec_list_json(f.generators)}};
  if (f.tiling) {
    j["motif"] = vec_list_json(f.tiling->motif);
    const auto& b = f.tiling->lattice.vectors();
    j["lattice"] = vec_list_json({b.begin(), b.end()});
    j["k"] = f.tiling->k;
  }
  return j;
}

Fixture parse_fixture(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, "syntax error at " + line_col(text, e.byte == 0 ? 0 : e.byte - 1) +
                                      ": " + e.what());
  }
  return fixture_from_json(j);
}

Fixture load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_fixture(ss.str());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Parse) throw;
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
}

void write_text(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

void write_json(const Json& j, const std::filesystem::path& path) {
  write_text(j.dump(2) + "\n", path);
}

void save_fixture(const Fixture& f, const std::filesystem::path& path) {
  write_json(fixture_to_json(f), path);
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::Io, "sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::string fixture_hash(const Fixture& f) { return sha256_hex(fixture_to_json(f).dump()); }

void RunConfig::validate() const {
  if (samples == 0) throw Error(ErrorKind::InvalidArgument, "samples must be positive");
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be positive");
  if (!(tolerance > 0.0) || tolerance > kMaxTolerance) {
    throw Error(ErrorKind::InvalidArgument, "tolerance must lie in (0, 1e-6]");
  }
}

void RunConfig::apply_environment() {
  const char* env = std::getenv("BELTLAB_TOL");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  const double t = std::strtod(env, &end);
  if (end == env || *end != '\0') {
    throw Error(ErrorKind::InvalidArgument, std::string("BELTLAB_TOL is not a number: ") + env);
  }
  tolerance = t;
  validate();
}

double fixed_precision(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json analyze_report(const Zonotope& p) {
  Json j;
  Json gens = Json::array();
  for (const auto& g : p.generators()) gens.push_back(to_json(g));
  j["generators"] = gens;
  j["volume"] = to_json(p.volume());
  j["vertex_count"] = p.vertices().size();
  j["facet_count"] = p.facets().size();
  auto census = facet_census(p);
  j["facet_census"] = Json{{"parallelograms", census.parallelograms},
                           {"hexagons", census.hexagons},
                           {"other", census.other}};
  Json tbl = Json::array();
  for (const auto& b : belts(p)) {
    tbl.push_back(Json{{"generator", b.edge_gen_index},
                       {"direction", to_json(p.generators()[b.edge_gen_index])},
                       {"facet_count", b.facet_count()},
                       {"m", b.m}});
  }
  j["belts"] = tbl;
  auto cls = classify_report(p);
  j["venkov"] = cls["venkov"];
  j["class"] = cls["class"];
  j["witness"] = cls["witness"];
  return j;
}

Json classify_report(const Zonotope& p) {
  auto venkov = check_venkov(p);
  Json j;
  j["venkov"] = venkov.passes;
  Json tbl = Json::array();
  for (const auto& e : venkov.belts) {
    tbl.push_back(Json{{"generator", e.generator}, {"facet_count", e.facet_count}});
  }
  j["belts"] = tbl;
  auto cls = classify_fedorov(p);
  j["class"] = to_string(cls.type);
  if (cls.witness_generator) {
    j["witness"] = Json{{"generator", *cls.witness_generator},
                        {"facet_count", *cls.witness_facet_count}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json certificate_to_json(const TilingCertificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["claimed_k"] = c.claimed_k;
  j["density"] = to_json(c.density);
  j["samples_tested"] = c.samples_tested;
  j["boundary_resamples"] = c.boundary_resamples;
  Json fails = Json::array();
  for (const auto& f : c.failures) {
    fails.push_back(Json{{"index", f.index},
                         {"point", to_json(f.point)},
                         {"open_count", f.open_count},
                         {"closed_count", f.closed_count}});
  }
  j["failures"] = fails;
  return j;
}

Json wheel_report_to_json(const WheelReport& r) {
  Json j;
  j["v"] = to_json(r.v);
  j["m"] = r.m;
  Json pieces = Json::array();
  for (const auto& p : r.pieces) {
    pieces.push_back(Json{{"kind", to_string(p.kind)},
                          {"translate", to_json(p.translate.offset)},
                          {"motif_index", p.translate.motif_index},
                          {"dihedral_angle", fixed_precision(p.dihedral_angle)},
                          {"index", p.edge_or_facet}});
  }
  j["pieces"] = pieces;
  j["varpi"] = fixed_precision(r.varpi);
  j["ell"] = r.ell;
  j["phi"] = r.phi;
  if (r.kappa) {
    j["kappa"] = *r.kappa;
    j["grid_expression"] = std::to_string(*r.kappa) + "*(" + std::to_string(r.m) + "-1)/2 + " +
                           std::to_string(r.ell) + "/2";
    j["grid_value"] = to_json(*r.grid_value);
  } else {
    j["kappa"] = nullptr;
    j["grid_expression"] = nullptr;
    j["grid_value"] = nullptr;
  }
  j["claimed_k"] = r.claimed_k;
  j["tau_balance"] = r.tau_balance;
  return j;
}

Json proper_report_to_json(const ProperPointReport& r) {
  return Json{{"proper", r.proper},
              {"avoids_k", r.avoids_k},
              {"facet_points_ok", r.facet_points_ok},
              {"corresponding_points_ok", r.corresponding_points_ok},
              {"facet_incidences", r.facet_incidences},
              {"coplanar_pairs", r.coplanar_pairs},
              {"notes", r.notes}};
}

Json envelope(const std::string& command, const Fixture& f, Json payload) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["fixture"] = f.name;
  j["fixture_sha256"] = fixture_hash(f);
  for (auto& [k, v] : payload.items()) j[k] = v;
  return j;
}

}  // namespace beltlab

// beltlab: command-line front end for zonotope, belt, tiling and wheel checks.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "beltlab/errors.hpp"
#include "beltlab/evidence.hpp"
#include "beltlab/io.hpp"

using namespace beltlab;

namespace {

struct Globals {
  RunConfig run;
  std::string json_path;
  bool quiet = false;
  bool samples_set = false;
};

void emit(const Globals& g, const Json& j) {
  if (g.json_path.empty()) return;
  if (g.json_path == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json(j, g.json_path);
  }
}

void say(const Globals& g, const std::string& text) {
  if (!g.quiet && g.json_path != "-") std::cout << text;
}

int cmd_analyze(const Globals& g, const std::string& path) {
  Fixture f = load_fixture(path);
  Zonotope p(f.generator_set());
  Json rep = analyze_report(p);
  emit(g, envelope("analyze", f, rep));
  std::ostringstream os;
  os << "fixture     " << (f.name.empty() ? path : f.name) << "\n"
     << "generators  " << p.generators().size() << "\n"
     << "volume      " << to_string(p.volume()) << "\n"
     << "vertices    " << p.vertices().size() << "\n"
     << "facets      " << p.facets().size() << " (" << rep["facet_census"]["parallelograms"]
     << " parallelograms, " << rep["facet_census"]["hexagons"] << " hexagons, "
     << rep["facet_census"]["other"] << " other)\n"
     << "belts\n";
  for (const auto& b : rep["belts"]) {
    os << "  u" << b["generator"].get<std::size_t>() << " = "
       << to_string(vec_from_json(b["direction"], "direction")) << "  facets "
       << b["facet_count"] << "\n";
  }
  os << "venkov      " << (rep["venkov"].get<bool>() ? "pass" : "fail") << "\n"
     << "class       " << rep["class"].get<std::string>() << "\n";
  if (!rep["witness"].is_null()) {
    os << "witness     belt of u" << rep["witness"]["generator"] << " with "
       << rep["witness"]["facet_count"] << " facets\n";
  }
  say(g, os.str());
  return 0;
}

int cmd_classify(const Globals& g, const std::string& path) {
  Fixture f = load_fixture(path);
  Zonotope p(f.generator_set());
  Json rep = classify_report(p);
  emit(g, envelope("classify", f, rep));
  say(g, rep.dump() + "\n");
  return 0;
}

TilingCertificate certify(const Globals& g, const Fixture& f, const Zonotope& p,
                          std::size_t samples) {
  SamplePlan plan;
  plan.seed = g.run.seed;
  plan.n_samples = samples;
  return verify_k_fold(p, f.tiling->multiset(), f.tiling->k, plan);
}

const Fixture& require_tiling(const Fixture& f) {
  if (!f.tiling) throw Error(ErrorKind::InvalidArgument, "fixture has no tiling (lattice, motif, k)");
  return f;
}

int cmd_verify(const Globals& g, const std::string& path) {
  Fixture f = load_fixture(path);
  require_tiling(f);
  Zonotope p(f.generator_set());
  auto cert = certify(g, f, p, g.run.samples);
  Json rep = certificate_to_json(cert);
  rep["seed"] = g.run.seed;
  emit(g, envelope("verify-tiling", f, rep));
  std::ostringstream os;
  os << to_string(cert.verdict) << ": k=" << cert.claimed_k << " density="
     << to_string(cert.density) << " samples=" << cert.samples_tested
     << " boundary_resamples=" << cert.boundary_resamples << " failures=" << cert.failures.size()
     << "\n";
  say(g, os.str());
  return cert.verdict == Verdict::Verified ? 0 : 1;
}

int cmd_wheel(const Globals& g, const std::string& path, std::size_t belt,
              std::size_t verify_samples) {
  Fixture f = load_fixture(path);
  require_tiling(f);
  Zonotope p(f.generator_set());
  if (belt >= p.generators().size()) {
    throw Error(ErrorKind::InvalidArgument, "belt index out of range");
  }
  Json rep;
  rep["seed"] = g.run.seed;
  rep["belt"] = belt;
  rep["tolerance"] = g.run.tolerance;
  auto cert = certify(g, f, p, verify_samples);
  rep["certificate"] = certificate_to_json(cert);
  if (cert.verdict != Verdict::Verified) {
    rep["all_hold"] = false;
    emit(g, envelope("wheel", f, rep));
    say(g, "tiling not verified: " + to_string(cert.verdict) + "\n");
    return 1;
  }
  const std::size_t n = g.samples_set ? g.run.samples : 100;
  WheelAnalyzer w(p, f.tiling->multiset(), belt, g.run.tolerance);
  rep["m"] = w.m();
  rep["phi_bound"] = phi_lower_bound(w.m());
  bool all = true;
  std::size_t balanced = 0, phi_bound_met = 0;
  Json points = Json::array();
  for (const auto& wp : w.sample_proper_points(n, g.run.seed)) {
    Json pj;
    try {
      auto r = w.check_balance(f.tiling->k, wp);
      auto pb = w.check_phi_bound(wp);
      pj = wheel_report_to_json(r);
      pj["phi_bound_ok"] = pb.holds;
      pj["proper"] = proper_report_to_json(w.is_proper_point(wp));
      balanced += r.tau_balance;
      phi_bound_met += pb.holds;
      all = all && r.tau_balance && pb.holds;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoHalfGridMatch) throw;
      pj = Json{{"v", to_json(wp.v)}, {"error", std::string(to_string(e.kind()))},
                {"message", e.what()}};
      all = false;
    }
    points.push_back(std::move(pj));
  }
  rep["points"] = points;
  rep["balanced"] = balanced;
  rep["phi_bound_met"] = phi_bound_met;
  rep["all_hold"] = all;
  emit(g, envelope("wheel", f, rep));
  std::ostringstream os;
  os << "belt u" << belt << " (m=" << w.m() << "): " << points.size() << " proper points, "
     << balanced << " balanced, " << phi_bound_met << " meet the phi bound " << phi_lower_bound(w.m())
     << "\n";
  say(g, os.str());
  return all ? 0 : 1;
}

int cmd_evidence(const Globals& g, const EvidenceConfig& base) {
  EvidenceConfig c = base;
  c.seed = g.run.seed;
  c.trials = g.run.trials;
  if (g.samples_set) c.samples = g.run.samples;
  auto table = run_evidence(c);
  Json rep = evidence_to_json(table);
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = "evidence";
  j["seed"] = c.seed;
  j["trials"] = c.trials;
  j["samples"] = c.samples;
  for (auto& [k, v] : rep.items()) j[k] = v;
  emit(g, j);
  say(g, evidence_summary(table));
  return table.violations.empty() ? 0 : 1;
}

int cmd_export_obj(const Globals& g, const std::string& path, const std::string& out) {
  Fixture f = load_fixture(path);
  Zonotope p(f.generator_set());
  const std::string obj = to_obj(p, f.name.empty() ? "zonotope" : f.name);
  if (out.empty() || out == "-") {
    std::cout << obj;
  } else {
    write_text(obj, out);
  }
  Json rep{{"output", out},
           {"vertices", p.vertices().size()},
           {"facets", p.facets().size()}};
  emit(g, envelope("export-obj", f, rep));
  if (!out.empty() && out != "-") say(g, "wrote " + out + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"beltlab: zonotopes, belts, multiple tilings and wheel analysis"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.run.seed, "random seed");
  auto* samples_opt = app.add_option("--samples", g.run.samples, "sample count")
                          ->check(CLI::PositiveNumber);
  app.add_option("--json", g.json_path, "write the JSON report here ('-' for stdout)");
  app.add_flag("--quiet", g.quiet, "suppress human-readable output");

  std::string fixture;
  auto add_fixture = [&](CLI::App* sub) {
    sub->add_option("--fixture", fixture, "fixture JSON")->required()->check(CLI::ExistingFile);
  };

  auto* analyze = app.add_subcommand("analyze", "facets, belts, classification, volume");
  add_fixture(analyze);
  auto* classify = app.add_subcommand("classify", "four-or-six test and five-type class");
  add_fixture(classify);
  auto* verify = app.add_subcommand("verify-tiling", "sampled k-fold tiling certificate");
  add_fixture(verify);

  std::size_t belt = 0, verify_samples = 1000;
  auto* wheel = app.add_subcommand("wheel", "piece census at proper points on a belt edge");
  add_fixture(wheel);
  wheel->add_option("--belt", belt, "generator index of the belt (0-based)")->required();
  wheel->add_option("--verify-samples", verify_samples, "samples for the tiling precheck")
      ->check(CLI::PositiveNumber);

  EvidenceConfig ev;
  auto* evidence = app.add_subcommand("evidence", "random search for belt-bound violations");
  evidence->add_option("--trials", g.run.trials, "random zonotopes")->check(CLI::PositiveNumber);
  evidence->add_option("--lattices-per-k", ev.lattices_per_k, "candidates per (zonotope, k)")
      ->check(CLI::PositiveNumber);
  evidence->add_flag("!--no-fixed", ev.fixed_families, "skip the fixed families");

  std::string out;
  auto* obj = app.add_subcommand("export-obj", "Wavefront OBJ mesh of the zonotope");
  add_fixture(obj);
  obj->add_option("--out,-o", out, "output path ('-' for stdout)");

  CLI11_PARSE(app, argc, argv);
  g.samples_set = samples_opt->count() > 0;

  const char* command = app.get_subcommands().front()->get_name().c_str();
  try {
    g.run.apply_environment();
    g.run.validate();
    if (analyze->parsed()) return cmd_analyze(g, fixture);
    if (classify->parsed()) return cmd_classify(g, fixture);
    if (verify->parsed()) return cmd_verify(g, fixture);
    if (wheel->parsed()) return cmd_wheel(g, fixture, belt, verify_samples);
    if (evidence->parsed()) return cmd_evidence(g, ev);
    if (obj->parsed()) return cmd_export_obj(g, fixture, out);
  } catch (const Error& e) {
    Json j{{"schema", kSchemaVersion},
           {"command", command},
           {"error", std::string(to_string(e.kind()))},
           {"message", e.what()}};
    try {
      emit(g, j);
    } catch (const Error&) {
    }
    std::cerr << "beltlab: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

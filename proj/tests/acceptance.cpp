// Acceptance run: one PASS/FAIL line per criterion, with timing against its budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "beltlab/belt.hpp"
#include "beltlab/errors.hpp"
#include "beltlab/evidence.hpp"
#include "beltlab/tiling.hpp"
#include "beltlab/wheel.hpp"
#include "oracles.hpp"

using namespace beltlab;

namespace {

const std::array<FedorovType, 5> kTypes{
    FedorovType::Parallelepiped, FedorovType::HexagonalPrism, FedorovType::RhombicDodecahedron,
    FedorovType::ElongatedDodecahedron, FedorovType::TruncatedOctahedron};

const GeneratorSet kOctagonal({Vec3Q(1, 0, 0), Vec3Q(0, 1, 0), Vec3Q(1, 1, 0), Vec3Q(1, -1, 0),
                               Vec3Q(0, 0, 1)});

// Detail lines go to `log`; returning false marks the criterion failed.
using Check = std::function<bool(std::ostream& log)>;

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const Check& fn) {
  std::ostringstream log;
  bool ok = false;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    ok = fn(log);
  } catch (const std::exception& e) {
    log << "  exception: " << e.what() << "\n";
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_s) {
    log << "  over budget: " << secs << " s > " << budget_s << " s\n";
    ok = false;
  }
  if (!ok) ++failures;
  char line[256];
  std::snprintf(line, sizeof line, "%s criterion %d: %s (%.2f s, budget %.0f s)", ok ? "PASS" : "FAIL",
                id, title.c_str(), secs, budget_s);
  std::cout << line << "\n" << log.str() << std::flush;
}

std::vector<GeneratorSet> random_sets(std::size_t n, std::uint64_t seed) {
  std::vector<GeneratorSet> out;
  for (std::uint64_t s = 0; out.size() < n; ++s) {
    if (auto g = random_generators(seed, s)) out.push_back(*g);
  }
  return out;
}

std::set<Vec3Q, LexLess> as_set(const std::vector<Vec3Q>& v) { return {v.begin(), v.end()}; }

bool classification(std::ostream& log) {
  bool ok = true;
  for (auto type : kTypes) {
    auto got = classify_fedorov(Zonotope(canonical_generators(type))).type;
    if (got != type) {
      log << "  " << to_string(type) << " classified as " << to_string(got) << "\n";
      ok = false;
    }
  }
  auto oct = classify_fedorov(Zonotope(kOctagonal));
  if (oct.type != FedorovType::NotParallelohedron || oct.witness_facet_count != 8u) {
    log << "  octagonal prism: " << to_string(oct.type) << "\n";
    ok = false;
  }
  return ok;
}

bool venkov(std::ostream& log) {
  bool ok = true;
  for (auto type : kTypes) {
    if (!check_venkov(Zonotope(canonical_generators(type))).passes) {
      log << "  " << to_string(type) << " fails the four-or-six test\n";
      ok = false;
    }
  }
  std::size_t bad = 0;
  for (const auto& gens : random_sets(200, 2)) {
    Zonotope p(gens);
    for (const auto& b : belts(p)) {
      if (b.facet_count() != 2 * projected_direction_count(gens, b.edge_gen_index)) ++bad;
    }
  }
  log << "  200 random zonotopes, belt-count mismatches: " << bad << "\n";
  return ok && bad == 0;
}

bool decompositions(std::ostream& log) {
  auto sets = random_sets(200, 3);
  for (auto type : kTypes) sets.push_back(canonical_generators(type));
  sets.push_back(kOctagonal);
  std::size_t vertex_fail = 0, shift_fail = 0, sum_fail = 0, belts_checked = 0;
  for (const auto& gens : sets) {
    Zonotope p(gens);
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
      Vec3Q s;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        if (p.vertex_subsets()[i][g]) s += gens[g];
      }
      vertex_fail += s != p.vertices()[i];
    }
    for (const auto& b : belts(p)) {
      ++belts_checked;
      shift_fail += !check_shifted_facets_inside(p, b);
      auto d = belt_decompose(p, b);
      for (std::size_t i = 0; i < d.pieces.size(); ++i) {
        sum_fail += as_set(d.sum_vertices(i)) != as_set(p.facets()[d.pieces[i].facet].polygon_vertices);
      }
    }
  }
  log << "  " << sets.size() << " zonotopes, " << belts_checked << " belts; failures: vertex "
      << vertex_fail << ", F1+Ri " << shift_fail << ", Gi+Ri " << sum_fail << "\n";
  return vertex_fail == 0 && shift_fail == 0 && sum_fail == 0;
}

struct Fixed {
  std::string name;
  Zonotope p;
  PeriodicMultiset x;
  std::size_t k;
};

std::vector<Fixed> verified_fixtures() {
  std::vector<Fixed> out;
  Zonotope cube(GeneratorSet({Vec3Q(1, 0, 0), Vec3Q(0, 1, 0), Vec3Q(0, 0, 1)}));
  for (long n = 1; n <= 4; ++n) {
    out.push_back({"cube k=" + std::to_string(n), cube,
                   PeriodicMultiset::lattice_only(LatticeBasis::diagonal(make_rational(1, n), 1, 1)),
                   static_cast<std::size_t>(n)});
  }
  for (auto type : kTypes) {
    auto t = canonical_tiling(type);
    out.push_back({to_string(type), t.zonotope, t.translates, 1});
  }
  return out;
}

bool tilings(std::ostream& log) {
  bool ok = true;
  for (const auto& f : verified_fixtures()) {
    SamplePlan plan;
    plan.seed = 1;
    plan.n_samples = 1000;
    auto cert = verify_k_fold(f.p, f.x, f.k, plan);
    log << "  " << f.name << ": " << to_string(cert.verdict) << " (" << cert.samples_tested
        << " samples)\n";
    ok = ok && cert.verdict == Verdict::Verified && cert.samples_tested == 1000;
  }
  Zonotope cube(GeneratorSet({Vec3Q(1, 0, 0), Vec3Q(0, 1, 0), Vec3Q(0, 0, 1)}));
  auto half = PeriodicMultiset::lattice_only(LatticeBasis::diagonal(make_rational(1, 2), 1, 1));
  for (std::size_t k : {1u, 3u}) {
    SamplePlan plan;
    auto cert = verify_k_fold(cube, half, k, plan);
    log << "  cube diag(1/2) claimed k=" << k << ": " << to_string(cert.verdict) << " after "
        << cert.samples_tested << " samples\n";
    ok = ok && cert.verdict == Verdict::DensityMismatch && cert.samples_tested == 0;
  }
  return ok;
}

bool balance(std::ostream& log) {
  std::size_t points = 0, unbalanced = 0, off_grid = 0, phi_bound_fail = 0;
  std::uint64_t seed = 100;
  for (const auto& f : verified_fixtures()) {
    for (std::size_t g = 0; g < f.p.generators().size(); ++g) {
      WheelAnalyzer w(f.p, f.x, g, 1e-9);
      for (const auto& wp : w.sample_proper_points(4, ++seed)) {
        ++points;
        auto r = w.check_balance(f.k, wp);
        if (!r.tau_balance) {
          ++unbalanced;
          log << "  unbalanced at " << to_string(wp.v) << " in " << f.name << "\n";
        }
        std::size_t f_type = 0;
        for (const auto& p : r.pieces) f_type += p.kind == PieceKind::FType;
        if (!r.kappa || *r.kappa < 1 || r.ell != f_type) ++off_grid;
        if (!w.check_phi_bound(wp).holds) ++phi_bound_fail;
      }
    }
  }
  log << "  " << points << " proper points; unbalanced " << unbalanced << ", off grid "
      << off_grid << ", phi-bound violations " << phi_bound_fail << "\n";
  return points >= 100 && unbalanced == 0 && off_grid == 0 && phi_bound_fail == 0;
}

bool evidence(std::ostream& log) {
  EvidenceConfig cfg;
  cfg.seed = 1;
  cfg.trials = 100;
  auto t = run_evidence(cfg);
  log << "  " << t.random_zonotopes << " random zonotopes, " << t.candidates_tested
      << " candidates, " << t.verified_pairs << " verified pairs, " << t.violations.size()
      << " violations\n";
  for (const auto& v : t.violations) {
    log << "  violation: " << v.zonotope_id << " k=" << v.k << " belt " << v.max_belt << "\n";
  }
  return t.random_zonotopes >= 100 && t.violations.empty();
}

bool oracles(std::ostream& log) {
  CounterRng rng(7, 7);
  std::size_t clip_cases = 0, clip_bad = 0;
  for (const auto& gens : random_sets(60, 7)) {
    Zonotope p(gens);
    for (const auto& f : p.facets()) {
      if (clip_cases >= 500) break;
      const Vec3Q a = f.edge_vectors[0], b = f.edge_vectors[1];
      Vec3Q shift = oracle::random_rational(rng, -1, 1, 4) * a +
                    oracle::random_rational(rng, -1, 1, 4) * b;
      auto r = facet_intersection(f, shift);
      std::vector<Vec3Q> moved;
      for (const auto& v : f.polygon_vertices) moved.push_back(v + shift);
      auto want = oracle::corners(oracle::clip_polygon(f.polygon_vertices, moved, f.normal));
      clip_bad += as_set(r.polygon) != want;
      ++clip_cases;
    }
  }
  std::size_t cover_cases = 0, cover_bad = 0;
  while (cover_cases < 100) {
    auto raw = oracle::random_raw_generators(rng, 3 + rng.below(3));
    auto gens = canonicalize(raw).generators;
    if (gens.size() < 3 || zonotope_volume(gens) == 0) continue;
    Vec3Q b1(rng.range(1, 3), rng.range(-1, 1), 0);
    Vec3Q b2(rng.range(-1, 1), rng.range(1, 3), rng.range(-1, 1));
    Vec3Q b3(0, rng.range(-1, 1), rng.range(1, 3));
    if (det3(b1, b2, b3) == 0) continue;
    LatticeBasis lat(b1, b2, b3);
    std::vector<Vec3Q> motif{Vec3Q(), Vec3Q(make_rational(1, 2), make_rational(1, 3), 0)};
    Vec3Q pt(oracle::random_rational(rng, -2, 2, 4), oracle::random_rational(rng, -2, 2, 4),
             oracle::random_rational(rng, -2, 2, 4));
    auto got = count_cover(Zonotope(gens), PeriodicMultiset(motif, lat), pt);
    auto want = oracle::naive_cover(gens.vectors(), motif, lat, pt);
    cover_bad += got.open_count != want.open || got.closed_count != want.closed;
    ++cover_cases;
  }
  log << "  facet_intersection: " << clip_cases << " cases, " << clip_bad
      << " discrepancies; count_cover: " << cover_cases << " cases, " << cover_bad
      << " discrepancies\n";
  return clip_cases >= 500 && clip_bad == 0 && cover_bad == 0;
}

}  // namespace

int main() {
  criterion(1, "five-type classification and octagonal-prism witness", 1, classification);
  criterion(2, "four-or-six belt test and projected-direction counts", 10, venkov);
  criterion(3, "0/1 vertex representation, F1+Ri inside P, Fi = Gi+Ri", 30, decompositions);
  criterion(4, "cube family and canonical tilings verified; density mismatch rejected", 60,
            tilings);
  criterion(5, "balance, grid membership and phi lower bound at proper points", 60, balance);
  criterion(6, "evidence harness finds no belt-bound violations", 600, evidence);
  criterion(7, "facet intersection and cover count match brute-force oracles", 60, oracles);
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}

#include "beltlab/evidence.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "beltlab/errors.hpp"
#include "beltlab/rng.hpp"

namespace beltlab {

namespace {

std::uint64_t stream_id(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return CounterRng::mix(CounterRng::mix(CounterRng::mix(a) ^ b) ^ c);
}

std::size_t max_belt_size(const Zonotope& p) {
  std::size_t best = 0;
  for (const auto& b : belts(p)) best = std::max(best, b.facet_count());
  return best;
}

std::string classification(const Zonotope& p) {
  try {
    return to_string(classify_fedorov(p).type);
  } catch (const Error& e) {
    return std::string(to_string(e.kind()));
  }
}

struct Candidate {
  PeriodicMultiset x;
  std::size_t k;
};

// One-column scaling of a unimodular basis so |det| = vol / k.
LatticeBasis scaled_basis(std::array<Vec3Q, 3> cols, std::size_t column, const Rational& det) {
  cols[column] = cols[column] * det;
  return LatticeBasis(cols[0], cols[1], cols[2]);
}

class Harness {
 public:
  Harness(const EvidenceConfig& c, EvidenceTable& t) : config_(c), table_(t) {}

  void run_zonotope(const std::string& id, const GeneratorSet& gens, Provenance prov,
                    const std::vector<Candidate>& fixed, bool random_candidates,
                    std::uint64_t stream) {
    Zonotope p(gens);
    EvidenceRow row;
    row.zonotope_id = id;
    row.generators = gens.vectors();
    row.max_belt = max_belt_size(p);
    row.classification = classification(p);

    std::vector<Candidate> candidates = fixed;
    if (random_candidates) {
      for (std::size_t k = 1; k <= config_.max_k; ++k) {
        const Rational det = p.volume() / Rational(static_cast<long>(k));
        for (std::size_t c = 0; c < config_.lattices_per_k; ++c) {
          const std::uint64_t s = stream_id(stream, k, c);
          CounterRng rng(config_.seed, s);
          auto u = random_unimodular(config_.seed, s);
          const auto column = static_cast<std::size_t>(rng.below(3));
          candidates.push_back({PeriodicMultiset::lattice_only(scaled_basis(u, column, det)), k});
          // Generator-aligned candidate for parallelepipeds: a superlattice of
          // the spanning lattice.
          if (gens.size() == 3) {
            std::array<Vec3Q, 3> a{gens[0], gens[1], gens[2]};
            std::array<Vec3Q, 3> au;
            for (int col = 0; col < 3; ++col) {
              const auto& uc = u[static_cast<std::size_t>(col)];
              au[static_cast<std::size_t>(col)] = uc.x * a[0] + uc.y * a[1] + uc.z * a[2];
            }
            candidates.push_back(
                {PeriodicMultiset::lattice_only(scaled_basis(
                     au, column, Rational(1) / Rational(static_cast<long>(k)))),
                 k});
          }
        }
      }
    }

    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
      const auto& cand = candidates[ci];
      ++row.candidates_tested;
      ++table_.candidates_tested;
      SamplePlan plan;
      plan.seed = stream_id(config_.seed, stream, ci);
      plan.n_samples = config_.samples;
      plan.stop_on_first_failure = true;
      TilingCertificate cert;
      try {
        cert = verify_k_fold(p, cand.x, cand.k, plan);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BoundaryResampleExhausted) throw;
        continue;
      }
      if (cert.verdict != Verdict::Verified) continue;
      ++table_.verified_pairs;
      if (std::find(row.verified_k.begin(), row.verified_k.end(), cand.k) ==
          row.verified_k.end()) {
        row.verified_k.push_back(cand.k);
      }
      auto bound = belt_bound(cand.k);
      if (bound && row.max_belt > *bound) {
        Fixture f;
        f.name = id + "-k" + std::to_string(cand.k);
        f.provenance = prov;
        f.generators = gens.vectors();
        f.tiling = TilingSpec{cand.x.motif(), cand.x.lattice(), cand.k};
        table_.violations.push_back({id, cand.k, row.max_belt, std::move(f)});
      }
    }
    std::sort(row.verified_k.begin(), row.verified_k.end());
    table_.rows.push_back(std::move(row));
  }

 private:
  const EvidenceConfig& config_;
  EvidenceTable& table_;
};

}  // namespace

std::optional<std::size_t> belt_bound(std::size_t k) {
  if (k == 0) return std::nullopt;
  if (k <= 4) return 6;
  if (k == 5) return 10;
  if (k == 6) return 14;
  return std::nullopt;
}

std::array<Vec3Q, 3> random_unimodular(std::uint64_t seed, std::uint64_t stream) {
  CounterRng rng(seed, stream_id(stream, 0x756e69, 0));
  std::array<Vec3Q, 3> cols{Vec3Q(1, 0, 0), Vec3Q(0, 1, 0), Vec3Q(0, 0, 1)};
  const auto ops = 2 + rng.below(3);
  for (std::uint64_t o = 0; o < ops; ++o) {
    const auto i = static_cast<std::size_t>(rng.below(3));
    auto j = static_cast<std::size_t>(rng.below(2));
    if (j >= i) ++j;
    const long s = rng.below(2) == 0 ? -1 : 1;
    cols[i] += Rational(s) * cols[j];
  }
  return cols;
}

std::optional<GeneratorSet> random_generators(std::uint64_t seed, std::uint64_t stream) {
  CounterRng rng(seed, stream);
  const auto n = 3 + rng.below(5);
  std::vector<Vec3Q> raw;
  while (raw.size() < n) {
    Vec3Q v(rng.range(-3, 3), rng.range(-3, 3), rng.range(-3, 3));
    if (!v.is_zero()) raw.push_back(v);
  }
  GeneratorSet gens = canonicalize(raw).generators;
  if (gens.size() < 3) return std::nullopt;
  if (zonotope_volume(gens) == 0) return std::nullopt;
  return gens;
}

EvidenceTable run_evidence(const EvidenceConfig& config) {
  if (config.trials == 0 || config.samples == 0 || config.max_k == 0) {
    throw Error(ErrorKind::InvalidArgument, "evidence counts must be positive");
  }
  EvidenceTable table;
  Harness h(config, table);

  if (config.fixed_families) {
    GeneratorSet cube({Vec3Q(1, 0, 0), Vec3Q(0, 1, 0), Vec3Q(0, 0, 1)});
    std::vector<Candidate> cube_family;
    for (std::size_t n = 1; n <= config.max_k; ++n) {
      cube_family.push_back({PeriodicMultiset::lattice_only(LatticeBasis::diagonal(
                                 Rational(1) / Rational(static_cast<long>(n)), 1, 1)),
                             n});
    }
    h.run_zonotope("cube-family", cube, Provenance::Canonical, cube_family, false, 1);

    for (auto type : {FedorovType::Parallelepiped, FedorovType::HexagonalPrism,
                      FedorovType::RhombicDodecahedron, FedorovType::ElongatedDodecahedron,
                      FedorovType::TruncatedOctahedron}) {
      auto tiling = canonical_tiling(type);
      std::vector<Candidate> fam;
      for (std::size_t k = 1; k <= config.max_k; ++k) {
        fam.push_back({sublattice_scale(tiling.translates, 0, Rational(static_cast<long>(k))), k});
      }
      h.run_zonotope("canonical-" + to_string(type), canonical_generators(type),
                     Provenance::Canonical, fam, false, 2 + static_cast<std::uint64_t>(type));
    }

    GeneratorSet octagonal({Vec3Q(1, 0, 0), Vec3Q(0, 1, 0), Vec3Q(1, 1, 0), Vec3Q(1, -1, 0),
                            Vec3Q(0, 0, 1)});
    std::vector<Candidate> oct;
    const Rational vol = zonotope_volume(octagonal);
    for (std::size_t k = 1; k <= config.max_k; ++k) {
      oct.push_back({PeriodicMultiset::lattice_only(
                         LatticeBasis::diagonal(1, 1, vol / Rational(static_cast<long>(k)))),
                     k});
    }
    h.run_zonotope("octagonal-prism", octagonal, Provenance::Derived, oct, true, 16);
  }

  for (std::size_t trial = 0, attempt = 0; trial < config.trials; ++attempt) {
    auto gens = random_generators(config.seed, stream_id(0x72616e64, attempt, 0));
    if (!gens) continue;
    ++table.random_zonotopes;
    h.run_zonotope("random-" + std::to_string(trial), *gens, Provenance::Random, {}, true,
                   1000 + attempt);
    ++trial;
  }
  return table;
}

Json evidence_to_json(const EvidenceTable& table) {
  Json j;
  j["random_zonotopes"] = table.random_zonotopes;
  j["candidates_tested"] = table.candidates_tested;
  j["verified_pairs"] = table.verified_pairs;
  Json rows = Json::array();
  for (const auto& r : table.rows) {
    Json gens = Json::array();
    for (const auto& g : r.generators) gens.push_back(to_json(g));
    rows.push_back(Json{{"zonotope", r.zonotope_id},
                        {"generators", gens},
                        {"max_belt", r.max_belt},
                        {"verified_k", r.verified_k},
                        {"class", r.classification},
                        {"candidates_tested", r.candidates_tested}});
  }
  j["rows"] = rows;
  Json viol = Json::array();
  for (const auto& v : table.violations) {
    viol.push_back(Json{{"zonotope", v.zonotope_id},
                        {"k", v.k},
                        {"max_belt", v.max_belt},
                        {"fixture", fixture_to_json(v.fixture)}});
  }
  j["violations"] = viol;
  return j;
}

std::string evidence_summary(const EvidenceTable& table) {
  std::ostringstream os;
  os << std::left << std::setw(40) << "zonotope" << std::setw(10) << "max_belt" << std::setw(16)
     << "verified_k" << "class\n";
  for (const auto& r : table.rows) {
    if (r.verified_k.empty()) continue;
    std::string ks;
    for (auto k : r.verified_k) ks += (ks.empty() ? "" : ",") + std::to_string(k);
    os << std::setw(40) << r.zonotope_id << std::setw(10) << r.max_belt << std::setw(16) << ks
       << r.classification << "\n";
  }
  os << table.random_zonotopes << " random zonotopes, " << table.candidates_tested
     << " candidate lattices, " << table.verified_pairs << " verified pairs, "
     << table.violations.size() << " violations\n";
  return os.str();
}

}  // namespace beltlab

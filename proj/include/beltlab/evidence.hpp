#pragma once

// Randomized search for k-fold lattice tilings by zonotopes, recording the
// largest belt of every zonotope that verifies and flagging rows whose belt
// exceeds the bound for its multiplicity.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "beltlab/io.hpp"

namespace beltlab {

struct EvidenceConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 100;          // random zonotopes
  std::size_t lattices_per_k = 2;    // random candidates per (zonotope, k)
  std::size_t max_k = 6;
  std::size_t samples = 200;         // per candidate
  bool fixed_families = true;        // cube family, canonical five, octagonal prism
};

struct EvidenceRow {
  std::string zonotope_id;
  std::vector<Vec3Q> generators;
  std::size_t max_belt = 0;  // 2 m_max
  std::vector<std::size_t> verified_k;
  std::string classification;
  std::size_t candidates_tested = 0;
};

struct EvidenceViolation {
  std::string zonotope_id;
  std::size_t k = 0;
  std::size_t max_belt = 0;
  Fixture fixture;  // the offending tiling, for inspection
};

struct EvidenceTable {
  std::vector<EvidenceRow> rows;
  std::vector<EvidenceViolation> violations;
  std::size_t random_zonotopes = 0;
  std::size_t candidates_tested = 0;
  std::size_t verified_pairs = 0;
};

// Largest belt allowed at multiplicity k (4 -> 6, 5 -> 10, 6 -> 14);
// nullopt when no bound is asserted.
std::optional<std::size_t> belt_bound(std::size_t k);

// Random integer unimodular matrix (columns) from a short product of
// elementary operations.
std::array<Vec3Q, 3> random_unimodular(std::uint64_t seed, std::uint64_t stream);

// Random generator set: 3..7 integer vectors in [-3,3]^3, canonicalized,
// full rank. nullopt when the draw is planar.
std::optional<GeneratorSet> random_generators(std::uint64_t seed, std::uint64_t stream);

EvidenceTable run_evidence(const EvidenceConfig& config);

Json evidence_to_json(const EvidenceTable& table);
std::string evidence_summary(const EvidenceTable& table);

}  // namespace beltlab

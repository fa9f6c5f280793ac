#pragma once

// Periodic translate multisets X = M + Lambda and sampled certification of
// k-fold tilings P + X.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "beltlab/belt.hpp"
#include "beltlab/zonotope.hpp"

namespace beltlab {

class PeriodicMultiset {
 public:
  PeriodicMultiset(std::vector<Vec3Q> motif, LatticeBasis lattice);

  static PeriodicMultiset lattice_only(LatticeBasis lattice) {
    return PeriodicMultiset({Vec3Q()}, std::move(lattice));
  }

  // Repeated motif entries are repeated translates.
  const std::vector<Vec3Q>& motif() const { return motif_; }
  const LatticeBasis& lattice() const { return lattice_; }

  friend bool operator==(const PeriodicMultiset&, const PeriodicMultiset&) = default;

 private:
  std::vector<Vec3Q> motif_;
  LatticeBasis lattice_;
};

// One element x = motif[motif_index] + lattice_point of X.
struct Translate {
  std::size_t motif_index = 0;
  Vec3Q lattice_point;
  Vec3Q offset;
};

// Translates x of X whose bounding box P.bbox + x meets `box`.
std::vector<Translate> translates_meeting(const Zonotope& p, const PeriodicMultiset& x,
                                          const Box3Q& box);
// Translates with point in P + x (closed).
std::vector<Translate> translates_containing(const Zonotope& p, const PeriodicMultiset& x,
                                             const Vec3Q& point);

struct CoverCount {
  std::size_t open_count = 0;
  std::size_t closed_count = 0;
  friend bool operator==(const CoverCount&, const CoverCount&) = default;
};

CoverCount count_cover(const Zonotope& p, const PeriodicMultiset& x, const Vec3Q& point);

// |M| vol(P) / |det Lambda|
Rational tiling_density(const Zonotope& p, const PeriodicMultiset& x);

inline constexpr long kDefaultSampleDenominator = 524287;  // 2^19 - 1, prime

struct SamplePlan {
  std::uint64_t seed = 0;
  std::size_t n_samples = 1000;
  // Defaults to the half-open parallelepiped spanned by the lattice basis.
  std::optional<Box3Q> fundamental_domain;
  long denominator = kDefaultSampleDenominator;
  std::size_t max_resamples = 100;
  bool stop_on_first_failure = false;
};

enum class Verdict { Verified, DensityMismatch, CountMismatch };
std::string to_string(Verdict v);

struct SampleFailure {
  std::size_t index = 0;
  Vec3Q point;
  std::size_t open_count = 0;
  std::size_t closed_count = 0;
};

struct TilingCertificate {
  std::size_t claimed_k = 0;
  Rational density;
  std::size_t samples_tested = 0;
  std::size_t boundary_resamples = 0;
  std::vector<SampleFailure> failures;
  Verdict verdict = Verdict::CountMismatch;
};

// The generic point used for sample `index`, retry `attempt`.
Vec3Q sample_point(const PeriodicMultiset& x, const SamplePlan& plan, std::size_t index,
                   std::size_t attempt);

TilingCertificate verify_k_fold(const Zonotope& p, const PeriodicMultiset& x, std::size_t k,
                                const SamplePlan& plan);

struct CanonicalTiling {
  FedorovType type;
  Zonotope zonotope;
  PeriodicMultiset translates;
  std::size_t k = 1;
};

GeneratorSet canonical_generators(FedorovType type);
// One-fold lattice tiling of each of the five types.
CanonicalTiling canonical_tiling(FedorovType type);

// Divides basis vector `basis_index` (0-based) by `factor`; density scales by `factor`.
PeriodicMultiset sublattice_scale(const PeriodicMultiset& x, std::size_t basis_index,
                                  const Rational& factor);

}  // namespace beltlab

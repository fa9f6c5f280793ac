#include "beltlab/tiling.hpp"

#include "beltlab/errors.hpp"
#include "beltlab/rng.hpp"

namespace beltlab {

PeriodicMultiset::PeriodicMultiset(std::vector<Vec3Q> motif, LatticeBasis lattice)
    : motif_(std::move(motif)), lattice_(std::move(lattice)) {
  if (motif_.empty()) throw Error(ErrorKind::InvalidArgument, "motif must be nonempty");
}

std::vector<Translate> translates_meeting(const Zonotope& p, const PeriodicMultiset& x,
                                          const Box3Q& box) {
  const Box3Q& bb = p.bounding_box();
  std::vector<Translate> out;
  for (std::size_t mi = 0; mi < x.motif().size(); ++mi) {
    const Vec3Q& m = x.motif()[mi];
    // bb + m + lambda meets box  <=>  lambda in [box.lo - bb.hi - m, box.hi - bb.lo - m]
    Box3Q range(box.lo - bb.hi - m, box.hi - bb.lo - m);
    for (auto& lambda : lattice_points_in_box(x.lattice(), range)) {
      Vec3Q offset = m + lambda;
      out.push_back({mi, std::move(lambda), std::move(offset)});
    }
  }
  return out;
}

std::vector<Translate> translates_containing(const Zonotope& p, const PeriodicMultiset& x,
                                             const Vec3Q& point) {
  // Index-space bounds: lambda lies in B^-1 (point - m - P), a zonotope whose
  // axis extents are exact, so skewed lattices stay cheap.
  const LatticeBasis& lattice = x.lattice();
  Vec3Q half;
  for (const auto& g : p.generators()) {
    Vec3Q img = lattice.coordinates(g);
    for (int a = 0; a < 3; ++a) half[a] += abs(img[a]);
  }
  half = half / Rational(2);
  std::vector<Translate> out;
  for (std::size_t mi = 0; mi < x.motif().size(); ++mi) {
    const Vec3Q& m = x.motif()[mi];
    Vec3Q c = lattice.coordinates(point - m - p.center());
    std::array<Integer, 3> lo, hi;
    for (int a = 0; a < 3; ++a) {
      lo[static_cast<std::size_t>(a)] = ceil(c[a] - half[a]);
      hi[static_cast<std::size_t>(a)] = floor(c[a] + half[a]);
    }
    for (Integer i = lo[0]; i <= hi[0]; ++i) {
      for (Integer j = lo[1]; j <= hi[1]; ++j) {
        for (Integer k = lo[2]; k <= hi[2]; ++k) {
          Vec3Q lambda = lattice.point(i, j, k);
          Vec3Q offset = m + lambda;
          if (p.contains(point - offset, Membership::Closed)) {
            out.push_back({mi, std::move(lambda), std::move(offset)});
          }
        }
      }
    }
  }
  return out;
}

CoverCount count_cover(const Zonotope& p, const PeriodicMultiset& x, const Vec3Q& point) {
  CoverCount c;
  for (const auto& t : translates_containing(p, x, point)) {
    ++c.closed_count;
    if (p.contains(point - t.offset, Membership::Open)) ++c.open_count;
  }
  return c;
}

Rational tiling_density(const Zonotope& p, const PeriodicMultiset& x) {
  return Rational(static_cast<long>(x.motif().size())) * p.volume() / abs(x.lattice().det());
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "Verified";
    case Verdict::DensityMismatch: return "DensityMismatch";
    case Verdict::CountMismatch: return "CountMismatch";
  }
  return "CountMismatch";
}

Vec3Q sample_point(const PeriodicMultiset& x, const SamplePlan& plan, std::size_t index,
                   std::size_t attempt) {
  if (plan.denominator < 2) throw Error(ErrorKind::InvalidArgument, "denominator must be >= 2");
  CounterRng rng(plan.seed, (static_cast<std::uint64_t>(index) << 16) ^ attempt);
  const auto q = static_cast<std::uint64_t>(plan.denominator);
  std::array<Rational, 3> t;
  for (auto& ti : t) {
    ti = Rational(static_cast<long>(rng.below(q)), plan.denominator);
    ti.canonicalize();
  }
  if (plan.fundamental_domain) {
    const Box3Q& b = *plan.fundamental_domain;
    Vec3Q p;
    for (int a = 0; a < 3; ++a) {
      p[a] = b.lo[a] + t[static_cast<std::size_t>(a)] * (b.hi[a] - b.lo[a]);
    }
    return p;
  }
  const auto& basis = x.lattice().vectors();
  return t[0] * basis[0] + t[1] * basis[1] + t[2] * basis[2];
}

TilingCertificate verify_k_fold(const Zonotope& p, const PeriodicMultiset& x, std::size_t k,
                                const SamplePlan& plan) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  if (plan.n_samples == 0) throw Error(ErrorKind::InvalidArgument, "n_samples must be >= 1");
  TilingCertificate cert;
  cert.claimed_k = k;
  cert.density = tiling_density(p, x);
  if (cert.density != Rational(static_cast<long>(k))) {
    cert.verdict = Verdict::DensityMismatch;
    return cert;
  }
  for (std::size_t i = 0; i < plan.n_samples; ++i) {
    bool generic = false;
    for (std::size_t attempt = 0; attempt <= plan.max_resamples; ++attempt) {
      Vec3Q point = sample_point(x, plan, i, attempt);
      CoverCount c = count_cover(p, x, point);
      if (c.open_count != c.closed_count) {
        ++cert.boundary_resamples;
        continue;
      }
      generic = true;
      ++cert.samples_tested;
      if (c.closed_count != k) {
        cert.failures.push_back({i, point, c.open_count, c.closed_count});
      }
      break;
    }
    if (!generic) {
      throw Error(ErrorKind::BoundaryResampleExhausted,
                  "sample " + std::to_string(i) + " hit the boundary " +
                      std::to_string(plan.max_resamples + 1) + " times");
    }
    if (plan.stop_on_first_failure && !cert.failures.empty()) break;
  }
  cert.verdict = cert.failures.empty() ? Verdict::Verified : Verdict::CountMismatch;
  return cert;
}

GeneratorSet canonical_generators(FedorovType type) {
  switch (type) {
    case FedorovType::Parallelepiped:
      return GeneratorSet({Vec3Q(1, 0, 0), Vec3Q(0, 1, 0), Vec3Q(0, 0, 1)});
    case FedorovType::HexagonalPrism:
      return GeneratorSet({Vec3Q(1, 0, 0), Vec3Q(0, 1, 0), Vec3Q(1, 1, 0), Vec3Q(0, 0, 1)});
    case FedorovType::RhombicDodecahedron:
      return GeneratorSet(
          {Vec3Q(1, 1, 1), Vec3Q(1, -1, 1), Vec3Q(-1, 1, 1), Vec3Q(-1, -1, 1)});
    case FedorovType::ElongatedDodecahedron:
      return GeneratorSet({Vec3Q(1, 1, 1), Vec3Q(1, -1, 1), Vec3Q(-1, 1, 1), Vec3Q(-1, -1, 1),
                           Vec3Q(0, 0, 1)});
    case FedorovType::TruncatedOctahedron:
      return GeneratorSet({Vec3Q(1, 1, 0), Vec3Q(1, -1, 0), Vec3Q(1, 0, 1), Vec3Q(1, 0, -1),
                           Vec3Q(0, 1, 1), Vec3Q(0, 1, -1)});
    case FedorovType::NotParallelohedron:
      break;
  }
  throw Error(ErrorKind::InvalidArgument, "no canonical tiling for NotParallelohedron");
}

CanonicalTiling canonical_tiling(FedorovType type) {
  auto lattice = [&]() -> LatticeBasis {
    switch (type) {
      case FedorovType::Parallelepiped:
        return LatticeBasis::standard();
      case FedorovType::HexagonalPrism:
        return LatticeBasis(Vec3Q(2, 1, 0), Vec3Q(-1, 1, 0), Vec3Q(0, 0, 1));
      case FedorovType::RhombicDodecahedron:
        return LatticeBasis(Vec3Q(2, 2, 0), Vec3Q(2, -2, 0), Vec3Q(2, 0, 2));
      case FedorovType::ElongatedDodecahedron:
        return LatticeBasis(Vec3Q(2, 2, 0), Vec3Q(2, -2, 0), Vec3Q(2, 0, 3));
      case FedorovType::TruncatedOctahedron:
        return LatticeBasis(Vec3Q(2, 2, 2), Vec3Q(2, 2, -2), Vec3Q(2, -2, 2));
      case FedorovType::NotParallelohedron:
        break;
    }
    throw Error(ErrorKind::InvalidArgument, "no canonical tiling for NotParallelohedron");
  }();
  return CanonicalTiling{type, Zonotope(canonical_generators(type)),
                         PeriodicMultiset::lattice_only(lattice), 1};
}

PeriodicMultiset sublattice_scale(const PeriodicMultiset& x, std::size_t basis_index,
                                  const Rational& factor) {
  if (basis_index > 2) throw Error(ErrorKind::InvalidArgument, "basis index must be 0, 1 or 2");
  if (factor <= 0) throw Error(ErrorKind::InvalidArgument, "factor must be positive");
  auto b = x.lattice().vectors();
  b[basis_index] = b[basis_index] / factor;
  return PeriodicMultiset(x.motif(), LatticeBasis(b[0], b[1], b[2]));
}

}  // namespace beltlab

#pragma once

// Brute-force reference implementations used to cross-check the library.
// Deliberately naive and independent of the library's algorithms.

#include <algorithm>
#include <set>
#include <vector>

#include "beltlab/exact.hpp"
#include "beltlab/rng.hpp"

namespace oracle {

using beltlab::Rational;
using beltlab::Vec3Q;

inline Rational cofactor_det(const Vec3Q& a, const Vec3Q& b, const Vec3Q& c) {
  return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
         a.z * (b.x * c.y - b.y * c.x);
}

inline Vec3Q cross3(const Vec3Q& a, const Vec3Q& b) {
  return Vec3Q(a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x);
}

inline Rational dot3(const Vec3Q& a, const Vec3Q& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline std::vector<Vec3Q> subset_sums(const std::vector<Vec3Q>& gens) {
  std::vector<Vec3Q> out;
  const std::size_t n = gens.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Vec3Q s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) s += gens[i];
    }
    out.push_back(s);
  }
  return out;
}

// Every pairwise cross product, both signs, with its support value. May
// contain duplicates; that does not matter for membership.
struct HalfSpace {
  Vec3Q n;
  Rational h;
};

inline std::vector<HalfSpace> halfspaces(const std::vector<Vec3Q>& gens) {
  std::vector<HalfSpace> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Vec3Q n = cross3(gens[i], gens[j]);
      if (n.is_zero()) continue;
      for (int s : {1, -1}) {
        Vec3Q ns = n * Rational(s);
        Rational h = 0;
        for (const auto& g : gens) {
          Rational d = dot3(ns, g);
          if (d > 0) h += d;
        }
        out.push_back({ns, h});
      }
    }
  }
  return out;
}

inline bool inside(const std::vector<HalfSpace>& hs, const Vec3Q& x, bool open) {
  for (const auto& h : hs) {
    Rational d = dot3(h.n, x);
    if (open ? d >= h.h : d > h.h) return false;
  }
  return true;
}

// Extreme points of the zonotope: subset sums tight on three independent
// normals.
inline std::set<Vec3Q, beltlab::LexLess> vertices(const std::vector<Vec3Q>& gens) {
  auto hs = halfspaces(gens);
  std::set<Vec3Q, beltlab::LexLess> out;
  for (const auto& p : subset_sums(gens)) {
    std::vector<Vec3Q> tight;
    for (const auto& h : hs) {
      if (dot3(h.n, p) == h.h) tight.push_back(h.n);
    }
    bool full = false;
    for (std::size_t a = 0; a < tight.size() && !full; ++a) {
      for (std::size_t b = a + 1; b < tight.size() && !full; ++b) {
        for (std::size_t c = b + 1; c < tight.size() && !full; ++c) {
          full = cofactor_det(tight[a], tight[b], tight[c]) != 0;
        }
      }
    }
    if (full) out.insert(p);
  }
  return out;
}

inline std::size_t facet_count(const std::vector<Vec3Q>& gens) {
  std::set<Vec3Q, beltlab::LexLess> normals;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Vec3Q n = cross3(gens[i], gens[j]);
      if (n.is_zero()) continue;
      normals.insert(beltlab::canonical_direction(n));
    }
  }
  return 2 * normals.size();
}

// Sutherland-Hodgman clipping of `subject` by the convex polygon `clip`,
// both counterclockwise about `normal` and lying in one plane.
inline std::vector<Vec3Q> clip_polygon(std::vector<Vec3Q> subject, const std::vector<Vec3Q>& clip,
                                       const Vec3Q& normal) {
  for (std::size_t e = 0; e < clip.size() && !subject.empty(); ++e) {
    const Vec3Q& a = clip[e];
    const Vec3Q& b = clip[(e + 1) % clip.size()];
    const Vec3Q inward = cross3(normal, b - a);
    auto side = [&](const Vec3Q& p) { return dot3(inward, p - a); };
    std::vector<Vec3Q> out;
    for (std::size_t i = 0; i < subject.size(); ++i) {
      const Vec3Q& p = subject[i];
      const Vec3Q& q = subject[(i + 1) % subject.size()];
      Rational sp = side(p), sq = side(q);
      if (sp >= 0) out.push_back(p);
      if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
        Rational t = sp / (sp - sq);
        out.push_back(p + t * (q - p));
      }
    }
    subject = std::move(out);
  }
  return subject;
}

// Corners of the convex hull of points that are known to lie on the
// boundary of a convex set: drop duplicates and points strictly inside a
// segment between two others.
inline std::set<Vec3Q, beltlab::LexLess> corners(const std::vector<Vec3Q>& pts) {
  std::vector<Vec3Q> u;
  for (const auto& p : pts) {
    if (std::find(u.begin(), u.end(), p) == u.end()) u.push_back(p);
  }
  std::set<Vec3Q, beltlab::LexLess> out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    bool interior = false;
    for (std::size_t a = 0; a < u.size() && !interior; ++a) {
      for (std::size_t b = a + 1; b < u.size() && !interior; ++b) {
        if (a == i || b == i) continue;
        Vec3Q d = u[b] - u[a];
        Vec3Q w = u[i] - u[a];
        if (!cross3(d, w).is_zero()) continue;
        Rational t = dot3(w, d) / dot3(d, d);
        interior = t > 0 && t < 1;
      }
    }
    if (!interior) out.insert(u[i]);
  }
  return out;
}

// Closed and open covering counts by brute force over every lattice index
// triple whose image can reach the zonotope's coordinate bounding box.
struct NaiveCount {
  std::size_t open = 0;
  std::size_t closed = 0;
};

inline NaiveCount naive_cover(const std::vector<Vec3Q>& gens, const std::vector<Vec3Q>& motif,
                              const beltlab::LatticeBasis& lattice, const Vec3Q& point) {
  auto hs = halfspaces(gens);
  Vec3Q center, half;
  for (const auto& u : gens) {
    center += beltlab::make_rational(1, 2) * u;
    half += beltlab::make_rational(1, 2) * Vec3Q(beltlab::abs(u.x), beltlab::abs(u.y), beltlab::abs(u.z));
  }
  // Columns of the inverse basis are the coordinates of the unit vectors.
  const Vec3Q e[3]{lattice.coordinates(Vec3Q(1, 0, 0)), lattice.coordinates(Vec3Q(0, 1, 0)),
                   lattice.coordinates(Vec3Q(0, 0, 1))};
  NaiveCount c;
  for (const auto& m : motif) {
    Vec3Q mid = lattice.coordinates(point - m - center);
    long lo[3], hi[3];
    for (int d = 0; d < 3; ++d) {
      Rational r = beltlab::abs(e[0][d]) * half.x + beltlab::abs(e[1][d]) * half.y +
                   beltlab::abs(e[2][d]) * half.z;
      lo[d] = beltlab::floor(mid[d] - r).get_si() - 1;
      hi[d] = beltlab::ceil(mid[d] + r).get_si() + 1;
    }
    for (long i = lo[0]; i <= hi[0]; ++i) {
      for (long j = lo[1]; j <= hi[1]; ++j) {
        for (long k = lo[2]; k <= hi[2]; ++k) {
          Vec3Q x = point - m - lattice.point(i, j, k);
          if (inside(hs, x, false)) ++c.closed;
          if (inside(hs, x, true)) ++c.open;
        }
      }
    }
  }
  return c;
}

inline Rational random_rational(beltlab::CounterRng& rng, long lo, long hi, long den) {
  return beltlab::make_rational(rng.range(lo * den, hi * den), den);
}

inline std::vector<Vec3Q> random_raw_generators(beltlab::CounterRng& rng, std::size_t n) {
  std::vector<Vec3Q> raw;
  while (raw.size() < n) {
    Vec3Q v(rng.range(-3, 3), rng.range(-3, 3), rng.range(-3, 3));
    if (!v.is_zero()) raw.push_back(v);
  }
  return raw;
}

}  // namespace oracle

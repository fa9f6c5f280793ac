#pragma once

// Planar zonogon helpers shared by the engine, belt analysis, and wheel
// analysis. Not part of the public API.

#include <optional>
#include <utility>
#include <vector>

#include "beltlab/exact.hpp"

namespace beltlab::detail {

// Counterclockwise angular order about `normal`, starting at `reference`.
// All vectors are assumed orthogonal to `normal` and nonzero.
class AngularLess {
 public:
  AngularLess(Vec3Q normal, Vec3Q reference)
      : normal_(std::move(normal)), reference_(std::move(reference)) {}

  bool operator()(const Vec3Q& a, const Vec3Q& b) const {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return dot(normal_, cross(a, b)) > 0;
  }

 private:
  int half(const Vec3Q& a) const {
    Rational s = dot(normal_, cross(reference_, a));
    if (s > 0) return 0;
    if (s == 0 && dot(a, reference_) > 0) return 0;
    return 1;
  }

  Vec3Q normal_;
  Vec3Q reference_;
};

struct WalkedEdge {
  std::size_t slot;  // position in the input generator list
  int sign;
  Vec3Q vector;
};

struct ZonogonWalk {
  std::vector<bool> start_subset;  // generators included at vertices[0]
  std::vector<Vec3Q> vertices;
  std::vector<WalkedEdge> edges;  // edge e goes vertices[e] -> vertices[e+1]
};

// Boundary of base + sum [0,1] gens[i], counterclockwise about `normal`.
// Generators must be pairwise non-parallel and orthogonal to `normal`.
ZonogonWalk walk_zonogon(const Vec3Q& base, const std::vector<Vec3Q>& gens,
                         const Vec3Q& normal);

// Zonogon base + sum [0,1] gens[i] lying in the plane with the given normal.
// Generators need not be distinct in direction.
class PlanarZonogon {
 public:
  PlanarZonogon(Vec3Q base, std::vector<Vec3Q> gens, Vec3Q normal);

  const Vec3Q& center() const { return center_; }

  // Closed membership within the plane.
  bool contains(const Vec3Q& y) const;
  // Relative interior (only meaningful for two-dimensional zonogons).
  bool contains_relative_interior(const Vec3Q& y) const;

  // Parameter interval {a : point + a*dir in zonogon}; dir in-plane.
  std::optional<std::pair<Rational, Rational>> line_interval(const Vec3Q& point,
                                                             const Vec3Q& dir) const;

  bool is_two_dimensional() const { return two_dimensional_; }

 private:
  struct Constraint {
    Vec3Q normal;
    Rational offset;  // |normal . (y - center)| <= offset
  };

  Vec3Q base_;
  Vec3Q plane_normal_;
  Vec3Q center_;
  std::vector<Constraint> constraints_;
  bool two_dimensional_ = false;
};

}  // namespace beltlab::detail

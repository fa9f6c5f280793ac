#include "zonogon.hpp"

#include <algorithm>

#include "beltlab/errors.hpp"

namespace beltlab::detail {

ZonogonWalk walk_zonogon(const Vec3Q& base, const std::vector<Vec3Q>& gens,
                         const Vec3Q& normal) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "walk_zonogon: no generators");
  const Vec3Q& reference = gens.front();
  // The edge traversed along +reference is the one minimizing (normal x reference) . x.
  Vec3Q left = cross(normal, reference);
  Vec3Q start = base;
  std::vector<bool> start_subset(gens.size(), false);
  std::vector<WalkedEdge> edges;
  edges.reserve(2 * gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (dot(left, gens[i]) < 0) {
      start += gens[i];
      start_subset[i] = true;
    }
    edges.push_back({i, +1, gens[i]});
    edges.push_back({i, -1, -gens[i]});
  }
  AngularLess less(normal, reference);
  std::sort(edges.begin(), edges.end(),
            [&](const WalkedEdge& a, const WalkedEdge& b) { return less(a.vector, b.vector); });

  ZonogonWalk walk;
  walk.start_subset = std::move(start_subset);
  walk.vertices.reserve(edges.size());
  Vec3Q p = start;
  for (const auto& e : edges) {
    walk.vertices.push_back(p);
    p += e.vector;
  }
  walk.edges = std::move(edges);
  return walk;
}

PlanarZonogon::PlanarZonogon(Vec3Q base, std::vector<Vec3Q> gens, Vec3Q normal)
    : base_(std::move(base)), plane_normal_(std::move(normal)) {
  center_ = base_;
  std::vector<Vec3Q> nonzero;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    center_ += Rational(1, 2) * g;
    nonzero.push_back(g);
  }
  constraints_.push_back({plane_normal_, Rational(0)});
  if (nonzero.empty()) {
    // A single point: pin both in-plane directions.
    Vec3Q axis = plane_normal_.x != 0 || plane_normal_.y != 0 ? Vec3Q(0, 0, 1) : Vec3Q(1, 0, 0);
    Vec3Q a = cross(plane_normal_, axis);
    constraints_.push_back({a, Rational(0)});
    constraints_.push_back({cross(plane_normal_, a), Rational(0)});
    return;
  }
  std::vector<Vec3Q> directions;
  for (const auto& g : nonzero) {
    Vec3Q d = canonical_direction(g);
    if (std::find(directions.begin(), directions.end(), d) == directions.end()) {
      directions.push_back(d);
    }
  }
  auto add_constraint = [&](const Vec3Q& nu) {
    Rational off = 0;
    for (const auto& g : nonzero) off += abs(dot(nu, g));
    constraints_.push_back({nu, Rational(off / 2)});
  };
  for (const auto& d : directions) add_constraint(cross(plane_normal_, d));
  two_dimensional_ = directions.size() >= 2;
  if (!two_dimensional_) add_constraint(directions.front());
}

bool PlanarZonogon::contains(const Vec3Q& y) const {
  Vec3Q rel = y - center_;
  for (const auto& c : constraints_) {
    if (abs(dot(c.normal, rel)) > c.offset) return false;
  }
  return true;
}

bool PlanarZonogon::contains_relative_interior(const Vec3Q& y) const {
  if (!two_dimensional_) return false;
  Vec3Q rel = y - center_;
  if (dot(plane_normal_, rel) != 0) return false;
  for (std::size_t i = 1; i < constraints_.size(); ++i) {
    if (abs(dot(constraints_[i].normal, rel)) >= constraints_[i].offset) return false;
  }
  return true;
}

std::optional<std::pair<Rational, Rational>> PlanarZonogon::line_interval(
    const Vec3Q& point, const Vec3Q& dir) const {
  std::optional<Rational> lo, hi;
  Vec3Q rel = point - center_;
  for (const auto& c : constraints_) {
    Rational slope = dot(c.normal, dir);
    Rational at = dot(c.normal, rel);
    if (slope == 0) {
      if (abs(at) > c.offset) return std::nullopt;
      continue;
    }
    Rational a = (-c.offset - at) / slope;
    Rational b = (c.offset - at) / slope;
    if (a > b) std::swap(a, b);
    if (!lo || a > *lo) lo = a;
    if (!hi || b < *hi) hi = b;
  }
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

}  // namespace beltlab::detail

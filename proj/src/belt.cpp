#include "beltlab/belt.hpp"

#include <algorithm>

#include "beltlab/errors.hpp"
#include "zonogon.hpp"

namespace beltlab {

namespace {

// In-plane reference direction for measuring angles about `axis`.
Vec3Q reference_direction(const Vec3Q& axis) {
  Vec3Q a(1, 0, 0);
  if (parallel(a, axis)) a = Vec3Q(0, 1, 0);
  return a - (dot(a, axis) / dot(axis, axis)) * axis;
}

std::vector<Vec3Q> subset_sums(const std::vector<Vec3Q>& gens) {
  std::vector<Vec3Q> out{Vec3Q()};
  for (const auto& g : gens) {
    const auto n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] + g);
  }
  return out;
}

}  // namespace

Belt belt_of(const Zonotope& p, std::size_t generator) {
  const auto& gens = p.generators();
  if (generator >= gens.size()) {
    throw Error(ErrorKind::InvalidArgument, "no generator " + std::to_string(generator));
  }
  const Vec3Q& u = gens[generator];
  Belt belt;
  belt.edge_gen_index = generator;
  std::vector<std::size_t> members;
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    if (p.facets()[f].contains_generator(generator)) members.push_back(f);
    else belt.complement_facets.push_back(f);
  }
  detail::AngularLess less(u, reference_direction(u));
  std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
    return less(p.facets()[a].normal, p.facets()[b].normal);
  });
  // F_1 has the smallest angle; clockwise is decreasing angle.
  belt.facets.push_back(members.front());
  for (std::size_t i = members.size() - 1; i >= 1; --i) belt.facets.push_back(members[i]);
  belt.m = belt.facets.size() / 2;
  return belt;
}

std::vector<Belt> belts(const Zonotope& p) {
  std::vector<Belt> out;
  for (std::size_t g = 0; g < p.generators().size(); ++g) out.push_back(belt_of(p, g));
  return out;
}

std::size_t projected_direction_count(const GeneratorSet& gens, std::size_t generator) {
  const Vec3Q& u = gens[generator];
  std::vector<Vec3Q> dirs;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i == generator) continue;
    Vec3Q proj = gens[i] - (dot(gens[i], u) / dot(u, u)) * u;
    Vec3Q d = canonical_direction(proj);
    if (std::find(dirs.begin(), dirs.end(), d) == dirs.end()) dirs.push_back(d);
  }
  return dirs.size();
}

BeltDecomposition belt_decompose(const Zonotope& p, const Belt& belt) {
  const auto& gens = p.generators();
  const Vec3Q& u = gens[belt.edge_gen_index];
  BeltDecomposition d;
  d.edge_gen_index = belt.edge_gen_index;
  d.edge_vector = u;

  Vec3Q running;
  for (std::size_t i = 0; i < belt.facets.size(); ++i) {
    const Facet& f = p.facets()[belt.facets[i]];
    Vec3Q tangent = cross(f.normal, u);  // clockwise direction seen from +u
    BeltFacetDecomposition piece;
    piece.facet = belt.facets[i];
    // Walk the facet boundary from the u-edge after which the edges run along +tangent.
    const auto n = f.edge_generators.size();
    for (std::size_t e = 0; e < n; ++e) {
      if (f.edge_generators[e].index != belt.edge_gen_index) continue;
      const auto next = (e + 1) % n;
      if (dot(tangent, f.edge_vectors[next]) <= 0) continue;
      for (std::size_t s = 1; s < n / 2; ++s) {
        const auto idx = (e + s) % n;
        piece.r_generators.push_back(f.edge_vectors[idx]);
        piece.r_generator_ids.push_back(f.edge_generators[idx]);
        piece.g += f.edge_vectors[idx];
      }
      break;
    }
    if (i == 0) {
      // G_1 is the edge of F_1 minimizing the clockwise tangent.
      d.origin = f.base_translation;
      for (auto c : f.coplanar_gen_indices) {
        if (dot(tangent, gens[c]) < 0) d.origin += gens[c];
      }
    }
    piece.offset = running;
    piece.edge_start = d.origin + running;
    running += piece.g;
    d.pieces.push_back(std::move(piece));
  }
  return d;
}

std::vector<Vec3Q> BeltDecomposition::q_generators(std::size_t i) const {
  std::vector<Vec3Q> out{edge_vector};
  out.insert(out.end(), pieces[i].r_generators.begin(), pieces[i].r_generators.end());
  return out;
}

std::vector<Vec3Q> BeltDecomposition::sum_vertices(std::size_t i) const {
  const auto& piece = pieces[i];
  auto q = q_generators(i);
  Vec3Q normal = cross(q[0], q[1]);
  return detail::walk_zonogon(piece.edge_start, q, normal).vertices;
}

std::vector<Vec3Q> BeltDecomposition::r_vertices(std::size_t i) const {
  const auto& gens = pieces[i].r_generators;
  if (gens.size() == 1) return {Vec3Q(), gens[0]};
  Vec3Q normal = cross(gens[0], gens[1]);
  return detail::walk_zonogon(Vec3Q(), gens, normal).vertices;
}

VenkovReport check_venkov(const Zonotope& p) {
  VenkovReport report;
  for (const auto& b : belts(p)) {
    report.belts.push_back({b.edge_gen_index, b.facet_count()});
    if (b.facet_count() != 4 && b.facet_count() != 6) {
      if (report.passes) report.witness = b.edge_gen_index;
      report.passes = false;
    }
  }
  return report;
}

std::string to_string(FedorovType type) {
  switch (type) {
    case FedorovType::Parallelepiped: return "Parallelepiped";
    case FedorovType::HexagonalPrism: return "HexagonalPrism";
    case FedorovType::RhombicDodecahedron: return "RhombicDodecahedron";
    case FedorovType::ElongatedDodecahedron: return "ElongatedDodecahedron";
    case FedorovType::TruncatedOctahedron: return "TruncatedOctahedron";
    case FedorovType::NotParallelohedron: return "NotParallelohedron";
  }
  return "NotParallelohedron";
}

FedorovType parse_fedorov_type(const std::string& name) {
  for (auto t : {FedorovType::Parallelepiped, FedorovType::HexagonalPrism,
                 FedorovType::RhombicDodecahedron, FedorovType::ElongatedDodecahedron,
                 FedorovType::TruncatedOctahedron, FedorovType::NotParallelohedron}) {
    if (to_string(t) == name) return t;
  }
  throw Error(ErrorKind::Parse, "unknown Fedorov type '" + name + "'");
}

FacetCensus facet_census(const Zonotope& p) {
  FacetCensus c;
  for (const auto& f : p.facets()) {
    if (f.edge_count() == 4) ++c.parallelograms;
    else if (f.edge_count() == 6) ++c.hexagons;
    else ++c.other;
  }
  return c;
}

FedorovClass classify_fedorov(const Zonotope& p) {
  FedorovClass out;
  auto venkov = check_venkov(p);
  if (!venkov.passes) {
    out.witness_generator = venkov.witness;
    for (const auto& e : venkov.belts) {
      if (e.generator == *venkov.witness) out.witness_facet_count = e.facet_count;
    }
    return out;
  }
  auto c = facet_census(p);
  auto is = [&](std::size_t hex, std::size_t par) {
    return c.other == 0 && c.hexagons == hex && c.parallelograms == par;
  };
  if (is(0, 6)) out.type = FedorovType::Parallelepiped;
  else if (is(2, 6)) out.type = FedorovType::HexagonalPrism;
  else if (is(0, 12)) out.type = FedorovType::RhombicDodecahedron;
  else if (is(4, 8)) out.type = FedorovType::ElongatedDodecahedron;
  else if (is(8, 6)) out.type = FedorovType::TruncatedOctahedron;
  else {
    throw Error(ErrorKind::UnclassifiableWithVenkovPass,
                "census " + std::to_string(c.hexagons) + " hexagons, " +
                    std::to_string(c.parallelograms) + " parallelograms, " +
                    std::to_string(c.other) + " other");
  }
  return out;
}

bool check_shifted_facets_inside(const Zonotope& p, const Belt& belt) {
  auto d = belt_decompose(p, belt);
  const Facet& f1 = p.facets()[belt.facets[0]];
  for (std::size_t i = 1; i < belt.m; ++i) {
    auto sums = subset_sums(d.pieces[i].r_generators);
    for (const auto& v : f1.polygon_vertices) {
      for (const auto& r : sums) {
        if (!p.contains(v + r, Membership::Closed)) return false;
      }
    }
  }
  return true;
}

bool check_center_shifts_interior(const Zonotope& p, const Belt& belt) {
  if (belt.m < 3) return true;
  auto d = belt_decompose(p, belt);
  Vec3Q mid = p.facets()[belt.facets[0]].center();
  for (std::size_t i = 1; i < belt.m; ++i) {
    for (const auto& r : subset_sums(d.pieces[i].r_generators)) {
      if (r.is_zero()) continue;
      if (!p.contains(mid + r, Membership::Open)) return false;
    }
  }
  return true;
}

std::string to_string(IntersectionStatus status) {
  switch (status) {
    case IntersectionStatus::Meets: return "Meets";
    case IntersectionStatus::Empty: return "Empty";
    case IntersectionStatus::NotMeetingBaseEdge: return "NotMeetingBaseEdge";
  }
  return "Empty";
}

std::string to_string(PartialForm form) {
  switch (form) {
    case PartialForm::TwoPartial: return "TwoPartial";
    case PartialForm::SinglePartial: return "SinglePartial";
    case PartialForm::NoPartial: return "NoPartial";
    case PartialForm::Irregular: return "Irregular";
  }
  return "Irregular";
}

std::vector<Vec3Q> planar_convex_hull(std::vector<Vec3Q> points, const Vec3Q& normal) {
  // Monotone chain on the two coordinates the plane projects onto
  // injectively; turns are measured exactly against the normal.
  int drop = 0;
  for (int d = 1; d < 3; ++d) {
    if (abs(normal[d]) > abs(normal[drop])) drop = d;
  }
  const int a0 = drop == 0 ? 1 : 0;
  const int a1 = drop == 2 ? 1 : 2;
  std::sort(points.begin(), points.end(), [&](const Vec3Q& p, const Vec3Q& q) {
    if (p[a0] != q[a0]) return p[a0] < q[a0];
    return p[a1] < q[a1];
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const auto n = points.size();
  if (n <= 2) return points;
  auto turn = [&](const Vec3Q& o, const Vec3Q& p, const Vec3Q& q) {
    return sign(dot(normal, cross(p - o, q - o)));
  };
  std::vector<Vec3Q> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && turn(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

namespace {

bool inside_ccw(std::span<const Vec3Q> poly, const Vec3Q& normal, const Vec3Q& q) {
  const auto n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % n];
    if (dot(normal, cross(b - a, q - a)) < 0) return false;
  }
  return true;
}

// Coefficients c_j of R' and the (s, t, alpha, beta) reading of them.
void read_partial_form(FacetIntersection& out) {
  const auto& c = out.coefficients;
  const std::size_t k = c.size();
  for (std::size_t s = 1; s <= k; ++s) {
    for (std::size_t t = k; t > s; --t) {
      bool ok = c[s - 1] < 1 && c[t - 1] < 1;
      for (std::size_t j = 1; ok && j <= k; ++j) {
        if (j < s || j > t) ok = c[j - 1] == 1;
        else if (j > s && j < t) ok = c[j - 1] == 0;
      }
      if (ok) {
        out.form = PartialForm::TwoPartial;
        out.s = s;
        out.t = t;
        out.alpha = c[s - 1];
        out.beta = c[t - 1];
        return;
      }
    }
  }
  std::vector<std::size_t> partial;
  for (std::size_t j = 1; j <= k; ++j) {
    if (c[j - 1] < 1) partial.push_back(j);
  }
  if (partial.empty()) {
    out.form = PartialForm::NoPartial;
  } else if (partial.size() == 1) {
    out.form = PartialForm::SinglePartial;
    out.s = out.t = partial[0];
    out.alpha = c[partial[0] - 1];
    out.beta = 0;
  } else {
    out.form = PartialForm::Irregular;
  }
}

}  // namespace

FacetIntersection facet_intersection(std::span<const Vec3Q> poly, const Vec3Q& normal,
                                     const Vec3Q& shift) {
  const auto n = poly.size();
  if (n < 4 || n % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, "polygon must have an even number >= 4 of vertices");
  }
  if (dot(normal, shift) != 0) throw Error(ErrorKind::InvalidArgument, "shift leaves the plane");
  std::vector<Vec3Q> moved;
  for (const auto& v : poly) moved.push_back(v + shift);

  std::vector<Vec3Q> candidates;
  for (const auto& v : poly) {
    if (inside_ccw(moved, normal, v)) candidates.push_back(v);
  }
  for (const auto& v : moved) {
    if (inside_ccw(poly, normal, v)) candidates.push_back(v);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3Q& a = poly[i];
    Vec3Q ab = poly[(i + 1) % n] - a;
    for (std::size_t j = 0; j < n; ++j) {
      const Vec3Q& c = moved[j];
      Vec3Q cd = moved[(j + 1) % n] - c;
      Rational den = dot(normal, cross(ab, cd));
      if (den == 0) continue;
      Rational s = dot(normal, cross(c - a, cd)) / den;
      Rational t = dot(normal, cross(c - a, ab)) / den;
      if (s < 0 || s > 1 || t < 0 || t > 1) continue;
      candidates.push_back(a + s * ab);
    }
  }

  FacetIntersection out;
  out.polygon = planar_convex_hull(std::move(candidates), normal);
  if (out.polygon.empty()) return out;

  // E'_0: clip E_0 = [poly[0], poly[1]] against the shifted polygon.
  const Vec3Q& e0 = poly[0];
  Vec3Q u0 = poly[1] - poly[0];
  Rational lo = 0, hi = 1;
  for (std::size_t j = 0; j < n; ++j) {
    const Vec3Q& a = moved[j];
    Vec3Q ab = moved[(j + 1) % n] - a;
    Rational slope = dot(normal, cross(ab, u0));
    Rational at = dot(normal, cross(ab, e0 - a));
    // at + slope * s >= 0
    if (slope == 0) {
      if (at < 0) hi = -1;
      continue;
    }
    Rational bound = -at / slope;
    if (slope > 0) lo = std::max(lo, bound);
    else hi = std::min(hi, bound);
  }
  if (lo >= hi) {
    out.status = IntersectionStatus::NotMeetingBaseEdge;
    return out;
  }
  out.status = IntersectionStatus::Meets;
  out.base_edge_start = e0 + lo * u0;
  out.base_edge_end = e0 + hi * u0;

  const std::size_t k = n / 2 - 1;
  out.coefficients.assign(k, Rational(0));
  const auto& q = out.polygon;
  const auto m = q.size();
  if (m >= 3) {
    std::size_t start = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (q[i] == out.base_edge_start && q[(i + 1) % m] == out.base_edge_end) start = i;
    }
    if (start == m) throw Error(ErrorKind::InvalidArgument, "base edge not found on intersection");
    for (std::size_t step = 1; step < m; ++step) {
      Vec3Q e = q[(start + step + 1) % m] - q[(start + step) % m];
      if (cross(e, u0).is_zero()) break;  // reached the opposite edge
      bool matched = false;
      for (std::size_t j = 1; j <= k; ++j) {
        Vec3Q uj = poly[j + 1] - poly[j];
        if (!cross(e, uj).is_zero() || dot(e, uj) <= 0) continue;
        out.coefficients[j - 1] = dot(e, uj) / dot(uj, uj);
        matched = true;
      }
      if (!matched) throw Error(ErrorKind::InvalidArgument, "intersection edge not parallel to F");
    }
  }
  for (std::size_t j = 1; j <= k; ++j) {
    out.translation_vector += out.coefficients[j - 1] * (poly[j + 1] - poly[j]);
  }
  read_partial_form(out);
  return out;
}

FacetIntersection facet_intersection(const Facet& f, const Vec3Q& shift) {
  return facet_intersection(f.polygon_vertices, f.normal, shift);
}

}  // namespace beltlab

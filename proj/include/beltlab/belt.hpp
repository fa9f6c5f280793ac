#pragma once

// Belts of a zonotope, their facet decomposition F_i = G_i + R_i, the
// four-or-six-facets criterion, the five-type classification, and
// intersections of a centrally symmetric polygon with its translates.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "beltlab/zonotope.hpp"

namespace beltlab {

struct Belt {
  std::size_t edge_gen_index = 0;
  // F_1..F_2m as indices into Zonotope::facets(), clockwise seen from +u.
  std::vector<std::size_t> facets;
  std::size_t m = 0;
  // K(G): every facet not in the belt, ascending.
  std::vector<std::size_t> complement_facets;

  std::size_t facet_count() const { return facets.size(); }
};

// One belt per generator, in generator order.
std::vector<Belt> belts(const Zonotope& p);
Belt belt_of(const Zonotope& p, std::size_t generator);

// Number of distinct lines among the other generators projected onto the
// plane orthogonal to `generator`.
std::size_t projected_direction_count(const GeneratorSet& gens, std::size_t generator);

struct BeltFacetDecomposition {
  std::size_t facet = 0;                        // index into Zonotope::facets()
  Vec3Q edge_start;                             // G_i = [edge_start, edge_start + u]
  std::vector<Vec3Q> r_generators;              // u_1^i .. u_k^i, pointing clockwise
  std::vector<SignedGenerator> r_generator_ids;
  Vec3Q g;                                      // u_1^i + ... + u_k^i
  Vec3Q offset;                                 // g_1 + ... + g_{i-1}
};

struct BeltDecomposition {
  std::size_t edge_gen_index = 0;
  Vec3Q edge_vector;  // u, parallel to G
  Vec3Q origin;       // start vertex q_1 of G_1
  std::vector<BeltFacetDecomposition> pieces;  // i = 1..2m

  // Vertex set of G_i + R_i (cyclic), i zero-based.
  std::vector<Vec3Q> sum_vertices(std::size_t i) const;
  // Vertex set of the zonogon R_i anchored at the origin.
  std::vector<Vec3Q> r_vertices(std::size_t i) const;
  // Generators of Q_i: u followed by the R_i generators.
  std::vector<Vec3Q> q_generators(std::size_t i) const;
};

BeltDecomposition belt_decompose(const Zonotope& p, const Belt& belt);

struct VenkovReport {
  bool passes = true;
  struct Entry {
    std::size_t generator;
    std::size_t facet_count;
  };
  std::vector<Entry> belts;
  std::optional<std::size_t> witness;  // first offending generator
};

VenkovReport check_venkov(const Zonotope& p);

enum class FedorovType {
  Parallelepiped,
  HexagonalPrism,
  RhombicDodecahedron,
  ElongatedDodecahedron,
  TruncatedOctahedron,
  NotParallelohedron,
};

std::string to_string(FedorovType type);
FedorovType parse_fedorov_type(const std::string& name);

struct FedorovClass {
  FedorovType type = FedorovType::NotParallelohedron;
  std::optional<std::size_t> witness_generator;
  std::optional<std::size_t> witness_facet_count;
};

struct FacetCensus {
  std::size_t parallelograms = 0;
  std::size_t hexagons = 0;
  std::size_t other = 0;
};

FacetCensus facet_census(const Zonotope& p);
FedorovClass classify_fedorov(const Zonotope& p);

// F_1 + R_i inside P for 2 <= i <= m, checked vertex-wise.
bool check_shifted_facets_inside(const Zonotope& p, const Belt& belt);
// For m >= 3: center(F_1) + r lies in int(P) for every nonzero r in R_i,
// 2 <= i <= m (tested on all subset sums of the R_i generators).
bool check_center_shifts_interior(const Zonotope& p, const Belt& belt);

enum class IntersectionStatus { Meets, Empty, NotMeetingBaseEdge };

// Shape of R' in terms of the coefficients c_j of u_1..u_k.
enum class PartialForm {
  TwoPartial,     // 1 <= s < t <= k, the documented form
  SinglePartial,  // only one coefficient below 1
  NoPartial,      // every coefficient is 1
  Irregular,      // coefficient pattern matches none of the above
};

std::string to_string(IntersectionStatus status);
std::string to_string(PartialForm form);

struct FacetIntersection {
  IntersectionStatus status = IntersectionStatus::Empty;
  // F n (F + shift), oriented like F; may be a segment or a point.
  std::vector<Vec3Q> polygon;
  Vec3Q base_edge_start;  // E'_0 = E_0 n (F + shift)
  Vec3Q base_edge_end;
  std::vector<Rational> coefficients;  // c_1..c_k
  PartialForm form = PartialForm::Irregular;
  std::size_t s = 0;  // 1-based
  std::size_t t = 0;
  Rational alpha;
  Rational beta;
  Vec3Q translation_vector;  // E'_0 + g is the opposite edge
};

// `polygon` is a centrally symmetric convex polygon listed counterclockwise
// about `normal`; E_0 runs polygon[0] -> polygon[1] and u_j is the j-th edge.
FacetIntersection facet_intersection(std::span<const Vec3Q> polygon, const Vec3Q& normal,
                                     const Vec3Q& shift);
FacetIntersection facet_intersection(const Facet& f, const Vec3Q& shift);

// Vertices of the convex hull of coplanar points, counterclockwise about
// `normal`, with collinear points removed.
std::vector<Vec3Q> planar_convex_hull(std::vector<Vec3Q> points, const Vec3Q& normal);

}  // namespace beltlab

#pragma once

// Zonotopes P = { sum x_i u_i : x_i in [0,1] } built from a generator set.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "beltlab/exact.hpp"

namespace beltlab {

// Nonzero, pairwise non-parallel generators spanning 3-space.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<Vec3Q> generators);

  std::size_t size() const { return gens_.size(); }
  const Vec3Q& operator[](std::size_t i) const { return gens_[i]; }
  const std::vector<Vec3Q>& vectors() const { return gens_; }
  auto begin() const { return gens_.begin(); }
  auto end() const { return gens_.end(); }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::vector<Vec3Q> gens_;
};

struct CanonicalizeResult {
  GeneratorSet generators;
  Vec3Q offset;  // zonotope(raw) == zonotope(generators) + offset
};

// Merges parallel vectors into one generator per line (lexicographically
// positive direction); flipped vectors are accounted for in `offset`.
CanonicalizeResult canonicalize(std::span<const Vec3Q> raw);

// Generator index with an orientation (+1 or -1).
struct SignedGenerator {
  std::size_t index = 0;
  int sign = 1;
  friend bool operator==(const SignedGenerator&, const SignedGenerator&) = default;
};

struct Facet {
  Vec3Q normal;                                   // primitive integer outer normal
  std::vector<std::size_t> coplanar_gen_indices;  // ascending, normal . u_i == 0
  Vec3Q base_translation;                         // sum of u_j with normal . u_j > 0
  std::vector<Vec3Q> polygon_vertices;            // counterclockwise seen from outside
  std::vector<SignedGenerator> edge_generators;   // edge e goes vertices[e] -> vertices[e+1]
  std::vector<Vec3Q> edge_vectors;
  Rational support;                               // normal . x for x on the facet

  std::size_t edge_count() const { return polygon_vertices.size(); }
  Vec3Q center() const;
  bool contains_generator(std::size_t gen) const;
};

// |normal . (x - center)| <= offset, one slab per facet-normal class.
struct HalfSpaceRep {
  struct Slab {
    Vec3Q normal;
    Rational offset;
  };
  Vec3Q center;
  std::vector<Slab> slabs;
};

enum class Membership { Closed, Open };

class Zonotope {
 public:
  explicit Zonotope(GeneratorSet gens);

  const GeneratorSet& generators() const { return gens_; }
  const Vec3Q& center() const { return center_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const HalfSpaceRep& halfspaces() const { return hrep_; }
  const Rational& volume() const { return volume_; }
  const std::vector<Vec3Q>& vertices() const { return vertices_; }
  // 0/1 coefficient vector of each vertex, parallel to vertices().
  const std::vector<std::vector<bool>>& vertex_subsets() const { return vertex_subsets_; }
  const Box3Q& bounding_box() const { return bbox_; }

  bool contains(const Vec3Q& x, Membership mode = Membership::Closed) const;
  // Unique maximizer of c . x; requires c . u_i != 0 for every generator.
  Vec3Q support_vertex(const Vec3Q& c) const;

  // Indices of facets whose closed polygon contains x (x assumed in P).
  std::vector<std::size_t> facets_containing(const Vec3Q& x) const;
  bool is_vertex(const Vec3Q& x) const;

 private:
  GeneratorSet gens_;
  Vec3Q center_;
  std::vector<Facet> facets_;
  HalfSpaceRep hrep_;
  Rational volume_;
  std::vector<Vec3Q> vertices_;
  std::vector<std::vector<bool>> vertex_subsets_;
  Box3Q bbox_;
};

Zonotope build_zonotope(const GeneratorSet& gens);
// Validates raw vectors (ZeroGenerator, ParallelGenerators, EmptySpan).
Zonotope build_zonotope(std::vector<Vec3Q> generators);
inline std::vector<Vec3Q> vertices(const Zonotope& p) { return p.vertices(); }
inline bool contains(const Zonotope& p, const Vec3Q& x, Membership mode) {
  return p.contains(x, mode);
}
inline Rational volume(const Zonotope& p) { return p.volume(); }
inline Vec3Q support_vertex(const Zonotope& p, const Vec3Q& c) { return p.support_vertex(c); }

// Sum over all generator triples of |det|.
Rational zonotope_volume(const GeneratorSet& gens);

// Writes vertices and fan-triangulated facet polygons (one object per facet)
// with 12 significant digits.
std::string to_obj(const Zonotope& p, const std::string& name = "zonotope");

}  // namespace beltlab

#include "beltlab/zonotope.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "beltlab/errors.hpp"
#include "zonogon.hpp"

namespace beltlab {

GeneratorSet::GeneratorSet(std::vector<Vec3Q> generators) : gens_(std::move(generators)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].is_zero()) {
      throw Error(ErrorKind::ZeroGenerator, "generator " + std::to_string(i) + " is zero");
    }
  }
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < gens_.size(); ++j) {
      if (parallel(gens_[i], gens_[j])) {
        throw Error(ErrorKind::ParallelGenerators, "generators " + std::to_string(i) + " and " +
                                                       std::to_string(j) + " are parallel");
      }
    }
  }
}

CanonicalizeResult canonicalize(std::span<const Vec3Q> raw) {
  std::vector<Vec3Q> keys;
  std::vector<Vec3Q> merged;
  Vec3Q offset;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Vec3Q v = raw[i];
    if (v.is_zero()) {
      throw Error(ErrorKind::ZeroGenerator, "vector " + std::to_string(i) + " is zero");
    }
    // [0,1]v == v + [0,1](-v)
    if (!lex_positive(v)) {
      offset += v;
      v = -v;
    }
    Vec3Q key = canonical_direction(v);
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(key);
      merged.push_back(v);
    } else {
      merged[static_cast<std::size_t>(it - keys.begin())] += v;
    }
  }
  return {GeneratorSet(std::move(merged)), offset};
}

Vec3Q Facet::center() const {
  const auto half = polygon_vertices.size() / 2;
  return Rational(1, 2) * (polygon_vertices[0] + polygon_vertices[half]);
}

bool Facet::contains_generator(std::size_t gen) const {
  return std::binary_search(coplanar_gen_indices.begin(), coplanar_gen_indices.end(), gen);
}

Rational zonotope_volume(const GeneratorSet& gens) {
  Rational total = 0;
  const auto w = gens.size();
  for (std::size_t i = 0; i < w; ++i) {
    for (std::size_t j = i + 1; j < w; ++j) {
      Vec3Q c = cross(gens[i], gens[j]);
      for (std::size_t k = j + 1; k < w; ++k) total += abs(dot(c, gens[k]));
    }
  }
  return total;
}

namespace {

Box3Q bounding_box_of(const GeneratorSet& gens) {
  Vec3Q lo, hi;
  for (const auto& u : gens) {
    for (int a = 0; a < 3; ++a) {
      if (u[a] < 0) lo[a] += u[a];
      else hi[a] += u[a];
    }
  }
  return Box3Q(lo, hi);
}

}  // namespace

Zonotope::Zonotope(GeneratorSet gens)
    : gens_(std::move(gens)), bbox_(bounding_box_of(gens_)) {
  volume_ = zonotope_volume(gens_);
  if (volume_ == 0) throw Error(ErrorKind::EmptySpan, "generators do not span 3-space");
  const auto w = gens_.size();
  for (const auto& u : gens_) center_ += u;
  center_ *= Rational(1, 2);
  hrep_.center = center_;

  std::map<Vec3Q, int, LexLess> classes;
  for (std::size_t i = 0; i < w; ++i) {
    for (std::size_t j = i + 1; j < w; ++j) {
      classes.emplace(canonical_direction(cross(gens_[i], gens_[j])), 0);
    }
  }

  std::map<Vec3Q, std::vector<bool>, LexLess> vertex_map;
  for (const auto& [n, unused] : classes) {
    (void)unused;
    std::vector<std::size_t> coplanar;
    Rational offset = 0;
    for (std::size_t l = 0; l < w; ++l) {
      Rational d = dot(n, gens_[l]);
      if (d == 0) coplanar.push_back(l);
      offset += abs(d);
    }
    hrep_.slabs.push_back({n, Rational(offset / 2)});

    std::vector<Vec3Q> planar;
    for (auto l : coplanar) planar.push_back(gens_[l]);
    for (int s : {+1, -1}) {
      Facet f;
      f.normal = s > 0 ? n : -n;
      f.coplanar_gen_indices = coplanar;
      std::vector<bool> subset(w, false);
      for (std::size_t l = 0; l < w; ++l) {
        Rational d = dot(f.normal, gens_[l]);
        if (d > 0) {
          f.base_translation += gens_[l];
          f.support += d;
          subset[l] = true;
        }
      }
      auto walk = detail::walk_zonogon(f.base_translation, planar, f.normal);
      for (std::size_t c = 0; c < coplanar.size(); ++c) {
        if (walk.start_subset[c]) subset[coplanar[c]] = true;
      }
      f.polygon_vertices = walk.vertices;
      for (std::size_t e = 0; e < walk.edges.size(); ++e) {
        vertex_map.emplace(walk.vertices[e], subset);
        const auto& edge = walk.edges[e];
        std::size_t g = coplanar[edge.slot];
        f.edge_generators.push_back({g, edge.sign});
        f.edge_vectors.push_back(edge.vector);
        subset[g] = edge.sign > 0;
      }
      facets_.push_back(std::move(f));
    }
  }
  for (auto& [v, subset] : vertex_map) {
    vertices_.push_back(v);
    vertex_subsets_.push_back(subset);
  }
}

Zonotope build_zonotope(const GeneratorSet& gens) { return Zonotope(gens); }

Zonotope build_zonotope(std::vector<Vec3Q> generators) {
  return Zonotope(GeneratorSet(std::move(generators)));
}

bool Zonotope::contains(const Vec3Q& x, Membership mode) const {
  Vec3Q rel = x - center_;
  for (const auto& slab : hrep_.slabs) {
    Rational d = abs(dot(slab.normal, rel));
    if (mode == Membership::Closed ? d > slab.offset : d >= slab.offset) return false;
  }
  return true;
}

Vec3Q Zonotope::support_vertex(const Vec3Q& c) const {
  Vec3Q out;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    Rational d = dot(c, gens_[i]);
    if (d == 0) {
      throw Error(ErrorKind::NonGenericFunctional,
                  "functional vanishes on generator " + std::to_string(i));
    }
    if (d > 0) out += gens_[i];
  }
  return out;
}

std::vector<std::size_t> Zonotope::facets_containing(const Vec3Q& x) const {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    if (dot(facets_[f].normal, x) == facets_[f].support) out.push_back(f);
  }
  return out;
}

bool Zonotope::is_vertex(const Vec3Q& x) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), x, LexLess{});
}

std::string to_obj(const Zonotope& p, const std::string& name) {
  std::ostringstream os;
  char buf[128];
  os << "# " << name << ": " << p.vertices().size() << " vertices, " << p.facets().size()
     << " facets\n";
  for (const auto& v : p.vertices()) {
    auto d = v.to_double();
    std::snprintf(buf, sizeof buf, "v %.12g %.12g %.12g\n", d[0], d[1], d[2]);
    os << buf;
  }
  const auto& verts = p.vertices();
  auto index_of = [&](const Vec3Q& v) {
    auto it = std::lower_bound(verts.begin(), verts.end(), v, LexLess{});
    return static_cast<std::size_t>(it - verts.begin()) + 1;
  };
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    const auto& poly = p.facets()[f].polygon_vertices;
    os << "o facet_" << f << "\n";
    for (std::size_t t = 1; t + 1 < poly.size(); ++t) {
      os << "f " << index_of(poly[0]) << " " << index_of(poly[t]) << " " << index_of(poly[t + 1])
         << "\n";
    }
  }
  return os.str();
}

}  // namespace beltlab

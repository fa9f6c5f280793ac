#include "beltlab/wheel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "beltlab/errors.hpp"
#include "beltlab/rng.hpp"
#include "zonogon.hpp"

namespace beltlab {

std::string to_string(PieceKind kind) { return kind == PieceKind::EType ? "E" : "F"; }

std::size_t phi_lower_bound(std::size_t m) { return m <= 3 ? 0 : (m - 2) / 2; }

double varpi(const std::vector<Piece>& pieces) {
  double total = 0.0;
  for (const auto& piece : pieces) total += piece.dihedral_angle;
  return total / (2.0 * std::numbers::pi);
}

GridValue snap_to_grid(double value, std::size_t m, std::size_t ell, double tolerance) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "belt half-size m must be >= 2");
  const double step = static_cast<double>(m - 1) / 2.0;
  const double rest = value - static_cast<double>(ell) / 2.0;
  const long kappa = std::lround(rest / step);
  if (kappa < 1 || std::fabs(rest - static_cast<double>(kappa) * step) > tolerance) {
    throw Error(ErrorKind::NoHalfGridMatch,
                "varpi " + std::to_string(value) + " is off the grid for m=" + std::to_string(m) +
                    ", ell=" + std::to_string(ell));
  }
  GridValue g;
  g.kappa = kappa;
  g.ell = ell;
  g.value = Rational(kappa * static_cast<long>(m - 1) + static_cast<long>(ell), 2);
  g.value.canonicalize();
  return g;
}

WheelAnalyzer::WheelAnalyzer(const Zonotope& p, const PeriodicMultiset& x,
                             std::size_t belt_generator, double tolerance)
    : p_(p),
      x_(x),
      belt_(belt_of(p, belt_generator)),
      decomposition_(belt_decompose(p, belt_)),
      tolerance_(tolerance) {
  if (!(tolerance > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
}

std::optional<std::size_t> WheelAnalyzer::belt_position(std::size_t facet) const {
  auto it = std::find(belt_.facets.begin(), belt_.facets.end(), facet);
  if (it == belt_.facets.end()) return std::nullopt;
  return static_cast<std::size_t>(it - belt_.facets.begin());
}

std::optional<std::size_t> WheelAnalyzer::edge_containing(const Vec3Q& local) const {
  const Vec3Q& u = decomposition_.edge_vector;
  for (std::size_t j = 0; j < decomposition_.pieces.size(); ++j) {
    Vec3Q rel = local - decomposition_.pieces[j].edge_start;
    if (!cross(rel, u).is_zero()) continue;
    Rational a = dot(rel, u) / dot(u, u);
    if (a > 0 && a < 1) return j;
  }
  return std::nullopt;
}

bool WheelAnalyzer::in_complement(const Vec3Q& point) const {
  for (const auto& t : translates_containing(p_, x_, point)) {
    Vec3Q local = point - t.offset;
    if (p_.contains(local, Membership::Open)) continue;
    for (auto f : p_.facets_containing(local)) {
      if (!belt_position(f)) return true;
    }
  }
  return false;
}

WheelPoint WheelAnalyzer::point_on_edge(const Translate& t, std::size_t j,
                                        const Rational& a) const {
  if (j >= decomposition_.pieces.size()) {
    throw Error(ErrorKind::InvalidArgument, "edge index out of range");
  }
  if (a <= 0 || a >= 1) throw Error(ErrorKind::InvalidArgument, "edge parameter must be in (0,1)");
  WheelPoint wp;
  wp.v = t.offset + decomposition_.pieces[j].edge_start + a * decomposition_.edge_vector;
  wp.host = t;
  wp.host_edge = j;
  return wp;
}

WheelPoint WheelAnalyzer::locate_host(const Vec3Q& v) const {
  for (const auto& t : translates_containing(p_, x_, v)) {
    if (auto j = edge_containing(v - t.offset)) return WheelPoint{v, t, *j};
  }
  throw Error(ErrorKind::InvalidArgument,
              to_string(v) + " is not inside any belt edge translate");
}

std::vector<WheelAnalyzer::Incidence> WheelAnalyzer::incidences(const Vec3Q& v) const {
  std::vector<Incidence> out;
  for (const auto& t : translates_containing(p_, x_, v)) {
    Vec3Q local = v - t.offset;
    if (p_.contains(local, Membership::Open)) continue;
    auto edge = edge_containing(local);
    for (auto f : p_.facets_containing(local)) {
      auto pos = belt_position(f);
      if (!pos) continue;
      Incidence inc{t, *pos, false, 0};
      if (edge) {
        const std::size_t n = belt_.facets.size();
        // G_j lies in F_{j-1} and F_j.
        if (*pos == *edge || (*pos + 1) % n == *edge) {
          inc.on_edge = true;
          inc.edge = *edge;
        }
      }
      out.push_back(std::move(inc));
    }
  }
  return out;
}

std::vector<Piece> WheelAnalyzer::locate_pieces(const WheelPoint& wp) const {
  {
    Vec3Q host_local = wp.v - wp.host.offset;
    auto edge = edge_containing(host_local);
    if (!edge || *edge != wp.host_edge) {
      throw Error(ErrorKind::InvalidArgument, "v is not inside the stated host edge");
    }
  }
  const std::size_t n = belt_.facets.size();
  std::vector<Piece> pieces;
  for (const auto& t : translates_containing(p_, x_, wp.v)) {
    Vec3Q local = wp.v - t.offset;
    if (p_.contains(local, Membership::Open)) continue;
    if (p_.is_vertex(local)) {
      throw Error(ErrorKind::VertexContact, to_string(wp.v) + " is a vertex of the translate at " +
                                                to_string(t.offset));
    }
    auto facets = p_.facets_containing(local);
    for (auto f : facets) {
      if (!belt_position(f)) {
        throw Error(ErrorKind::KGContact, to_string(wp.v) + " lies on a non-belt facet of the " +
                                              "translate at " + to_string(t.offset));
      }
    }
    Piece piece;
    piece.translate = t;
    if (auto j = edge_containing(local)) {
      const auto& a = p_.facets()[belt_.facets[(*j + n - 1) % n]].normal.to_double();
      const auto& b = p_.facets()[belt_.facets[*j]].normal.to_double();
      const double cx = a[1] * b[2] - a[2] * b[1];
      const double cy = a[2] * b[0] - a[0] * b[2];
      const double cz = a[0] * b[1] - a[1] * b[0];
      const double between = std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz),
                                         a[0] * b[0] + a[1] * b[1] + a[2] * b[2]);
      piece.kind = PieceKind::EType;
      piece.dihedral_angle = std::numbers::pi - between;
      piece.edge_or_facet = *j;
    } else {
      if (facets.size() != 1) {
        throw Error(ErrorKind::InvalidArgument, "inconsistent facet incidence at " +
                                                    to_string(wp.v));
      }
      piece.kind = PieceKind::FType;
      piece.dihedral_angle = std::numbers::pi;
      piece.edge_or_facet = *belt_position(facets.front());
    }
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

std::size_t WheelAnalyzer::phi(const Vec3Q& v) const {
  return count_cover(p_, x_, v).open_count;
}

WheelReport WheelAnalyzer::check_balance(std::size_t k, const WheelPoint& wp) const {
  WheelReport r;
  r.v = wp.v;
  r.m = belt_.m;
  r.claimed_k = k;
  r.pieces = locate_pieces(wp);
  r.varpi = varpi(r.pieces);
  r.ell = static_cast<std::size_t>(std::count_if(
      r.pieces.begin(), r.pieces.end(), [](const Piece& p) { return p.kind == PieceKind::FType; }));
  r.phi = phi(wp.v);
  auto grid = snap_to_grid(r.varpi, r.m, r.ell, tolerance_);
  r.kappa = grid.kappa;
  r.grid_value = grid.value;
  r.tau_balance = grid.value + static_cast<long>(r.phi) == static_cast<long>(k);
  return r;
}

ProperPointReport WheelAnalyzer::is_proper_point(const WheelPoint& wp) const {
  ProperPointReport rep;
  const Vec3Q& v = wp.v;
  if (in_complement(v)) {
    rep.avoids_k = false;
    rep.proper = false;
    rep.notes.push_back("v lies in K(G)+X");
    return rep;
  }
  const Vec3Q& u = decomposition_.edge_vector;
  auto incs = incidences(v);

  // Facet-interior incidences: find v* in G_i + x with v - v* in R_i.
  for (const auto& inc : incs) {
    if (inc.on_edge) continue;
    ++rep.facet_incidences;
    const auto& piece = decomposition_.pieces[inc.position];
    const Facet& f = p_.facets()[piece.facet];
    detail::PlanarZonogon r(Vec3Q(), piece.r_generators, f.normal);
    Vec3Q w = v - inc.translate.offset - piece.edge_start;
    auto range = r.line_interval(w, -u);
    bool found = false;
    if (range) {
      Rational lo = std::max(range->first, Rational(0));
      Rational hi = std::min(range->second, Rational(1));
      for (const Rational& frac : {Rational(1, 2), Rational(1, 3), Rational(2, 3),
                                   Rational(1, 5), Rational(4, 5), Rational(0), Rational(1)}) {
        if (lo > hi) break;
        Rational a = lo + frac * (hi - lo);
        Vec3Q v_star = inc.translate.offset + piece.edge_start + a * u;
        Vec3Q v_star2 = v_star + piece.g;
        if (!in_complement(v_star) && !in_complement(v_star2)) {
          found = true;
          break;
        }
      }
    }
    if (!found) {
      rep.facet_points_ok = false;
      rep.notes.push_back("no admissible v* for facet " + std::to_string(inc.position + 1) +
                          " of translate " + to_string(inc.translate.offset));
    }
  }

  // Coplanar pairs (F*, F) with v on the u-edge G* of F*.
  for (std::size_t a = 0; a < incs.size(); ++a) {
    const auto& star = incs[a];
    if (!star.on_edge) continue;
    const Facet& fs = p_.facets()[belt_.facets[star.position]];
    for (std::size_t b = 0; b < incs.size(); ++b) {
      const auto& other = incs[b];
      if (b == a || other.translate.offset == star.translate.offset) continue;
      const Facet& fo = p_.facets()[belt_.facets[other.position]];
      if (!cross(fs.normal, fo.normal).is_zero()) continue;
      ++rep.coplanar_pairs;
      // Re-anchor F* so that its edge G* becomes E_0.
      Vec3Q g_start = star.translate.offset + decomposition_.pieces[star.edge].edge_start;
      std::vector<Vec3Q> poly;
      for (const auto& q : fs.polygon_vertices) poly.push_back(q + star.translate.offset);
      const auto n = poly.size();
      std::size_t first = n;
      for (std::size_t i = 0; i < n; ++i) {
        Vec3Q e = poly[(i + 1) % n] - poly[i];
        if (cross(e, u).is_zero() && (poly[i] == g_start || poly[(i + 1) % n] == g_start)) {
          first = i;
          break;
        }
      }
      if (first == n) throw Error(ErrorKind::InvalidArgument, "G* not found on F*");
      std::rotate(poly.begin(), poly.begin() + static_cast<std::ptrdiff_t>(first), poly.end());
      Vec3Q shift = (fo.center() + other.translate.offset) - (fs.center() + star.translate.offset);
      auto meet = facet_intersection(poly, fs.normal, shift);
      if (meet.status != IntersectionStatus::Meets || meet.polygon.size() < 3) {
        rep.notes.push_back("degenerate coplanar pair skipped");
        continue;
      }
      Vec3Q along = meet.base_edge_end - meet.base_edge_start;
      Rational s = dot(v - meet.base_edge_start, along) / dot(along, along);
      if (s <= 0 || s >= 1) {
        rep.notes.push_back("v at an end of E'_0; pair skipped");
        continue;
      }
      Vec3Q corresponding = v + meet.translation_vector;
      if (in_complement(corresponding)) {
        rep.corresponding_points_ok = false;
        rep.notes.push_back("corresponding point " + to_string(corresponding) +
                            " lies in K(G)+X");
      }
    }
  }
  rep.notes.push_back("condition 3 checked over located pieces only");
  rep.proper = rep.avoids_k && rep.facet_points_ok && rep.corresponding_points_ok;
  return rep;
}

PhiBoundResult WheelAnalyzer::check_phi_bound(const WheelPoint& wp) const {
  PhiBoundResult r;
  r.phi = phi(wp.v);
  r.bound = phi_lower_bound(belt_.m);
  r.holds = r.phi >= r.bound;
  return r;
}

std::vector<WheelPoint> WheelAnalyzer::sample_proper_points(std::size_t n, std::uint64_t seed,
                                                            long denominator) const {
  std::vector<WheelPoint> out;
  const std::size_t max_attempts = 100 * std::max<std::size_t>(n, 1);
  const auto edges = decomposition_.pieces.size();
  for (std::size_t attempt = 0; attempt < max_attempts && out.size() < n; ++attempt) {
    CounterRng rng(seed, attempt);
    const auto mi = static_cast<std::size_t>(rng.below(x_.motif().size()));
    Integer i(rng.range(-2, 2)), j(rng.range(-2, 2)), k(rng.range(-2, 2));
    Vec3Q lambda = x_.lattice().point(i, j, k);
    Translate t{mi, lambda, x_.motif()[mi] + lambda};
    const auto edge = static_cast<std::size_t>(rng.below(edges));
    Rational a(static_cast<long>(1 + rng.below(static_cast<std::uint64_t>(denominator - 1))),
               denominator);
    a.canonicalize();
    WheelPoint wp = point_on_edge(t, edge, a);
    try {
      (void)locate_pieces(wp);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::VertexContact || e.kind() == ErrorKind::KGContact) continue;
      throw;
    }
    if (!is_proper_point(wp).proper) continue;
    out.push_back(std::move(wp));
  }
  if (out.size() < n) {
    throw Error(ErrorKind::RejectionExhausted,
                "found " + std::to_string(out.size()) + " of " + std::to_string(n) +
                    " proper points in " + std::to_string(max_attempts) + " attempts");
  }
  return out;
}

}  // namespace beltlab

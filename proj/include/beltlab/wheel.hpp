#pragma once

// Local covering analysis at points on the belt edges of a tiling P + X:
// incident pieces, the dihedral-angle total varpi, the interior count phi,
// and the proper-point conditions.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "beltlab/belt.hpp"
#include "beltlab/tiling.hpp"

namespace beltlab {

inline constexpr double kDefaultAngleTolerance = 1e-9;

struct WheelPoint {
  Vec3Q v;
  Translate host;             // element x of X whose edge carries v
  std::size_t host_edge = 0;  // v lies in the relative interior of G_j + x, j = host_edge
};

enum class PieceKind { EType, FType };
std::string to_string(PieceKind kind);

struct Piece {
  Translate translate;
  PieceKind kind = PieceKind::EType;
  double dihedral_angle = 0.0;  // radians; pi for F-type pieces
  // E-type: j with v in G_j + x. F-type: i with v in rint(F_i) + x. Zero-based.
  std::size_t edge_or_facet = 0;
};

// kappa * (m - 1) / 2 + ell / 2
struct GridValue {
  long kappa = 0;
  std::size_t ell = 0;
  Rational value;
};

struct WheelReport {
  Vec3Q v;
  std::size_t m = 0;
  std::vector<Piece> pieces;
  double varpi = 0.0;
  std::size_t ell = 0;
  std::size_t phi = 0;
  std::optional<long> kappa;
  std::optional<Rational> grid_value;
  std::size_t claimed_k = 0;
  bool tau_balance = false;
};

struct ProperPointReport {
  bool proper = true;
  bool avoids_k = true;              // v not in K(G) + X
  bool facet_points_ok = true;       // v*, v** exist outside K(G) + X
  bool corresponding_points_ok = true;
  std::size_t facet_incidences = 0;
  std::size_t coplanar_pairs = 0;    // (F*, F) pairs among located pieces
  std::vector<std::string> notes;
};

struct PhiBoundResult {
  bool holds = true;
  std::size_t phi = 0;
  std::size_t bound = 0;
};

// ceil((m - 3) / 2) clamped at zero.
std::size_t phi_lower_bound(std::size_t m);

double varpi(const std::vector<Piece>& pieces);

// Snaps varpi onto {kappa (m-1)/2 + ell/2 : kappa >= 1}; throws NoHalfGridMatch.
GridValue snap_to_grid(double varpi, std::size_t m, std::size_t ell,
                       double tolerance = kDefaultAngleTolerance);

class WheelAnalyzer {
 public:
  WheelAnalyzer(const Zonotope& p, const PeriodicMultiset& x, std::size_t belt_generator,
                double tolerance = kDefaultAngleTolerance);

  const Zonotope& zonotope() const { return p_; }
  const PeriodicMultiset& translates() const { return x_; }
  const Belt& belt() const { return belt_; }
  const BeltDecomposition& decomposition() const { return decomposition_; }
  std::size_t m() const { return belt_.m; }
  double tolerance() const { return tolerance_; }

  // Throws VertexContact / KGContact on unusable points.
  std::vector<Piece> locate_pieces(const WheelPoint& wp) const;
  std::size_t phi(const Vec3Q& v) const;
  WheelReport check_balance(std::size_t k, const WheelPoint& wp) const;
  ProperPointReport is_proper_point(const WheelPoint& wp) const;
  PhiBoundResult check_phi_bound(const WheelPoint& wp) const;

  // n proper points on random edge translates, rejection sampled with
  // prime-denominator parameters; throws RejectionExhausted after 100 n tries.
  std::vector<WheelPoint> sample_proper_points(std::size_t n, std::uint64_t seed,
                                               long denominator = kDefaultSampleDenominator) const;

  // Point a of the way along G_j + x.
  WheelPoint point_on_edge(const Translate& t, std::size_t j, const Rational& a) const;
  // Resolves the host edge of v by search; throws InvalidArgument if v is not
  // in the relative interior of any belt edge translate.
  WheelPoint locate_host(const Vec3Q& v) const;

  // True iff point lies on a non-belt facet of some translate.
  bool in_complement(const Vec3Q& point) const;

 private:
  struct Incidence {
    Translate translate;
    std::size_t position;  // belt position i of facet F_i
    bool on_edge;          // v on an edge G_j of this facet
    std::size_t edge;      // that j when on_edge
  };

  std::optional<std::size_t> edge_containing(const Vec3Q& local) const;
  std::optional<std::size_t> belt_position(std::size_t facet) const;
  std::vector<Incidence> incidences(const Vec3Q& v) const;

  Zonotope p_;
  PeriodicMultiset x_;
  Belt belt_;
  BeltDecomposition decomposition_;
  double tolerance_;
};

}  // namespace beltlab

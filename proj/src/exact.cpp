#include "beltlab/exact.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "beltlab/errors.hpp"

namespace beltlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::ZeroGenerator: return "ZeroGenerator";
    case ErrorKind::EmptySpan: return "EmptySpan";
    case ErrorKind::ParallelGenerators: return "ParallelGenerators";
    case ErrorKind::SingularLattice: return "SingularLattice";
    case ErrorKind::InvalidBox: return "InvalidBox";
    case ErrorKind::NonGenericFunctional: return "NonGenericFunctional";
    case ErrorKind::UnclassifiableWithVenkovPass: return "UnclassifiableWithVenkovPass";
    case ErrorKind::BoundaryResampleExhausted: return "BoundaryResampleExhausted";
    case ErrorKind::VertexContact: return "VertexContact";
    case ErrorKind::KGContact: return "KGContact";
    case ErrorKind::NoHalfGridMatch: return "NoHalfGridMatch";
    case ErrorKind::RejectionExhausted: return "RejectionExhausted";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto is_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorKind::Parse, "not a rational: '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator: '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

int sign(const Rational& value) { return sgn(value); }

const Rational& Vec3Q::operator[](int axis) const {
  return axis == 0 ? x : (axis == 1 ? y : z);
}

Rational& Vec3Q::operator[](int axis) { return axis == 0 ? x : (axis == 1 ? y : z); }

Vec3Q& Vec3Q::operator+=(const Vec3Q& o) {
  x += o.x;
  y += o.y;
  z += o.z;
  return *this;
}

Vec3Q& Vec3Q::operator-=(const Vec3Q& o) {
  x -= o.x;
  y -= o.y;
  z -= o.z;
  return *this;
}

Vec3Q& Vec3Q::operator*=(const Rational& s) {
  x *= s;
  y *= s;
  z *= s;
  return *this;
}

bool Vec3Q::is_zero() const { return x == 0 && y == 0 && z == 0; }

std::array<double, 3> Vec3Q::to_double() const { return {x.get_d(), y.get_d(), z.get_d()}; }

Vec3Q operator+(Vec3Q a, const Vec3Q& b) { return a += b; }
Vec3Q operator-(Vec3Q a, const Vec3Q& b) { return a -= b; }
Vec3Q operator-(const Vec3Q& a) { return Vec3Q(-a.x, -a.y, -a.z); }
Vec3Q operator*(const Rational& s, Vec3Q v) { return v *= s; }
Vec3Q operator*(Vec3Q v, const Rational& s) { return v *= s; }
Vec3Q operator/(Vec3Q v, const Rational& s) {
  if (s == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  return v *= Rational(1 / s);
}

bool lex_less(const Vec3Q& a, const Vec3Q& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

Rational dot(const Vec3Q& a, const Vec3Q& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3Q cross(const Vec3Q& a, const Vec3Q& b) {
  return Vec3Q(a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x);
}

Rational det3(const Vec3Q& a, const Vec3Q& b, const Vec3Q& c) { return dot(a, cross(b, c)); }

bool parallel(const Vec3Q& a, const Vec3Q& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::ZeroVector, "parallel() of a zero vector");
  return cross(a, b).is_zero();
}

bool lex_positive(const Vec3Q& v) {
  for (int i = 0; i < 3; ++i) {
    if (v[i] != 0) return v[i] > 0;
  }
  return false;
}

Vec3Q primitive_integer(const Vec3Q& v) {
  if (v.is_zero()) throw Error(ErrorKind::ZeroVector, "primitive_integer() of zero");
  Integer l = 1;
  for (int i = 0; i < 3; ++i) l = lcm(l, Integer(v[i].get_den()));
  std::array<Integer, 3> n;
  Integer g = 0;
  for (int i = 0; i < 3; ++i) {
    Rational scaled = v[i] * l;
    n[static_cast<std::size_t>(i)] = scaled.get_num();
    g = gcd(g, n[static_cast<std::size_t>(i)]);
  }
  return Vec3Q(Rational(n[0] / g), Rational(n[1] / g), Rational(n[2] / g));
}

Vec3Q canonical_direction(const Vec3Q& v) {
  Vec3Q p = primitive_integer(v);
  return lex_positive(p) ? p : -p;
}

std::string to_string(const Vec3Q& v) {
  return "(" + to_string(v.x) + ", " + to_string(v.y) + ", " + to_string(v.z) + ")";
}

std::ostream& operator<<(std::ostream& os, const Vec3Q& v) { return os << to_string(v); }

Mat3Q Mat3Q::from_columns(const Vec3Q& c0, const Vec3Q& c1, const Vec3Q& c2) {
  return Mat3Q{{Vec3Q(c0.x, c1.x, c2.x), Vec3Q(c0.y, c1.y, c2.y), Vec3Q(c0.z, c1.z, c2.z)}};
}

Rational Mat3Q::det() const { return det3(rows[0], rows[1], rows[2]); }

Mat3Q Mat3Q::inverse() const {
  Rational d = det();
  if (d == 0) throw Error(ErrorKind::SingularLattice, "singular matrix");
  // Columns of the adjugate are the pairwise cross products of the rows.
  Vec3Q c0 = cross(rows[1], rows[2]);
  Vec3Q c1 = cross(rows[2], rows[0]);
  Vec3Q c2 = cross(rows[0], rows[1]);
  Mat3Q inv = from_columns(c0, c1, c2);
  Rational s = 1 / d;
  for (auto& r : inv.rows) r *= s;
  return inv;
}

Vec3Q Mat3Q::apply(const Vec3Q& v) const {
  return Vec3Q(dot(rows[0], v), dot(rows[1], v), dot(rows[2], v));
}

LatticeBasis::LatticeBasis(Vec3Q b1, Vec3Q b2, Vec3Q b3)
    : basis_{std::move(b1), std::move(b2), std::move(b3)} {
  det_ = det3(basis_[0], basis_[1], basis_[2]);
  if (det_ == 0) throw Error(ErrorKind::SingularLattice, "lattice basis has zero determinant");
  inverse_columns_ = Mat3Q::from_columns(basis_[0], basis_[1], basis_[2]).inverse();
}

LatticeBasis LatticeBasis::standard() {
  return LatticeBasis(Vec3Q(1, 0, 0), Vec3Q(0, 1, 0), Vec3Q(0, 0, 1));
}

LatticeBasis LatticeBasis::diagonal(const Rational& a, const Rational& b, const Rational& c) {
  return LatticeBasis(Vec3Q(a, 0, 0), Vec3Q(0, b, 0), Vec3Q(0, 0, c));
}

Vec3Q LatticeBasis::point(const Integer& i, const Integer& j, const Integer& k) const {
  return Rational(i) * basis_[0] + Rational(j) * basis_[1] + Rational(k) * basis_[2];
}

Vec3Q LatticeBasis::coordinates(const Vec3Q& x) const { return inverse_columns_.apply(x); }

Box3Q::Box3Q(Vec3Q lo_, Vec3Q hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  for (int i = 0; i < 3; ++i) {
    if (lo[i] > hi[i]) throw Error(ErrorKind::InvalidBox, "box lo exceeds hi");
  }
}

bool Box3Q::contains(const Vec3Q& p) const {
  for (int i = 0; i < 3; ++i) {
    if (p[i] < lo[i] || p[i] > hi[i]) return false;
  }
  return true;
}

std::array<Vec3Q, 8> Box3Q::corners() const {
  std::array<Vec3Q, 8> out;
  for (int m = 0; m < 8; ++m) {
    out[static_cast<std::size_t>(m)] =
        Vec3Q((m & 1) ? hi.x : lo.x, (m & 2) ? hi.y : lo.y, (m & 4) ? hi.z : lo.z);
  }
  return out;
}

std::array<std::pair<Integer, Integer>, 3> lattice_index_bounds(const LatticeBasis& lattice,
                                                                const Box3Q& box) {
  // The preimage of a box under a linear map is a parallelepiped whose
  // coordinate extremes are attained at images of the box corners.
  auto corners = box.corners();
  std::array<Rational, 3> lo, hi;
  bool first = true;
  for (const auto& c : corners) {
    Vec3Q t = lattice.coordinates(c);
    for (int i = 0; i < 3; ++i) {
      auto ui = static_cast<std::size_t>(i);
      if (first || t[i] < lo[ui]) lo[ui] = t[i];
      if (first || t[i] > hi[ui]) hi[ui] = t[i];
    }
    first = false;
  }
  std::array<std::pair<Integer, Integer>, 3> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = {ceil(lo[i]), floor(hi[i])};
  return out;
}

std::vector<Vec3Q> lattice_points_in_box(const LatticeBasis& lattice, const Box3Q& box) {
  auto bounds = lattice_index_bounds(lattice, box);
  std::vector<Vec3Q> out;
  for (Integer i = bounds[0].first; i <= bounds[0].second; ++i) {
    for (Integer j = bounds[1].first; j <= bounds[1].second; ++j) {
      for (Integer k = bounds[2].first; k <= bounds[2].second; ++k) {
        Vec3Q p = lattice.point(i, j, k);
        if (box.contains(p)) out.push_back(std::move(p));
      }
    }
  }
  return out;
}

}  // namespace beltlab

#pragma once

// Exact rational scalars, 3-vectors, and lattices.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace beltlab {

// GMP rationals: every arithmetic result is canonical (lowest terms,
// positive denominator), so equality is structural.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long numerator, long denominator = 1);

// Accepts "p", "p/q", "-p/q" with arbitrary-size integers.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);
Rational abs(const Rational& value);
int sign(const Rational& value);

struct Vec3Q {
  Rational x{0};
  Rational y{0};
  Rational z{0};

  Vec3Q() = default;
  Vec3Q(Rational x_, Rational y_, Rational z_)
      : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  Vec3Q(long x_, long y_, long z_) : x(x_), y(y_), z(z_) {}

  const Rational& operator[](int axis) const;
  Rational& operator[](int axis);

  Vec3Q& operator+=(const Vec3Q& other);
  Vec3Q& operator-=(const Vec3Q& other);
  Vec3Q& operator*=(const Rational& factor);

  bool is_zero() const;
  std::array<double, 3> to_double() const;

  friend bool operator==(const Vec3Q& a, const Vec3Q& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

Vec3Q operator+(Vec3Q a, const Vec3Q& b);
Vec3Q operator-(Vec3Q a, const Vec3Q& b);
Vec3Q operator-(const Vec3Q& a);
Vec3Q operator*(const Rational& s, Vec3Q v);
Vec3Q operator*(Vec3Q v, const Rational& s);
Vec3Q operator/(Vec3Q v, const Rational& s);

// Lexicographic order; used for deterministic sorting and dedupe.
bool lex_less(const Vec3Q& a, const Vec3Q& b);
struct LexLess {
  bool operator()(const Vec3Q& a, const Vec3Q& b) const { return lex_less(a, b); }
};

Rational dot(const Vec3Q& a, const Vec3Q& b);
Vec3Q cross(const Vec3Q& a, const Vec3Q& b);

// Determinant of the 3x3 matrix with rows a, b, c.
Rational det3(const Vec3Q& a, const Vec3Q& b, const Vec3Q& c);

// True iff cross(a, b) == 0. Throws ErrorKind::ZeroVector on a zero input.
bool parallel(const Vec3Q& a, const Vec3Q& b);

// First nonzero component is positive.
bool lex_positive(const Vec3Q& v);

// Smallest integer vector positively proportional to v (v must be nonzero).
Vec3Q primitive_integer(const Vec3Q& v);

// Primitive integer vector with lexicographically positive sign; equal for
// all nonzero vectors spanning the same line.
Vec3Q canonical_direction(const Vec3Q& v);

std::string to_string(const Vec3Q& v);
std::ostream& operator<<(std::ostream& os, const Vec3Q& v);

// 3x3 matrix stored by rows.
struct Mat3Q {
  std::array<Vec3Q, 3> rows;

  static Mat3Q from_columns(const Vec3Q& c0, const Vec3Q& c1, const Vec3Q& c2);
  Rational det() const;
  Mat3Q inverse() const;  // throws SingularLattice when det == 0
  Vec3Q apply(const Vec3Q& v) const;
};

// Basis b1, b2, b3 of a full-rank lattice in 3-space.
class LatticeBasis {
 public:
  LatticeBasis(Vec3Q b1, Vec3Q b2, Vec3Q b3);

  static LatticeBasis standard();
  static LatticeBasis diagonal(const Rational& a, const Rational& b, const Rational& c);

  const Vec3Q& operator[](int i) const { return basis_[static_cast<std::size_t>(i)]; }
  const std::array<Vec3Q, 3>& vectors() const { return basis_; }

  Rational det() const { return det_; }
  Vec3Q point(const Integer& i, const Integer& j, const Integer& k) const;
  // Coefficients of x in the basis (rational; integral iff x is in the lattice).
  Vec3Q coordinates(const Vec3Q& x) const;

  friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) {
    return a.basis_ == b.basis_;
  }

 private:
  std::array<Vec3Q, 3> basis_;
  Rational det_;
  Mat3Q inverse_columns_;
};

struct Box3Q {
  Vec3Q lo;
  Vec3Q hi;

  Box3Q(Vec3Q lo_, Vec3Q hi_);  // throws InvalidBox unless lo <= hi

  bool contains(const Vec3Q& p) const;
  std::array<Vec3Q, 8> corners() const;
};

// All lattice points inside the closed box, in lexicographic (i, j, k) order.
std::vector<Vec3Q> lattice_points_in_box(const LatticeBasis& lattice, const Box3Q& box);

// Integer index ranges [lo, hi] per basis vector that cover every lattice
// point inside the box (exact preimage of the box corners).
std::array<std::pair<Integer, Integer>, 3> lattice_index_bounds(const LatticeBasis& lattice,
                                                                const Box3Q& box);

}  // namespace beltlab

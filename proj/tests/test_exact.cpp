#include <gtest/gtest.h>

#include "beltlab/errors.hpp"
#include "beltlab/exact.hpp"
#include "beltlab/rng.hpp"
#include "oracles.hpp"

using namespace beltlab;

namespace {

Vec3Q random_vec(CounterRng& rng) {
  return Vec3Q(oracle::random_rational(rng, -5, 5, 7), oracle::random_rational(rng, -5, 5, 3),
               oracle::random_rational(rng, -5, 5, 11));
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), make_rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(parse_rational("12345678901234567890123/3"), parse_rational("4115226300411522630041"));
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(Rational(7)), "7");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(Rational, FloorCeilSign) {
  EXPECT_EQ(floor(make_rational(-1, 2)), -1);
  EXPECT_EQ(ceil(make_rational(-1, 2)), 0);
  EXPECT_EQ(floor(Rational(3)), 3);
  EXPECT_EQ(ceil(make_rational(7, 3)), 3);
  EXPECT_EQ(sign(make_rational(-2, 3)), -1);
  EXPECT_EQ(sign(Rational(0)), 0);
  EXPECT_EQ(abs(make_rational(-2, 3)), make_rational(2, 3));
}

TEST(Rational, SumMatchesCrossMultiplication) {
  CounterRng rng(11, 0);
  for (int i = 0; i < 1000; ++i) {
    long a = rng.range(-1000000, 1000000), b = rng.range(1, 1000000);
    long c = rng.range(-1000000, 1000000), d = rng.range(1, 1000000);
    Rational sum = make_rational(a, b) + make_rational(c, d);
    Integer num = Integer(a) * d + Integer(c) * b;
    Integer den = Integer(b) * d;
    Integer g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g == 0) g = 1;
    EXPECT_EQ(sum.get_num(), num / g);
    EXPECT_EQ(sum.get_den(), den / g);
  }
}

TEST(Det3, Examples) {
  EXPECT_EQ(det3(Vec3Q(1, 0, 0), Vec3Q(0, 1, 0), Vec3Q(0, 0, 1)), 1);
  EXPECT_EQ(det3(Vec3Q(1, 1, 1), Vec3Q(1, -1, 1), Vec3Q(-1, 1, 1)), -4);
  EXPECT_EQ(det3(Vec3Q(1, 0, 0), Vec3Q(2, 0, 0), Vec3Q(0, 0, 1)), 0);
}

TEST(Det3, AlternatingAndMatchesCofactors) {
  CounterRng rng(5, 1);
  for (int i = 0; i < 300; ++i) {
    Vec3Q a = random_vec(rng), b = random_vec(rng), c = random_vec(rng);
    const Rational d = det3(a, b, c);
    EXPECT_EQ(d, oracle::cofactor_det(a, b, c));
    EXPECT_EQ(det3(b, a, c), -d);
    EXPECT_EQ(det3(a, c, b), -d);
    EXPECT_EQ(det3(c, b, a), -d);
  }
}

TEST(Parallel, Examples) {
  EXPECT_TRUE(parallel(Vec3Q(1, 0, 0), Vec3Q(2, 0, 0)));
  EXPECT_FALSE(parallel(Vec3Q(1, 0, 0), Vec3Q(0, 1, 0)));
  EXPECT_TRUE(parallel(Vec3Q(2, 4, 6), Vec3Q(1, 2, 3)));
  EXPECT_TRUE(parallel(Vec3Q(1, 0, 0), Vec3Q(-3, 0, 0)));
  try {
    parallel(Vec3Q(), Vec3Q(1, 0, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroVector);
  }
}

TEST(Directions, CanonicalAndPrimitive) {
  EXPECT_EQ(primitive_integer(Vec3Q(Rational(2), make_rational(4, 3), Rational(0))),
            Vec3Q(3, 2, 0));
  EXPECT_EQ(canonical_direction(Vec3Q(-2, 4, 0)), Vec3Q(1, -2, 0));
  EXPECT_EQ(canonical_direction(Vec3Q(0, 0, -5)), Vec3Q(0, 0, 1));
  EXPECT_TRUE(lex_positive(Vec3Q(0, 1, -3)));
  EXPECT_FALSE(lex_positive(Vec3Q(0, -1, 3)));
  EXPECT_EQ(cross(Vec3Q(1, 0, 0), Vec3Q(0, 1, 0)), Vec3Q(0, 0, 1));
}

TEST(Lattice, SingularRejected) {
  try {
    LatticeBasis(Vec3Q(1, 0, 0), Vec3Q(2, 0, 0), Vec3Q(0, 0, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularLattice);
  }
}

TEST(Lattice, CoordinatesRoundTrip) {
  LatticeBasis b(Vec3Q(2, 1, 0), Vec3Q(-1, 1, 0), Vec3Q(0, 0, 1));
  EXPECT_EQ(b.det(), 3);
  Vec3Q p = b.point(3, -2, 5);
  EXPECT_EQ(b.coordinates(p), Vec3Q(3, -2, 5));
}

TEST(Box, InvalidRejected) {
  try {
    Box3Q(Vec3Q(0, 1, 0), Vec3Q(1, 0, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidBox);
  }
}

TEST(LatticePointsInBox, Examples) {
  auto unit = Box3Q(Vec3Q(0, 0, 0), Vec3Q(1, 1, 1));
  EXPECT_EQ(lattice_points_in_box(LatticeBasis::standard(), unit).size(), 8u);

  auto inner = Box3Q(Vec3Q(make_rational(1, 4), make_rational(1, 4), make_rational(1, 4)),
                     Vec3Q(make_rational(3, 4), make_rational(3, 4), make_rational(3, 4)));
  EXPECT_TRUE(lattice_points_in_box(LatticeBasis::standard(), inner).empty());

  auto half = LatticeBasis::diagonal(make_rational(1, 2), 1, 1);
  auto pts = lattice_points_in_box(half, Box3Q(Vec3Q(0, 0, 0), Vec3Q(1, 0, 0)));
  std::set<Vec3Q, LexLess> got(pts.begin(), pts.end());
  std::set<Vec3Q, LexLess> want{Vec3Q(0, 0, 0), Vec3Q(make_rational(1, 2), 0, 0),
                                Vec3Q(1, 0, 0)};
  EXPECT_EQ(got, want);
  EXPECT_EQ(pts.size(), 3u);
}

TEST(LatticePointsInBox, ClosedUnderMembership) {
  CounterRng rng(9, 2);
  for (int trial = 0; trial < 40; ++trial) {
    Vec3Q b1(rng.range(-2, 2), rng.range(-2, 2), rng.range(-2, 2));
    Vec3Q b2(rng.range(-2, 2), rng.range(-2, 2), rng.range(-2, 2));
    Vec3Q b3(rng.range(-2, 2), rng.range(-2, 2), rng.range(-2, 2));
    if (oracle::cofactor_det(b1, b2, b3) == 0) continue;
    LatticeBasis lat(b1 * make_rational(1, 2), b2, b3);
    Vec3Q lo = random_vec(rng);
    Vec3Q hi = lo + Vec3Q(rng.range(0, 3), rng.range(0, 3), rng.range(0, 3));
    Box3Q box(lo, hi);
    auto pts = lattice_points_in_box(lat, box);
    std::set<Vec3Q, LexLess> got(pts.begin(), pts.end());
    EXPECT_EQ(got.size(), pts.size()) << "duplicates";
    for (const auto& p : pts) {
      EXPECT_TRUE(box.contains(p));
      Vec3Q c = lat.coordinates(p);
      EXPECT_EQ(c.x.get_den(), 1);
      EXPECT_EQ(c.y.get_den(), 1);
      EXPECT_EQ(c.z.get_den(), 1);
    }
    auto bounds = lattice_index_bounds(lat, box);
    for (Integer i = bounds[0].first; i <= bounds[0].second; ++i) {
      for (Integer j = bounds[1].first; j <= bounds[1].second; ++j) {
        for (Integer k = bounds[2].first; k <= bounds[2].second; ++k) {
          Vec3Q p = lat.point(i, j, k);
          EXPECT_EQ(box.contains(p), got.count(p) == 1);
        }
      }
    }
  }
}

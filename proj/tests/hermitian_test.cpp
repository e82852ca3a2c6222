#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hermlab/hermitian.hpp"

using namespace hermlab;
using namespace hermlab::hermitian;

namespace {

Vec4 random_vec(const gf::Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<gf::Elem> pick(0, f.order() - 1);
  return {pick(rng), pick(rng), pick(rng), pick(rng)};
}

// Brute-force count of projective solutions of sum x_i^{q+1} = 0.
std::uint64_t brute_force_points(std::uint32_t q) {
  const auto f = gf::Field::build(gf::prime_power(q * q).first, gf::prime_power(q * q).second);
  const auto el = f.elements();
  std::uint64_t affine = 0;
  for (auto a : el)
    for (auto b : el)
      for (auto c : el)
        for (auto d : el) {
          gf::Elem s = 0;
          for (auto x : {a, b, c, d}) s = f.add(s, f.pow(x, q + 1));
          affine += s == 0;
        }
  return (affine - 1) / (f.order() - 1);
}

}  // namespace

class SurfaceTest : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(SurfaceTest, FormIsHermitianSesquilinear) {
  const Surface s(GetParam());
  const auto& f = s.field();
  const auto& t = s.tower();
  std::mt19937_64 rng(GetParam());
  for (int i = 0; i < 200; ++i) {
    const Vec4 u = random_vec(f, rng), v = random_vec(f, rng), w = random_vec(f, rng);
    const gf::Elem a = random_vec(f, rng)[0];
    Vec4 au_v{};
    Vec4 aw{};
    for (int k = 0; k < 4; ++k) {
      au_v[k] = f.add(f.mul(a, u[k]), v[k]);
      aw[k] = f.mul(a, w[k]);
    }
    EXPECT_EQ(s.form(au_v, w), f.add(f.mul(a, s.form(u, w)), s.form(v, w)));
    EXPECT_EQ(s.form(u, aw), f.mul(t.frobenius(a), s.form(u, w)));
    EXPECT_EQ(s.form(v, u), t.frobenius(s.form(u, v)));
    EXPECT_TRUE(t.in_base(s.form(u, u)));
  }
}

TEST_P(SurfaceTest, CountsMatchFormulas) {
  const std::uint32_t q = GetParam();
  const Surface s(q);
  const std::uint64_t q2 = q * q, q3 = q2 * q;
  EXPECT_EQ(s.point_count(), (q3 + 1) * (q2 + 1));
  EXPECT_EQ(s.line_count(), (q3 + 1) * (q + 1));
  EXPECT_EQ(s.curve_count(), q2 * q2 * (q3 + 1) * (q2 - 1));
  const auto pts = s.rational_points();
  EXPECT_EQ(pts.size(), s.point_count());
  for (const auto& p : pts) EXPECT_TRUE(s.contains(p.c));
  EXPECT_EQ(group_order(q), curve_stabilizer_order(q) * s.curve_count());
  EXPECT_EQ(group_order(q), point_stabilizer_order(q) * s.point_count());
}

TEST_P(SurfaceTest, ReferenceCurveAndLines) {
  const Surface s(GetParam());
  const std::uint32_t q = GetParam();
  const auto c = construct_fj(s);
  EXPECT_TRUE(satisfies_gram(s, c));
  EXPECT_EQ(s.gram(c.f), s.gram_target());
  const auto on = curve_rational_points(s, c);
  EXPECT_EQ(on.size(), q * q + 1);
  for (const auto& p : on) EXPECT_TRUE(s.contains(p.c));

  const auto line = reference_line(s);
  const auto line_pts = projgeo::line_points(s.field(), line);
  EXPECT_EQ(line_pts.size(), q * q + 1);
  for (const auto& p : line_pts) EXPECT_TRUE(s.contains(p.c));

  const auto [l1, l2] = disjoint_line_pair(s);
  const auto p1 = projgeo::line_points(s.field(), l1), p2 = projgeo::line_points(s.field(), l2);
  std::vector<projgeo::ProjPoint> common;
  std::set_intersection(p1.begin(), p1.end(), p2.begin(), p2.end(), std::back_inserter(common));
  EXPECT_TRUE(common.empty());
  for (const auto& p : p1) EXPECT_TRUE(s.contains(p.c));
}

TEST_P(SurfaceTest, GeneratorsAreSimilitudes) {
  const Surface s(GetParam());
  const auto gens = unitary_generators(s);
  ASSERT_FALSE(gens.empty());
  std::mt19937_64 rng(1);
  const auto c = construct_fj(s);
  for (const auto& g : gens) {
    ASSERT_TRUE(similitude_factor(s, g.a).has_value());
    for (int i = 0; i < 20; ++i) {
      const Vec4 v = random_vec(s.field(), rng);
      EXPECT_EQ(s.contains(v), s.contains(apply(s.field(), g.a, v)));
    }
    EXPECT_TRUE(satisfies_gram(s, act_on_curve(s, g, c)));
  }
  const Mat4 u = random_unitary(s, rng);
  EXPECT_EQ(s.gram(u), identity4());
}

INSTANTIATE_TEST_SUITE_P(Q, SurfaceTest, ::testing::Values(2u, 3u, 4u, 5u));

TEST(Surface, PointCountsByBruteForce) {
  EXPECT_EQ(Surface(2).point_count(), brute_force_points(2));
  EXPECT_EQ(Surface(3).point_count(), brute_force_points(3));
}

TEST(Orbits, SizesAtQ2And3) {
  for (std::uint32_t q : {2u, 3u}) {
    const Surface s(q);
    const auto gens = unitary_generators(s);
    const auto pts = point_orbit(s, gens);
    const auto lines = line_orbit(s, gens);
    EXPECT_EQ(pts.size(), s.point_count());
    EXPECT_EQ(lines.size(), s.line_count());
    for (const auto& l : lines.items)
      for (const auto& p : projgeo::line_points(s.field(), l)) ASSERT_TRUE(s.contains(p.c));
    if (q == 2) {
      const auto curves = curve_orbit(s, gens);
      EXPECT_EQ(curves.size(), 432u);
      EXPECT_TRUE(std::is_sorted(curves.keys.begin(), curves.keys.end()));
      EXPECT_EQ(std::adjacent_find(curves.keys.begin(), curves.keys.end()), curves.keys.end());
      for (std::size_t i = 0; i < curves.size(); i += 37) {
        EXPECT_TRUE(satisfies_gram(s, curves.items[i]));
        EXPECT_EQ(curve_key(s, curves.items[i]), curves.keys[i]);
      }
      ASSERT_EQ(curves.action.size(), gens.size());
      for (const auto& perm : curves.action) {
        std::vector<std::uint32_t> sorted(perm);
        std::sort(sorted.begin(), sorted.end());
        for (std::uint32_t i = 0; i < sorted.size(); ++i) ASSERT_EQ(sorted[i], i);
      }
    }
  }
}

// Whole group at q = 2; the stabilizer orders follow by counting fixed keys.
TEST(Orbits, StabilizersAtQ2) {
  const Surface s(2);
  const auto gens = unitary_generators(s);
  const auto group = enumerate_group(s, gens);
  ASSERT_EQ(group.size(), 25920u);
  const auto c = construct_fj(s);
  const auto key = curve_key(s, c);
  const auto pt = curve_rational_points(s, c).front();
  std::size_t curve_fix = 0, point_fix = 0;
  for (const auto& g : group) {
    curve_fix += curve_key(s, act_on_curve(s, g, c)) == key;
    point_fix += act_on_point(s, g, pt) == pt;
  }
  EXPECT_EQ(curve_fix, 60u);
  EXPECT_EQ(point_fix, 576u);
}

TEST(Orbits, KeyIgnoresFrameChoice) {
  // Two frames of one curve differ by a stabilizer element; the key must not.
  const Surface s(3);
  const auto c = construct_fj(s);
  const auto pts = curve_rational_points(s, c);
  const auto gens = unitary_generators(s);
  std::mt19937_64 rng(9);
  CurveMatrix moved = c;
  for (int i = 0; i < 25; ++i) moved = act_on_curve(s, gens[rng() % gens.size()], moved);
  const auto moved_pts = curve_rational_points(s, moved);
  EXPECT_EQ(moved_pts == pts, curve_key(s, moved) == curve_key(s, c));
  EXPECT_EQ(curve_key(s, c), curve_key(s, c));
}

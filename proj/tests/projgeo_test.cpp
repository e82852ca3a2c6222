#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hermlab/linalg.hpp"
#include "hermlab/projgeo.hpp"

using namespace hermlab;
using gf::Elem;
using gf::Field;

namespace {

linalg::Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937& rng, int zero_pct = 30) {
  linalg::Matrix m(r, c);
  std::uniform_int_distribution<Elem> pick(1, f.order() - 1);
  std::uniform_int_distribution<int> pct(0, 99);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = pct(rng) < zero_pct ? 0 : pick(rng);
  return m;
}

}  // namespace

TEST(Linalg, RankNullity) {
  const auto f = Field::build(3, 2);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = random_matrix(f, 1 + trial % 6, 2 + trial % 7, rng, 50);
    const auto k = linalg::kernel(f, m);
    EXPECT_EQ(linalg::rank(f, m) + k.rows(), m.cols());
    const auto prod = linalg::multiply(f, m, k.transposed());
    for (Elem x : prod.data()) EXPECT_EQ(x, 0u);
  }
}

TEST(Linalg, RrefIsReduced) {
  const auto f = Field::build(5, 1);
  std::mt19937 rng(11);
  auto m = random_matrix(f, 5, 8, rng);
  const auto pivots = linalg::rref(f, m);
  ASSERT_EQ(pivots.size(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t r = 0; r < m.rows(); ++r) EXPECT_EQ(m.at(r, pivots[i]), r == i ? 1u : 0u);
}

TEST(Linalg, RowSpaceMatchesRank) {
  const auto f = Field::build(2, 3);
  std::mt19937 rng(5);
  const auto m = random_matrix(f, 9, 6, rng, 60);
  linalg::RowSpace rs(6);
  for (std::size_t i = 0; i < m.rows(); ++i) rs.insert(f, m.row(i));
  EXPECT_EQ(rs.dim(), linalg::rank(f, m));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Elem> v(m.row(i).begin(), m.row(i).end());
    EXPECT_TRUE(rs.reduce(f, v));
  }
}

TEST(Projective, CountsAndNormalization) {
  for (auto [p, e] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 1u}, {3u, 2u}}) {
    const auto f = Field::build(p, e);
    const auto pts = projgeo::enumerate_p3(f);
    const std::uint64_t n = f.order();
    EXPECT_EQ(pts.size(), (n * n * n * n - 1) / (n - 1));
    EXPECT_EQ(pts.size(), projgeo::projective_count(n, 3));
    EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
    EXPECT_EQ(std::set<projgeo::ProjPoint>(pts.begin(), pts.end()).size(), pts.size());
    for (const auto& pt : pts) {
      std::size_t i = 0;
      while (pt.c[i] == 0) ++i;
      EXPECT_EQ(pt.c[i], 1u);
    }
    EXPECT_EQ(projgeo::enumerate_p1(f).size(), n + 1);
  }
  EXPECT_THROW(projgeo::normalize<4>(Field::build(2, 1), {0, 0, 0, 0}), std::invalid_argument);
}

// Lines of P^3(F_n): the Gaussian binomial [4 choose 2]_n.
TEST(Projective, LineCountsFromPointPairs) {
  for (auto [p, expected] : {std::pair{2u, 35u}, {3u, 130u}}) {
    const auto f = Field::build(p, 1);
    const auto pts = projgeo::enumerate_p3(f);
    std::set<projgeo::LineFrame> lines;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) lines.insert(projgeo::line_through(f, pts[i].c, pts[j].c));
    EXPECT_EQ(lines.size(), expected);
  }
}

TEST(Projective, LinePointsAndCanonicalFrame) {
  const auto f = Field::build(2, 2);
  const auto pts = projgeo::enumerate_p3(f);
  std::mt19937 rng(2);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = pts[pick(rng)], b = pts[pick(rng)];
    if (a == b) continue;
    const auto line = projgeo::line_through(f, a.c, b.c);
    const auto on = projgeo::line_points(f, line);
    EXPECT_EQ(on.size(), f.order() + 1u);
    EXPECT_TRUE(std::binary_search(on.begin(), on.end(), a));
    EXPECT_TRUE(std::binary_search(on.begin(), on.end(), b));
    EXPECT_TRUE(projgeo::line_contains(f, line, a));
    std::size_t inside = 0;
    for (const auto& pt : pts) inside += projgeo::line_contains(f, line, pt);
    EXPECT_EQ(inside, on.size());
    // Same column space, other basis: (a + b, g * b).
    std::array<Elem, 8> raw{};
    for (int i = 0; i < 4; ++i) {
      raw[2 * i] = f.add(a.c[i], b.c[i]);
      raw[2 * i + 1] = f.mul(2, b.c[i]);
    }
    EXPECT_EQ(projgeo::canonical_line(f, raw), line);
  }
  std::array<Elem, 8> rank_one{1, 1, 0, 0, 0, 0, 0, 0};
  EXPECT_THROW(projgeo::canonical_line(f, rank_one), std::invalid_argument);
}

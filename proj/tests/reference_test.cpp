#include <gtest/gtest.h>

#include "hermlab/reference.hpp"
#include "hermlab/suite.hpp"
#include "test_util.hpp"

using namespace hermlab;
using reference::parse_entry;
using cyclo::CycNum;

TEST(ReferenceGrammar, Entries) {
  const auto x = parse_entry("x", 12);
  EXPECT_EQ(x * x, CycNum(12, -3));
  EXPECT_EQ(parse_entry("x11", 12), CycNum(12, 1) + x);
  EXPECT_EQ(parse_entry("x12", 12), CycNum(12, 1) + x * mpq_class(2));
  EXPECT_EQ(parse_entry("-x21", 12), -(CycNum(12, 2) + x));
  EXPECT_EQ(parse_entry("X", 12), x.conj());
  EXPECT_EQ(parse_entry("3/2x", 12), x * mpq_class(3, 2));
  EXPECT_EQ(parse_entry("-7", 3), CycNum(3, -7));
  EXPECT_THROW(parse_entry("y", 12), std::exception);
  const auto m = reference::parse_matrix("1 2; 3 x", 12);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[1][1], x);
}

TEST(ReferenceGrammar, TablesAreConsistent) {
  for (const auto& t : {reference::intersection_q2(), reference::orbital_points_q2(), reference::orbital_lines_q2(),
                        reference::orbital_curves_q2()}) {
    ASSERT_FALSE(t.P.empty()) << t.name;
    std::uint64_t total = 0;
    for (auto k : t.valencies) total += k;
    EXPECT_EQ(total, t.order) << t.name;
  }
}

// The q = 2 line scheme: the stored dual matrices only match after transposing.
TEST(ReferenceCompare, LinesNeedTheTranspose) {
  testutil::TempDir dir;
  suite::Config c;
  c.q = 2;
  c.cache_dir = dir.path();
  suite::Session s(c);
  const auto& sch = s.scheme("orbital:lines");
  const auto& tab = s.table("orbital:lines");
  auto ref = reference::orbital_lines_q2(tab.cyclotomic_order);
  ASSERT_TRUE(ref.lstar_transposed);
  EXPECT_TRUE(reference::compare(sch, tab, ref).matched);
  ref.lstar_transposed = false;
  const auto cmp = reference::compare(sch, tab, ref);
  EXPECT_FALSE(cmp.matched);
  EXPECT_FALSE(cmp.detail.empty());

  const auto& pts = s.scheme("orbital:points");
  EXPECT_TRUE(reference::compare(pts, s.table("orbital:points"), reference::orbital_points_q2(s.table("orbital:points").cyclotomic_order)).matched);
}

TEST(ReferenceCompare, PointSchemeStructureConstants) {
  testutil::TempDir dir;
  suite::Config c;
  c.q = 2;
  c.cache_dir = dir.path();
  suite::Session s(c);
  const auto& sch = s.scheme("orbital:points");
  ASSERT_EQ(sch.classes(), 2u);
  const unsigned big = sch.valency(1) == 32 ? 1 : 2, small = 3 - big;
  ASSERT_EQ(sch.valency(big), 32u);
  ASSERT_EQ(sch.valency(small), 12u);
  const std::array<unsigned, 3> order{0, big, small};
  schemes::IntMatrix l1(3, std::vector<std::int64_t>(3));
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j) l1[k][j] = sch.p(big, order[j], order[k]);
  EXPECT_EQ(l1, (schemes::IntMatrix{{0, 32, 0}, {1, 22, 9}, {0, 24, 8}}));
}

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>

#include "hermlab/schemes.hpp"

using namespace hermlab;
using namespace hermlab::schemes;

namespace {

std::int64_t cyclic_distance(std::size_t x, std::size_t y, std::size_t n) {
  const std::size_t d = x > y ? x - y : y - x;
  return static_cast<std::int64_t>(std::min(d, n - d));
}

std::vector<std::string> row_text(const std::vector<CycNum>& row) {
  std::vector<std::string> out;
  for (const auto& x : row) out.push_back(x.render());
  return out;
}

// S_3 acting on itself: r(x, y) = index of x^{-1} y.
RelationMatrix s3_thin() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::array<int, 3>& x) {
    return static_cast<std::uint8_t>(std::find(perms.begin(), perms.end(), x) - perms.begin());
  };
  RelationMatrix rel;
  rel.n = 6;
  rel.r.resize(36);
  for (std::size_t x = 0; x < 6; ++x) {
    std::array<int, 3> inv{};
    for (int i = 0; i < 3; ++i) inv[perms[x][i]] = i;
    for (std::size_t y = 0; y < 6; ++y) {
      std::array<int, 3> z{};
      for (int i = 0; i < 3; ++i) z[i] = inv[perms[y][i]];
      rel.r[x * 6 + y] = index(z);
    }
  }
  return rel;
}

}  // namespace

TEST(Scheme, TrivialCompleteGraph) {
  const auto s = scheme_from_invariant(5, [](std::size_t, std::size_t) { return 1; });
  EXPECT_EQ(s.classes(), 1u);
  EXPECT_EQ(s.valencies(), (std::vector<std::uint64_t>{1, 4}));
  EXPECT_TRUE(s.axiom_violations().empty());
  EXPECT_EQ(s.p(1, 1, 1), 3);
  EXPECT_EQ(s.p(1, 1, 0), 4);
  const auto t = character_table_auto(s);
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : t.P) rows.push_back(row_text(r));
  std::sort(rows.begin(), rows.end());
  EXPECT_EQ(rows, (std::vector<std::vector<std::string>>{{"1", "-1"}, {"1", "4"}}));
  EXPECT_TRUE(verify_char_table(s, t).empty());
  const auto L = intersection_matrices(s);
  EXPECT_EQ(L[0], (IntMatrix{{1, 0}, {0, 1}}));
  EXPECT_EQ(L[1], (IntMatrix{{0, 4}, {1, 3}}));
  EXPECT_EQ(adjacency_trace_products(s), (IntMatrix{{5, 0}, {0, 20}}));
  const auto Ls = dual_intersection_matrices(t);
  EXPECT_EQ(Ls[0][0][0], CycNum(t.cyclotomic_order, 1));
  EXPECT_EQ(Ls[0][1][0], CycNum(t.cyclotomic_order, 0));
}

TEST(Scheme, PentagonNeedsFifthRoots) {
  const auto s = scheme_from_invariant(5, [](std::size_t x, std::size_t y) { return cyclic_distance(x, y, 5); });
  EXPECT_EQ(s.classes(), 2u);
  EXPECT_THROW(character_table_auto(s), RecognitionError);
  const auto t = character_table(s, 5);
  EXPECT_TRUE(verify_char_table(s, t).empty());
  const CycNum golden = (CycNum(5, -1) + *CycNum::sqrt_of_integer(5, 5)) * mpq_class(1, 2);
  bool found = false;
  for (const auto& row : t.P)
    for (const auto& x : row) found |= x == golden;
  EXPECT_TRUE(found);
  EXPECT_EQ(t.multiplicities, (std::vector<std::uint64_t>{1, 2, 2}));
  EXPECT_EQ(t.minimal_order, 5u);
}

TEST(Scheme, SymmetricGroupIsNoncommutative) {
  std::vector<std::int64_t> labels(6);
  std::iota(labels.begin(), labels.end(), 0);
  const auto s = Scheme::from_relations(s3_thin(), labels);
  EXPECT_EQ(s.classes(), 5u);
  EXPECT_FALSE(s.commutative());
  EXPECT_FALSE(s.symmetric());
  EXPECT_TRUE(s.axiom_violations().empty());
  const auto t = character_table_auto(s);
  EXPECT_TRUE(verify_char_table(s, t).empty());
  auto sorted = [](std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(sorted(t.rep_degrees), (std::vector<std::uint64_t>{1, 1, 2}));
  EXPECT_EQ(sorted(t.multiplicities), (std::vector<std::uint64_t>{1, 1, 2}));
  EXPECT_EQ(sorted(t.ranks), (std::vector<std::uint64_t>{1, 1, 4}));
}

TEST(Scheme, RejectsNonSchemes) {
  // Distances in a path are not a scheme: rows 0 and 1 have different valencies.
  EXPECT_THROW(scheme_from_invariant(3, [](std::size_t x, std::size_t y) { return x > y ? x - y : y - x; }),
               NotASchemeError);
}

TEST(Scheme, OrbitalsOfDihedralGroup) {
  std::vector<std::vector<std::uint32_t>> action{{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}};
  auto subs = suborbits(action);
  for (auto& o : subs) std::sort(o.begin(), o.end());
  std::sort(subs.begin(), subs.end());
  EXPECT_EQ(subs, (std::vector<std::vector<std::uint32_t>>{{0}, {1, 4}, {2, 3}}));
  const auto s = scheme_from_orbitals(action);
  const auto d = scheme_from_invariant(5, [](std::size_t x, std::size_t y) { return cyclic_distance(x, y, 5); });
  EXPECT_EQ(intersection_matrices(s), intersection_matrices(d));
  // Only the rotation: 5 thin classes.
  EXPECT_EQ(scheme_from_orbitals({{1, 2, 3, 4, 0}}).classes(), 4u);
}

TEST(Scheme, SampledRows) {
  const std::size_t n = 7;
  const auto full = scheme_from_invariant(n, [&](std::size_t x, std::size_t y) { return cyclic_distance(x, y, n); });
  auto row = [&](std::size_t x) {
    std::vector<std::uint8_t> r(n);
    for (std::size_t z = 0; z < n; ++z) r[z] = static_cast<std::uint8_t>(cyclic_distance(x, z, n));
    return r;
  };
  const auto sampled = Scheme::from_symmetric_rows(n, full.labels(), {{0, row(0)}, {1, row(1)}, {2, row(2)}, {3, row(3)}});
  EXPECT_EQ(intersection_matrices(sampled), intersection_matrices(full));
  auto bad = row(1);
  std::swap(bad[2], bad[4]);  // classes 2 and 3 of row 0
  try {
    Scheme::from_symmetric_rows(n, full.labels(), {{0, row(0)}, {1, bad}, {2, row(2)}, {3, row(3)}, {6, row(6)}});
    ADD_FAILURE() << "inconsistent rows accepted";
  } catch (const NotASchemeError& e) {
    EXPECT_NE(std::string(e.what()).find("not constant"), std::string::npos) << e.what();
  }
  EXPECT_THROW(Scheme::from_symmetric_rows(n, full.labels(), {{0, row(0)}, {1, row(1)}}), NotASchemeError);
}

TEST(Scheme, AlgebraProduct) {
  const auto s = scheme_from_invariant(5, [](std::size_t x, std::size_t y) { return cyclic_distance(x, y, 5); });
  // A_1^2 = 2 A_0 + A_2 in the pentagon.
  const std::vector<CycNum> a1{CycNum(12, 0), CycNum(12, 1), CycNum(12, 0)};
  const auto sq = algebra_multiply(s, a1, a1);
  EXPECT_EQ(sq, (std::vector<CycNum>{CycNum(12, 2), CycNum(12, 0), CycNum(12, 1)}));
}

TEST(Partitions, Values) {
  const std::vector<unsigned long> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (unsigned m = 0; m < p.size(); ++m) EXPECT_EQ(partition_count(m), p[m]) << m;
  EXPECT_EQ(partition_count(100).get_str(), "190569292");
  const auto b = partition_bound({1, 2, 3, 4, 5}, 5);
  EXPECT_EQ(b.sum, 18);
  EXPECT_EQ(b.bound, 5);
  EXPECT_EQ(partition_bound({1, 2, 3, 4, 5, 6, 7, 8, 10, 20}, 10).sum, 735);
}

TEST(Conjecture, Predicate) {
  EXPECT_TRUE(conjecture_check(2, 5).holds);
  EXPECT_TRUE(conjecture_check(3, 10).holds);
  EXPECT_FALSE(conjecture_check(3, 9).holds);
  EXPECT_EQ(conjecture_check(4, 2).expected, 17u);
}

TEST(Matching, FindsPermutation) {
  auto c = [](long v) { return CycNum(12, v); };
  // One table, rows x cols of single-entry cells.
  std::vector<std::vector<std::vector<CycNum>>> a{{{c(1)}, {c(4)}, {c(6)}}, {{c(1)}, {c(-1)}, {c(0)}},
                                                   {{c(1)}, {c(2)}, {c(-3)}}};
  std::vector<std::vector<std::vector<CycNum>>> b{{{c(1)}, {c(-3)}, {c(2)}}, {{c(1)}, {c(6)}, {c(4)}},
                                                   {{c(1)}, {c(0)}, {c(-1)}}};
  const auto m = match_tables(a, b, false, [](const Matching&) { return true; });
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->rows, (std::vector<std::size_t>{1, 2, 0}));
  EXPECT_EQ(m->cols, (std::vector<std::size_t>{0, 2, 1}));
  b[2][1] = {c(5)};
  EXPECT_FALSE(match_tables(a, b, false, [](const Matching&) { return true; }).has_value());
}

#include <gtest/gtest.h>

#include <json.hpp>

#include "hermlab/graphs.hpp"

using namespace hermlab;
using namespace hermlab::graphs;

namespace {

// Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
Graph petersen() {
  std::vector<unsigned> sets;
  for (unsigned a = 0; a < 5; ++a)
    for (unsigned b = a + 1; b < 5; ++b) sets.push_back((1u << a) | (1u << b));
  Graph g(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!(sets[i] & sets[j])) g.add_edge(i, j);
  return g;
}

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

projgeo::ProjPoint pt(gf::Elem i) { return {{1, i, 0, 0}}; }

}  // namespace

TEST(Srg, Petersen) {
  const auto g = petersen();
  EXPECT_EQ(g.edge_count(), 15u);
  const auto r = srg_params(g);
  ASSERT_TRUE(r.params.has_value()) << r.violation;
  EXPECT_EQ(*r.params, (SrgParams{10, 3, 0, 1}));
  EXPECT_TRUE(r.params->feasible());
  const auto c = srg_params(complement(g));
  ASSERT_TRUE(c.params.has_value());
  EXPECT_EQ(*c.params, (SrgParams{10, 6, 3, 4}));
}

TEST(Srg, DegenerateAndIrregular) {
  const auto k5 = srg_params(complete(5));
  EXPECT_TRUE(k5.degenerate);
  EXPECT_FALSE(k5.params.has_value());
  EXPECT_FALSE(k5.mu.has_value());
  EXPECT_EQ(k5.k, 4u);
  EXPECT_TRUE(srg_params(Graph(4)).degenerate);
  Graph path(4);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  const auto r = srg_params(path);
  EXPECT_FALSE(r.params.has_value());
  EXPECT_FALSE(r.violation.empty());
}

TEST(Graph, ComplementAndCompleteness) {
  const auto g = petersen();
  EXPECT_EQ(complement(complement(g)), g);
  EXPECT_EQ(complement(g).edge_count(), 45u - 15u);
  EXPECT_TRUE(is_complete(complete(6)));
  EXPECT_TRUE(is_complete(Graph(1)));
  EXPECT_FALSE(is_complete(g));
  EXPECT_EQ(g.common_neighbours(0, 1), g.adjacent(0, 1) ? 0u : 1u);
}

TEST(Graph, CliqueUnion) {
  std::vector<projgeo::ProjPoint> pts;
  for (gf::Elem i = 0; i < 8; ++i) pts.push_back(pt(i));
  const auto g = clique_union(pts, {{pt(0), pt(2), pt(4), pt(6)}});
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(g.degree(1), 0u);
  EXPECT_TRUE(g.adjacent(2, 6));
  const auto h = clique_union(pts, {{pt(0), pt(1)}, {pt(1), pt(2)}, {pt(0), pt(1), pt(3)}});
  EXPECT_EQ(h.edge_count(), 4u);
  EXPECT_THROW(clique_union(pts, {{pt(0), pt(9)}}), std::invalid_argument);
}

TEST(Graph, Exports) {
  Graph g(3);
  g.add_edge(2, 0);
  const auto j = nlohmann::json::parse(edge_list_json(g, {"a", "b", "c"}));
  EXPECT_EQ(j["vertices"], 3);
  EXPECT_EQ(j["labels"], (nlohmann::json{"a", "b", "c"}));
  EXPECT_EQ(j["edges"], (nlohmann::json{{0, 2}}));
  EXPECT_EQ(adjacency_text(g), "001\n000\n100\n");
}

TEST(Srg, FormulasAreFeasible) {
  EXPECT_EQ(point_curve_formula(2), (SrgParams{45, 32, 22, 24}));
  EXPECT_EQ(collinearity_formula(2), (SrgParams{45, 12, 3, 3}));
  EXPECT_EQ(point_curve_formula(3), (SrgParams{280, 243, 210, 216}));
  for (std::uint64_t q = 2; q <= 9; ++q) {
    EXPECT_TRUE(point_curve_formula(q).feasible()) << q;
    EXPECT_TRUE(collinearity_formula(q).feasible()) << q;
    // The two graphs are complementary.
    const auto a = point_curve_formula(q), b = collinearity_formula(q);
    EXPECT_EQ(a.v, b.v);
    EXPECT_EQ(a.k + b.k + 1, a.v);
  }
}

#include "hermlab/graphs.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hermlab/parallel.hpp"

namespace hermlab::graphs {

Graph::Graph(std::size_t v) : v_(v), w_((v + 63) / 64), bits_(v * w_, 0) {}

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a >= v_ || b >= v_) throw std::out_of_range("vertex index out of range");
  if (a == b) return;
  bits_[a * w_ + b / 64] |= 1ull << (b % 64);
  bits_[b * w_ + a / 64] |= 1ull << (a % 64);
}

std::size_t Graph::degree(std::size_t a) const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < w_; ++i) d += std::popcount(bits_[a * w_ + i]);
  return d;
}

std::size_t Graph::common_neighbours(std::size_t a, std::size_t b) const {
  std::size_t c = 0;
  const auto* ra = row(a);
  const auto* rb = row(b);
  for (std::size_t i = 0; i < w_; ++i) c += std::popcount(ra[i] & rb[i]);
  return c;
}

std::size_t Graph::edge_count() const {
  std::size_t e = 0;
  for (std::size_t a = 0; a < v_; ++a) e += degree(a);
  return e / 2;
}

SrgReport srg_params(const Graph& g, unsigned jobs) {
  SrgReport r;
  const std::size_t v = g.order();
  r.v = v;
  if (v == 0) {
    r.degenerate = true;
    return r;
  }
  r.k = g.degree(0);
  for (std::size_t a = 1; a < v; ++a)
    if (g.degree(a) != r.k) {
      r.violation = "vertex " + std::to_string(a) + " has degree " + std::to_string(g.degree(a)) +
                    ", vertex 0 has " + std::to_string(r.k);
      return r;
    }

  // Common-neighbour counts for every pair a < b, row by row.
  std::vector<std::vector<std::uint32_t>> cn(v);
  parallel_for(
      v, jobs,
      [&](std::size_t a) {
        auto& row = cn[a];
        row.resize(v - a - 1);
        for (std::size_t b = a + 1; b < v; ++b) row[b - a - 1] = static_cast<std::uint32_t>(g.common_neighbours(a, b));
      },
      8);
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b) {
      const std::uint64_t c = cn[a][b - a - 1];
      auto& slot = g.adjacent(a, b) ? r.lambda : r.mu;
      if (!slot) {
        slot = c;
      } else if (*slot != c) {
        r.violation = std::string(g.adjacent(a, b) ? "adjacent" : "non-adjacent") + " pair (" +
                      std::to_string(a) + "," + std::to_string(b) + ") has " + std::to_string(c) +
                      " common neighbours, expected " + std::to_string(*slot);
        return r;
      }
    }
  if (!r.lambda || !r.mu) {
    r.degenerate = true;
    return r;
  }
  r.params = SrgParams{r.v, r.k, *r.lambda, *r.mu};
  return r;
}

SrgParams point_curve_formula(std::uint64_t q) {
  return {(q * q * q + 1) * (q * q + 1), q * q * q * q * q, q * (q - 1) * (q * q * q + q * q - 1),
          q * q * q * (q * q - 1)};
}

SrgParams collinearity_formula(std::uint64_t q) {
  return {(q * q * q + 1) * (q * q + 1), q * q * (q + 1), q * q - 1, q + 1};
}

Graph clique_union(const std::vector<projgeo::ProjPoint>& points,
                   const std::vector<std::vector<projgeo::ProjPoint>>& blocks) {
  if (!std::is_sorted(points.begin(), points.end())) throw std::invalid_argument("point list must be sorted");
  Graph g(points.size());
  std::vector<std::size_t> idx;
  for (const auto& block : blocks) {
    idx.clear();
    for (const auto& p : block) {
      auto it = std::lower_bound(points.begin(), points.end(), p);
      if (it == points.end() || *it != p) throw std::invalid_argument("block point is not a listed vertex");
      idx.push_back(static_cast<std::size_t>(it - points.begin()));
    }
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j) g.add_edge(idx[i], idx[j]);
  }
  return g;
}

Graph complement(const Graph& g) {
  Graph c(g.order());
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = a + 1; b < g.order(); ++b)
      if (!g.adjacent(a, b)) c.add_edge(a, b);
  return c;
}

bool is_complete(const Graph& g) {
  for (std::size_t a = 0; a < g.order(); ++a)
    if (g.degree(a) + 1 != g.order()) return false;
  return true;
}

std::string edge_list_json(const Graph& g, const std::vector<std::string>& labels) {
  if (!labels.empty() && labels.size() != g.order()) throw std::invalid_argument("one label per vertex required");
  nlohmann::json j;
  j["vertices"] = g.order();
  j["labels"] = labels;
  auto edges = nlohmann::json::array();
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = a + 1; b < g.order(); ++b)
      if (g.adjacent(a, b)) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j.dump();
}

std::string adjacency_text(const Graph& g) {
  std::string out;
  out.reserve(g.order() * (g.order() + 1));
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) out.push_back(g.adjacent(a, b) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

}  // namespace hermlab::graphs

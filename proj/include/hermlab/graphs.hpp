#pragma once

// Simple graphs on at most a few thousand vertices as packed bit rows, with
// strongly-regular parameter verification and plain-text exports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hermlab/projgeo.hpp"

namespace hermlab::graphs {

class Graph {
 public:
  explicit Graph(std::size_t v);

  std::size_t order() const { return v_; }
  std::size_t words() const { return w_; }

  void add_edge(std::size_t a, std::size_t b);
  bool adjacent(std::size_t a, std::size_t b) const {
    return (bits_[a * w_ + b / 64] >> (b % 64)) & 1u;
  }
  const std::uint64_t* row(std::size_t a) const { return bits_.data() + a * w_; }
  std::size_t degree(std::size_t a) const;
  std::size_t common_neighbours(std::size_t a, std::size_t b) const;
  std::size_t edge_count() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t v_;
  std::size_t w_;
  std::vector<std::uint64_t> bits_;
};

struct SrgParams {
  std::uint64_t v = 0, k = 0, lambda = 0, mu = 0;
  bool feasible() const { return k * (k - lambda - 1) == (v - k - 1) * mu; }
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Outcome of srg_params. `params` is set for a strongly regular graph;
/// degenerate graphs (complete or edgeless) have no mu or lambda and are
/// reported through `degenerate`. A violating pair is recorded otherwise.
struct SrgReport {
  std::optional<SrgParams> params;
  bool degenerate = false;
  std::uint64_t v = 0, k = 0;
  std::optional<std::uint64_t> lambda, mu;
  std::string violation;  // empty unless not strongly regular
};

SrgReport srg_params(const Graph& g, unsigned jobs = 1);

/// Parameters ((q^3+1)(q^2+1), q^5, q(q-1)(q^3+q^2-1), q^3(q^2-1)).
SrgParams point_curve_formula(std::uint64_t q);
/// GQ(q^2, q) point graph: ((q^3+1)(q^2+1), q^2(q+1), q^2-1, q+1).
SrgParams collinearity_formula(std::uint64_t q);

/// Union of cliques on the given vertex sets. Each member must be found in
/// `points`; throws std::invalid_argument otherwise.
Graph clique_union(const std::vector<projgeo::ProjPoint>& points,
                   const std::vector<std::vector<projgeo::ProjPoint>>& blocks);

Graph complement(const Graph& g);
bool is_complete(const Graph& g);

/// {"vertices": v, "labels": [...], "edges": [[a,b],...]} with a < b, sorted.
std::string edge_list_json(const Graph& g, const std::vector<std::string>& labels = {});
/// One row of 0/1 characters per vertex.
std::string adjacency_text(const Graph& g);

}  // namespace hermlab::graphs

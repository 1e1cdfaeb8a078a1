#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "opact/rng.hpp"

namespace opact {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Undirected simple graph, immutable once built. Adjacency lists are kept
/// sorted so neighbor iteration runs in ascending index order.
class Graph {
 public:
  /// Builds from an edge list; throws ConfigError on self-loops, duplicates,
  /// or endpoints out of range.
  Graph(std::size_t node_count, std::span<const Edge> edges);
  explicit Graph(std::size_t node_count) : Graph(node_count, {}) {}

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool has_edge(NodeId u, NodeId v) const;
  std::span<const NodeId> neighbors(NodeId u) const { return adjacency_.at(u); }
  std::size_t degree(NodeId u) const { return adjacency_.at(u).size(); }
  std::size_t max_degree() const noexcept;
  bool is_complete() const noexcept;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  std::size_t component_count() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

Graph complete_graph(std::size_t n);

/// Ring lattice with k/2 neighbors per side, each lattice edge rewired at its
/// far endpoint with probability p. Edge count is always n*k/2.
Graph watts_strogatz(std::size_t n, std::size_t k, double p, Rng& rng);

/// Preferential attachment grown from K_{m0}, m distinct targets per new node.
Graph barabasi_albert(std::size_t n, std::size_t m0, std::size_t m, Rng& rng);

/// Text format: node count on the first line, then one "u v" line per edge
/// with u < v.
void write_edge_list(const Graph& g, std::ostream& out);
Graph read_edge_list(std::istream& in);

}  // namespace opact

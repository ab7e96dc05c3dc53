#pragma once

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "glauber/subset.hpp"

namespace glauber {

struct Edge {
  std::size_t u;
  std::size_t v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable simple graph. Edge indices follow construction order.
class Graph {
 public:
  struct Incidence {
    std::size_t neighbor;
    std::size_t edge;
  };

  Graph() = default;
  /// Throws ParseError on self-loops, parallel edges or endpoints >= n.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  std::span<const Incidence> incident(std::size_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }
  bool adjacent(std::size_t u, std::size_t v) const;

  Subset empty_edges() const { return Subset(Kind::Edge, m()); }
  Subset empty_vertices() const { return Subset(Kind::Vertex, n()); }
  Subset all_edges() const { return Subset::full(Kind::Edge, m()); }
  Subset all_vertices() const { return Subset::full(Kind::Vertex, n()); }
  /// Size of the ground set for subsets of the given kind.
  std::size_t universe(Kind kind) const noexcept { return kind == Kind::Edge ? m() : n(); }

  /// Edge-list text: "n m" followed by m lines "u v".
  std::string to_text() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// (v1, k, v2) partitions the vertex set and no edge joins v1 to v2.
struct Separation {
  Subset v1;
  Subset k;
  Subset v2;
};

bool is_separation(const Graph& g, const Separation& sep);

Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
Graph load_graph(const std::string& path);

std::size_t components_count(const Graph& g, const Subset& s);
/// Entry i-1 counts components of (V,S) with exactly i vertices, i = 1..n.
std::vector<std::size_t> component_size_profile(const Graph& g, const Subset& s);
std::size_t incidence_rank(const Graph& g, const Subset& s);
std::size_t adjacency_rank_edges(const Graph& g, const Subset& s);
std::size_t adjacency_rank_induced(const Graph& g, const Subset& s);
/// Vertices of s reindexed in ascending original order.
Graph induced_subgraph(const Graph& g, const Subset& s);

/// Edges of g selected by an edge subset, in index order.
std::vector<Edge> selected_edges(const Graph& g, const Subset& s);

// Kernels over an explicit vertex count and edge list. Vertices are 0..n-1.
namespace kernels {

std::size_t components(std::size_t n, std::span<const Edge> edges);
std::vector<std::size_t> size_profile(std::size_t n, std::span<const Edge> edges);
std::size_t incidence_rank(std::size_t n, std::span<const Edge> edges);
std::size_t adjacency_rank(std::size_t n, std::span<const Edge> edges);

}  // namespace kernels

}  // namespace glauber

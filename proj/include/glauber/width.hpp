#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "glauber/graph.hpp"
#include "glauber/subset.hpp"

namespace glauber {

/// A permutation of the edges or vertices, listed first to last, with its width.
struct Ordering {
  Kind kind = Kind::Edge;
  std::vector<std::size_t> perm;
  std::size_t width = 0;
};

/// Max over prefixes of the number of vertices touched by both the prefix and the remaining edges.
std::size_t linear_width_of_ordering(const Graph& g, const std::vector<std::size_t>& perm);
/// Max over prefixes of the number of prefix vertices adjacent to a vertex outside the prefix.
std::size_t vertex_separation_of_ordering(const Graph& g, const std::vector<std::size_t>& perm);

/// Builds an Ordering from a permutation, computing its width; throws if perm is not a permutation.
Ordering make_ordering(const Graph& g, Kind kind, std::vector<std::size_t> perm);
Ordering identity_ordering(const Graph& g, Kind kind);

/// Exact minimum-width orderings by dynamic programming over prefix sets (2^size states).
/// Ties resolve to the lexicographically smallest choice at each position.
Ordering optimal_edge_ordering(const Graph& g, unsigned max_elements = 16);
Ordering optimal_vertex_ordering(const Graph& g, unsigned max_elements = 16);
Ordering optimal_ordering(const Graph& g, Kind kind, unsigned max_elements = 16);

/// Repeatedly appends the element whose addition leaves the smallest boundary; ties by lowest index.
Ordering greedy_ordering(const Graph& g, Kind kind);

/// One index per line; blank lines are ignored.
Ordering parse_ordering(const Graph& g, Kind kind, const std::string& text);
Ordering load_ordering(const Graph& g, Kind kind, const std::string& path);

}  // namespace glauber

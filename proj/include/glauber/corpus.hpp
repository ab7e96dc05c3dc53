#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "glauber/graph.hpp"
#include "glauber/weight_model.hpp"

namespace glauber {

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph empty_graph(std::size_t n);

/// Every connected graph on vertices 0..n-1. Edges are listed in lexicographic pair order.
std::vector<Graph> connected_labeled_graphs(std::size_t n);

/// One representative per isomorphism class on exactly n vertices (n <= 8).
std::vector<Graph> graphs_up_to_isomorphism(std::size_t n);

struct CorpusGraph {
  std::string name;
  Graph graph;
};

/// All labeled connected graphs with n <= 5, paths and stars up to 8 edges, cycles C3..C8, and K4.
std::vector<CorpusGraph> default_corpus();

/// Two parameter points per family; per-edge and per-size vectors are sized to g.
std::vector<WeightModel> default_model_matrix(const Graph& g);

}  // namespace glauber

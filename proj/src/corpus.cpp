#include "glauber/corpus.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

namespace glauber {

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycles need at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, std::move(edges));
}

Graph empty_graph(std::size_t n) { return Graph(n, {}); }

namespace {

std::vector<Edge> all_pairs(std::size_t n) { return complete_graph(n).edges(); }

Graph from_pair_mask(std::size_t n, const std::vector<Edge>& pairs, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if ((mask >> i) & 1u) edges.push_back(pairs[i]);
  return Graph(n, std::move(edges));
}

bool connected(const Graph& g) { return g.n() <= 1 || kernels::components(g.n(), g.edges()) == 1; }

// Minimum pair-mask code over vertex relabelings that list vertices by non-increasing degree.
std::uint64_t canonical_code(std::size_t n, const std::vector<std::uint64_t>& adj) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = std::popcount(adj[v]);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    bool sorted = true;
    for (std::size_t p = 0; p + 1 < n && sorted; ++p) sorted = degree[perm[p]] >= degree[perm[p + 1]];
    if (!sorted) continue;
    std::uint64_t code = 0;
    std::size_t bit = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q, ++bit)
        if ((adj[perm[p]] >> perm[q]) & 1u) code |= std::uint64_t{1} << bit;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Graph> connected_labeled_graphs(std::size_t n) {
  const auto pairs = all_pairs(n);
  if (pairs.size() > 20) throw std::invalid_argument("connected_labeled_graphs supports n <= 6");
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g = from_pair_mask(n, pairs, mask);
    if (connected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> graphs_up_to_isomorphism(std::size_t n) {
  if (n > 8) throw std::invalid_argument("graphs_up_to_isomorphism supports n <= 8");
  // Grow representatives one vertex at a time, attaching the new vertex to every neighbour set.
  std::set<std::uint64_t> codes{0};
  for (std::size_t size = 1; size <= n; ++size) {
    std::set<std::uint64_t> grown;
    for (auto code : codes) {
      std::vector<std::uint64_t> adj(size, 0);
      std::size_t bit = 0;
      for (std::size_t p = 0; p + 1 < size; ++p)
        for (std::size_t q = p + 1; q + 1 < size; ++q, ++bit)
          if ((code >> bit) & 1u) {
            adj[p] |= std::uint64_t{1} << q;
            adj[q] |= std::uint64_t{1} << p;
          }
      const std::size_t fresh = size - 1;
      for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << fresh); ++nbrs) {
        auto extended = adj;
        extended[fresh] = nbrs;
        for (std::size_t v = 0; v < fresh; ++v)
          if ((nbrs >> v) & 1u) extended[v] |= std::uint64_t{1} << fresh;
        grown.insert(canonical_code(size, extended));
      }
    }
    codes = std::move(grown);
  }
  const auto pairs = all_pairs(n);
  std::vector<Graph> out;
  for (auto code : codes) out.push_back(from_pair_mask(n, pairs, code));
  return out;
}

std::vector<CorpusGraph> default_corpus() {
  std::vector<CorpusGraph> corpus;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t index = 0;
    for (auto& g : connected_labeled_graphs(n))
      corpus.push_back({"labeled_n" + std::to_string(n) + "_" + std::to_string(index++), std::move(g)});
  }
  for (std::size_t n = 2; n <= 9; ++n) corpus.push_back({"P" + std::to_string(n), path_graph(n)});
  for (std::size_t n = 3; n <= 8; ++n) corpus.push_back({"C" + std::to_string(n), cycle_graph(n)});
  corpus.push_back({"K4", complete_graph(4)});
  for (std::size_t k = 1; k <= 8; ++k) corpus.push_back({"S" + std::to_string(k), star_graph(k)});
  return corpus;
}

std::vector<WeightModel> default_model_matrix(const Graph& g) {
  std::vector<double> v_a(g.m()), v_b(g.m()), x_a(g.n()), x_b(g.n());
  for (std::size_t e = 0; e < g.m(); ++e) {
    v_a[e] = 0.5 + 0.5 * static_cast<double>(e % 3);
    v_b[e] = 2.0 / (1.0 + static_cast<double>(e % 2));
  }
  for (std::size_t i = 0; i < g.n(); ++i) {
    x_a[i] = 1.0 + 0.25 * static_cast<double>(i % 3);
    x_b[i] = 1.0 / (1.0 + 0.5 * static_cast<double>(i % 2));
  }
  return {
      make_rc(2.0, 1.0),          make_rc(0.5, 3.0),
      make_tutte(3.0, 2.0),       make_tutte(1.5, 4.0),
      make_r2(2.0, 0.5),          make_r2(0.7, 2.0),
      make_multi_tutte(1.5, v_a), make_multi_tutte(0.6, v_b),
      make_upoly(2.5, x_a),       make_upoly(1.5, x_b),
      make_interlace(2.0, 3.0),   make_interlace(4.0, 1.5),
  };
}

}  // namespace glauber

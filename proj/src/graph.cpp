#include "glauber/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "glauber/errors.hpp"
#include "glauber/gf2.hpp"

namespace glauber {

namespace {

using Reason = ParseError::Reason;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  std::size_t size_of_root(std::size_t r) const { return size_[r]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

void check_kind(const Subset& s, Kind kind, std::size_t universe, const char* op) {
  if (s.kind() != kind || s.universe() != universe)
    throw std::invalid_argument(std::string(op) + ": expected a " + to_string(kind) + " subset over " +
                                std::to_string(universe) + " elements");
}

bool parse_line_numbers(const std::string& line, std::vector<long long>& out) {
  out.clear();
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
      return false;
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      return false;
    }
  }
  return true;
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adjacency_(n) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    if (u >= n_ || v >= n_)
      throw ParseError(Reason::IndexOutOfRange, e + 2, "endpoint out of range in edge " + std::to_string(e));
    if (u == v) throw ParseError(Reason::SelfLoop, e + 2, "self-loop at vertex " + std::to_string(u));
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
      throw ParseError(Reason::DuplicateEdge, e + 2,
                       "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    adjacency_[u].push_back({v, e});
    adjacency_[v].push_back({u, e});
  }
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  for (const auto& inc : incident(u))
    if (inc.neighbor == v) return true;
  return false;
}

std::string Graph::to_text() const {
  std::ostringstream out;
  out << n_ << ' ' << edges_.size() << '\n';
  for (const auto& e : edges_) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

bool is_separation(const Graph& g, const Separation& sep) {
  const std::size_t n = g.n();
  for (const auto* part : {&sep.v1, &sep.k, &sep.v2})
    if (part->kind() != Kind::Vertex || part->universe() != n) return false;
  if (!(sep.v1 & sep.k).empty() || !(sep.v1 & sep.v2).empty() || !(sep.k & sep.v2).empty()) return false;
  if ((sep.v1 | sep.k | sep.v2).count() != n) return false;
  for (const auto& [u, v] : g.edges())
    if ((sep.v1.contains(u) && sep.v2.contains(v)) || (sep.v2.contains(u) && sep.v1.contains(v))) return false;
  return true;
}

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<long long> nums;

  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_content_line()) throw ParseError(Reason::Malformed, line_no + 1, "missing header \"n m\"");
  if (!parse_line_numbers(line, nums) || nums.size() != 2)
    throw ParseError(Reason::Malformed, line_no, "header must be two nonnegative integers \"n m\"");
  const auto n = static_cast<std::size_t>(nums[0]);
  const auto m = static_cast<std::size_t>(nums[1]);

  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < m; ++e) {
    if (!next_content_line())
      throw ParseError(Reason::Malformed, line_no + 1,
                       "expected " + std::to_string(m) + " edges, found " + std::to_string(e));
    if (!parse_line_numbers(line, nums) || nums.size() != 2)
      throw ParseError(Reason::Malformed, line_no, "edge line must be two nonnegative integers \"u v\"");
    const auto u = static_cast<std::size_t>(nums[0]);
    const auto v = static_cast<std::size_t>(nums[1]);
    if (u >= n || v >= n) throw ParseError(Reason::IndexOutOfRange, line_no, "vertex index out of range");
    if (u == v) throw ParseError(Reason::SelfLoop, line_no, "self-loop at vertex " + std::to_string(u));
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
      throw ParseError(Reason::DuplicateEdge, line_no,
                       "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    edges.push_back({u, v});
  }
  if (next_content_line()) throw ParseError(Reason::Malformed, line_no, "trailing content after edge list");
  return Graph(n, std::move(edges));
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file: " + path);
  return parse_graph(in);
}

std::vector<Edge> selected_edges(const Graph& g, const Subset& s) {
  check_kind(s, Kind::Edge, g.m(), "selected_edges");
  std::vector<Edge> out;
  for (auto e : s.indices()) out.push_back(g.edge(e));
  return out;
}

namespace kernels {

std::size_t components(std::size_t n, std::span<const Edge> edges) {
  UnionFind uf(n);
  std::size_t merges = 0;
  for (const auto& [u, v] : edges) merges += uf.unite(u, v);
  return n - merges;
}

std::vector<std::size_t> size_profile(std::size_t n, std::span<const Edge> edges) {
  UnionFind uf(n);
  for (const auto& [u, v] : edges) uf.unite(u, v);
  std::vector<std::size_t> profile(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (uf.find(v) == v) ++profile[uf.size_of_root(v) - 1];
  return profile;
}

std::size_t incidence_rank(std::size_t n, std::span<const Edge> edges) {
  // Columns of the incidence matrix are the vectors e_u + e_v; eliminate them as rows.
  if (n <= 64) {
    std::vector<std::uint64_t> rows;
    rows.reserve(edges.size());
    for (const auto& [u, v] : edges) rows.push_back((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
    return gf2::rank_of_words(rows);
  }
  gf2::BitMatrix m(edges.size(), n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    m.set(i, edges[i].u);
    m.set(i, edges[i].v);
  }
  return m.rank();
}

std::size_t adjacency_rank(std::size_t n, std::span<const Edge> edges) {
  if (n <= 64) {
    std::vector<std::uint64_t> rows(n, 0);
    for (const auto& [u, v] : edges) {
      rows[u] |= std::uint64_t{1} << v;
      rows[v] |= std::uint64_t{1} << u;
    }
    return gf2::rank_of_words(rows);
  }
  gf2::BitMatrix m(n, n);
  for (const auto& [u, v] : edges) {
    m.set(u, v);
    m.set(v, u);
  }
  return m.rank();
}

}  // namespace kernels

std::size_t components_count(const Graph& g, const Subset& s) {
  const auto edges = selected_edges(g, s);
  return kernels::components(g.n(), edges);
}

std::vector<std::size_t> component_size_profile(const Graph& g, const Subset& s) {
  const auto edges = selected_edges(g, s);
  return kernels::size_profile(g.n(), edges);
}

std::size_t incidence_rank(const Graph& g, const Subset& s) {
  const auto edges = selected_edges(g, s);
  return kernels::incidence_rank(g.n(), edges);
}

std::size_t adjacency_rank_edges(const Graph& g, const Subset& s) {
  const auto edges = selected_edges(g, s);
  return kernels::adjacency_rank(g.n(), edges);
}

std::size_t adjacency_rank_induced(const Graph& g, const Subset& s) {
  const Graph h = induced_subgraph(g, s);
  return kernels::adjacency_rank(h.n(), h.edges());
}

Graph induced_subgraph(const Graph& g, const Subset& s) {
  check_kind(s, Kind::Vertex, g.n(), "induced_subgraph");
  constexpr auto absent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> relabel(g.n(), absent);
  std::size_t next = 0;
  for (auto v : s.indices()) relabel[v] = next++;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (relabel[u] != absent && relabel[v] != absent) edges.push_back({relabel[u], relabel[v]});
  return Graph(next, std::move(edges));
}

}  // namespace glauber

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "glauber/corpus.hpp"
#include "glauber/errors.hpp"
#include "glauber/graph.hpp"
#include "oracle.hpp"

using namespace glauber;

namespace {

Subset edges_of(const Graph& g, std::uint64_t mask) { return Subset::from_mask(Kind::Edge, g.m(), mask); }

ParseError::Reason parse_failure(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.reason();
  }
  FAIL("expected a parse error for: " << text);
  return ParseError::Reason::Malformed;
}

std::vector<Graph> small_graphs() {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto& g : connected_labeled_graphs(n)) out.push_back(g);
  out.push_back(complete_graph(5));
  out.push_back(Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}));  // prism
  out.push_back(Graph(7, {{0, 1}, {2, 3}, {4, 5}}));
  out.push_back(empty_graph(3));
  return out;
}

}  // namespace

TEST_CASE("parse_graph accepts the documented examples") {
  auto k2 = parse_graph("2 1\n0 1");
  CHECK(k2.n() == 2);
  CHECK(k2.m() == 1);
  CHECK(k2.edge(0) == Edge{0, 1});

  auto c3 = parse_graph("3 3\n0 1\n1 2\n0 2");
  CHECK(c3.n() == 3);
  CHECK(c3.m() == 3);
  CHECK(c3.edge(2) == Edge{0, 2});
  for (std::size_t v = 0; v < 3; ++v) CHECK(c3.degree(v) == 2);

  auto blank = parse_graph("\n3 2\n\n0 1\n\n1 2\n\n");
  CHECK(blank.m() == 2);
  CHECK(parse_graph(blank.to_text()).edges() == blank.edges());
}

TEST_CASE("parse_graph reports each failure kind distinctly") {
  CHECK(parse_failure("2 1\n0 0") == ParseError::Reason::SelfLoop);
  CHECK(parse_failure("3 2\n0 1\n1 0") == ParseError::Reason::DuplicateEdge);
  CHECK(parse_failure("3 2\n0 1\n0 1") == ParseError::Reason::DuplicateEdge);
  CHECK(parse_failure("2 1\n0 2") == ParseError::Reason::IndexOutOfRange);
  CHECK(parse_failure("2 1\n0 x") == ParseError::Reason::Malformed);
  CHECK(parse_failure("2 2\n0 1") == ParseError::Reason::Malformed);
  CHECK(parse_failure("2 1\n0 1\n1 0") == ParseError::Reason::Malformed);
  CHECK(parse_failure("") == ParseError::Reason::Malformed);
  CHECK(parse_failure("2 1\n0 1 5") == ParseError::Reason::Malformed);
  CHECK(parse_failure("2 1\n-1 1") == ParseError::Reason::Malformed);

  try {
    parse_graph("3 3\n0 1\n1 2\n2 1");
    FAIL("duplicate accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("component counts, profiles and ranks on small reference graphs") {
  auto c3 = cycle_graph(3);
  auto p4 = path_graph(4);
  auto k2 = complete_graph(2);

  CHECK(components_count(empty_graph(5), Subset(Kind::Edge, 0)) == 5);
  CHECK(components_count(complete_graph(5), complete_graph(5).empty_edges()) == 5);
  CHECK(components_count(c3, c3.all_edges()) == 1);
  CHECK(components_count(p4, edges_of(p4, 0b010)) == 3);

  CHECK(component_size_profile(path_graph(4), p4.empty_edges()) == std::vector<std::size_t>{4, 0, 0, 0});
  CHECK(component_size_profile(p4, edges_of(p4, 0b001)) == std::vector<std::size_t>{2, 1, 0, 0});
  CHECK(component_size_profile(c3, c3.all_edges()) == std::vector<std::size_t>{0, 0, 1});

  CHECK(incidence_rank(c3, c3.empty_edges()) == 0);
  CHECK(incidence_rank(k2, k2.all_edges()) == 1);
  CHECK(incidence_rank(c3, c3.all_edges()) == 2);

  CHECK(adjacency_rank_edges(c3, c3.empty_edges()) == 0);
  CHECK(adjacency_rank_edges(k2, k2.all_edges()) == 2);
  CHECK(adjacency_rank_edges(c3, c3.all_edges()) == 2);

  CHECK(adjacency_rank_induced(c3, c3.empty_vertices()) == 0);
  CHECK(adjacency_rank_induced(k2, Subset::from_indices(Kind::Vertex, 2, {0})) == 0);
  CHECK(adjacency_rank_induced(c3, c3.all_vertices()) == 2);
}

TEST_CASE("induced_subgraph reindexes ascending") {
  auto c3 = cycle_graph(3);
  auto none = induced_subgraph(c3, c3.empty_vertices());
  CHECK(none.n() == 0);
  CHECK(none.m() == 0);

  auto pair = induced_subgraph(c3, Subset::from_indices(Kind::Vertex, 3, {0, 1}));
  CHECK(pair.n() == 2);
  CHECK(pair.edges() == std::vector<Edge>{{0, 1}});

  auto p4 = path_graph(4);
  auto sub = induced_subgraph(p4, Subset::from_indices(Kind::Vertex, 4, {0, 2, 3}));
  CHECK(sub.n() == 3);
  CHECK(sub.edges() == std::vector<Edge>{{1, 2}});
}

TEST_CASE("kernels agree with the naive oracles on every edge subset") {
  for (const auto& g : small_graphs()) {
    CAPTURE(g.to_text());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()); ++mask) {
      const auto s = edges_of(g, mask);
      const auto picked = oracle::pick(g, mask);
      const auto kappa = components_count(g, s);
      CHECK(kappa == oracle::components(g.n(), picked));
      CHECK(component_size_profile(g, s) == oracle::size_profile(g.n(), picked));
      CHECK(incidence_rank(g, s) == oracle::incidence_rank(g.n(), picked));
      CHECK(incidence_rank(g, s) == g.n() - kappa);
      const auto r2 = adjacency_rank_edges(g, s);
      CHECK(r2 == oracle::adjacency_rank(g.n(), picked));
      CHECK(r2 % 2 == 0);

      std::size_t weighted = 0;
      const auto prof = component_size_profile(g, s);
      for (std::size_t i = 0; i < prof.size(); ++i) weighted += (i + 1) * prof[i];
      CHECK(weighted == g.n());

      for (std::size_t e = 0; e < g.m(); ++e) {
        if (s.contains(e)) continue;
        const auto after = components_count(g, s.flipped(e));
        CHECK(after <= kappa);
        CHECK(kappa - after <= 1);
      }
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n()); ++mask) {
      const auto r = adjacency_rank_induced(g, Subset::from_mask(Kind::Vertex, g.n(), mask));
      CHECK(r % 2 == 0);
      const auto sub = induced_subgraph(g, Subset::from_mask(Kind::Vertex, g.n(), mask));
      CHECK(r == oracle::adjacency_rank(sub.n(), sub.edges()));
    }
  }
}

TEST_CASE("ranks and component counts are invariant under vertex relabeling") {
  std::mt19937_64 gen(2024);
  for (const auto& g : small_graphs()) {
    std::vector<std::size_t> relabel(g.n());
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), gen);
    std::vector<Edge> moved;
    for (auto [u, v] : g.edges()) moved.push_back({relabel[u], relabel[v]});
    const Graph h(g.n(), moved);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()); ++mask) {
      const auto a = edges_of(g, mask), b = edges_of(h, mask);
      CHECK(components_count(g, a) == components_count(h, b));
      CHECK(incidence_rank(g, a) == incidence_rank(h, b));
      CHECK(adjacency_rank_edges(g, a) == adjacency_rank_edges(h, b));
      CHECK(component_size_profile(g, a) == component_size_profile(h, b));
    }
  }
}

TEST_CASE("ranks on graphs wider than one machine word") {
  const auto big = cycle_graph(70);
  CHECK(incidence_rank(big, big.all_edges()) == 69);
  CHECK(components_count(big, big.all_edges()) == 1);
  CHECK(adjacency_rank_edges(big, big.all_edges()) == oracle::adjacency_rank(70, big.edges()));
  const auto path = path_graph(80);
  CHECK(adjacency_rank_edges(path, path.all_edges()) == 80);
}

TEST_CASE("subset semantics") {
  auto s = Subset::from_indices(Kind::Edge, 10, {0, 3, 9});
  CHECK(s.count() == 3);
  CHECK(s.to_hex() == "209");
  CHECK(Subset::from_hex(Kind::Edge, 10, "209") == s);
  CHECK(s.flipped(3).count() == 2);
  CHECK((s ^ s.flipped(5)).indices() == std::vector<std::size_t>{5});
  CHECK_THROWS(Subset::from_hex(Kind::Edge, 3, "f"));
  CHECK_THROWS(s.flipped(10));

  const auto c3 = cycle_graph(3);
  CHECK(is_separation(path_graph(3), {Subset::from_indices(Kind::Vertex, 3, {0}), Subset::from_indices(Kind::Vertex, 3, {1}),
                                      Subset::from_indices(Kind::Vertex, 3, {2})}));
  CHECK_FALSE(is_separation(c3, {Subset::from_indices(Kind::Vertex, 3, {0}), Subset::from_indices(Kind::Vertex, 3, {1}),
                                 Subset::from_indices(Kind::Vertex, 3, {2})}));
}

TEST_CASE("isomorphism-class enumeration matches known counts") {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156};
  for (std::size_t n = 0; n <= 6; ++n) CHECK(graphs_up_to_isomorphism(n).size() == expected[n]);
  CHECK(connected_labeled_graphs(4).size() == 38);
  CHECK(connected_labeled_graphs(5).size() == 728);
}

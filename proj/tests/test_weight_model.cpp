#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "glauber/corpus.hpp"
#include "glauber/errors.hpp"
#include "glauber/weight_model.hpp"
#include "oracle.hpp"

using namespace glauber;
using doctest::Approx;

namespace {

Subset state(const WeightModel& model, const Graph& g, std::uint64_t mask) {
  return Subset::from_mask(model.kind(), g.universe(model.kind()), mask);
}

std::vector<Graph> test_graphs() {
  std::vector<Graph> out{path_graph(2), path_graph(4), cycle_graph(3), cycle_graph(5), complete_graph(4),
                         star_graph(4), Graph(5, {{0, 1}, {2, 3}}), empty_graph(2)};
  out.push_back(Graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}));  // bowtie
  return out;
}

}  // namespace

TEST_CASE("log_weight on small reference graphs") {
  const auto c3 = cycle_graph(3);
  const auto k2 = complete_graph(2);
  CHECK(log_weight(make_rc(2, 1), c3, c3.empty_edges()) == Approx(std::log(8.0)));
  CHECK(log_weight(make_tutte(3, 2), c3, c3.empty_edges()) == Approx(std::log(4.0)));
  CHECK(log_weight(make_interlace(2, 3), k2, k2.all_vertices()) == Approx(0.0));
  CHECK(log_weight_ratio(make_rc(2, 1), k2, k2.empty_edges(), 0) == Approx(-std::log(2.0)));
  CHECK(log_weight_ratio(make_multi_tutte(1, {3}), k2, k2.empty_edges(), 0) == Approx(std::log(3.0)));
}

TEST_CASE("lambda values") {
  CHECK(make_rc(2, 7).lambda() == 2);
  CHECK(make_rc(2, 7).lambda_hat() == 2);
  CHECK(make_tutte(3, 2).lambda() == Approx(2));
  CHECK(make_rc(1, 5).lambda() == 1);
  CHECK(make_rc(1, 5).lambda_hat() == 1);
  CHECK(make_rc(0.25, 1).lambda_hat() == Approx(4));
  CHECK(make_r2(3, 1).lambda() == Approx(9));
  CHECK(make_multi_tutte(1.5, {1, 2}).lambda() == Approx(1.5));
  // y' = max(1.5, 1/1.5), x' = max over x_i of max(x_i, 1/x_i) = 4
  CHECK(make_upoly(2.5, {1, 0.25, 2}).lambda() == Approx(1.5 * 64));
  CHECK(make_interlace(2, 3).lambda() == Approx(0.25));
  CHECK(make_interlace(2, 3).lambda_hat() == Approx(4));
  CHECK(lambda_of(make_tutte(5, 1.5)) == Approx(2));
}

TEST_CASE("exact partition functions by hand enumeration") {
  CHECK(exact_partition_log(make_rc(2, 1), cycle_graph(3)) == Approx(std::log(28.0)));
  CHECK(exact_partition_log(make_r2(2, 1), complete_graph(2)) == Approx(std::log(5.0)));
  CHECK(exact_partition_log(make_interlace(2, 3), complete_graph(2)) == Approx(std::log(13.0)));
  CHECK(exact_partition_log(make_rc(2, 1), empty_graph(1)) == Approx(std::log(2.0)));
  // T(C3; 3, 2) = x^2 + x + y = 14
  CHECK(exact_partition_log(make_tutte(3, 2), cycle_graph(3)) == Approx(std::log(14.0)));
  CHECK_THROWS_AS(exact_partition_log(make_rc(2, 1), complete_graph(8), 24), CapExceeded);
}

TEST_CASE("every model agrees with the direct weight oracle on every state") {
  for (const auto& g : test_graphs()) {
    for (const auto& model : default_model_matrix(g)) {
      CAPTURE(g.to_text());
      CAPTURE(model.name());
      const std::size_t u = g.universe(model.kind());
      double z = 0;
      const auto all = all_log_weights(model, g);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u); ++mask) {
        const double w = oracle::weight(model, g, mask);
        const double lw = log_weight(model, g, state(model, g, mask));
        CHECK(std::isfinite(lw));
        CHECK(lw == Approx(std::log(w)).epsilon(1e-12));
        CHECK(all[mask] == lw);
        z += w;
      }
      CHECK(exact_partition_log(model, g) == Approx(std::log(z)).epsilon(1e-12));
    }
  }
}

TEST_CASE("ratios are antisymmetric and match differences of weights") {
  for (const auto& g : test_graphs()) {
    for (const auto& model : default_model_matrix(g)) {
      const std::size_t u = g.universe(model.kind());
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u); ++mask) {
        const auto s = state(model, g, mask);
        for (std::size_t e = 0; e < u; ++e) {
          const double r = log_weight_ratio(model, g, s, e);
          CHECK(r == -log_weight_ratio(model, g, s.flipped(e), e));
          CHECK(std::abs(r - (log_weight(model, g, s.flipped(e)) - log_weight(model, g, s))) <= 1e-12);
        }
      }
      if (u > 0) CHECK_THROWS(log_weight_ratio(model, g, state(model, g, 0), u));
    }
  }
}

TEST_CASE("random cluster and Tutte are related by the standard transformation") {
  for (const auto& g : test_graphs()) {
    if (g.m() > 10) continue;
    const double kappa_e = static_cast<double>(oracle::components(g.n(), g.edges()));
    const double r_e = static_cast<double>(g.n()) - kappa_e;
    for (auto [q, mu] : {std::pair{2.0, 1.0}, {0.5, 3.0}, {3.0, 0.7}}) {
      const double lhs = exact_partition_log(make_rc(q, mu), g);
      const double rhs = kappa_e * std::log(q) + r_e * std::log(mu) + exact_partition_log(make_tutte(1 + q / mu, 1 + mu), g);
      CHECK(std::abs(std::exp(lhs - rhs) - 1) <= 1e-9);
    }
  }
}

TEST_CASE("family specialisations") {
  for (const auto& g : test_graphs()) {
    const auto rc = make_rc(1.7, 0.6);
    const auto mt = make_multi_tutte(1.7, std::vector<double>(g.m(), 0.6));
    std::vector<double> ones(g.n(), 1.0);
    const auto up = make_upoly(2.5, ones);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()); ++mask) {
      const auto s = Subset::from_mask(Kind::Edge, g.m(), mask);
      CHECK(std::abs(log_weight(rc, g, s) - log_weight(mt, g, s)) <= 1e-12);
      const double nullity = static_cast<double>(s.count()) - static_cast<double>(incidence_rank(g, s));
      CHECK(log_weight(up, g, s) == nullity * std::log(1.5));
    }
  }
}

TEST_CASE("invalid parameters and mismatched inputs are rejected") {
  CHECK_THROWS_AS(make_rc(0, 1), ModelError);
  CHECK_THROWS_AS(make_rc(1, -1), ModelError);
  CHECK_THROWS_AS(make_tutte(1, 2), ModelError);
  CHECK_THROWS_AS(make_tutte(2, 0.5), ModelError);
  CHECK_THROWS_AS(make_r2(-2, 1), ModelError);
  CHECK_THROWS_AS(make_multi_tutte(1, {1, 0}), ModelError);
  CHECK_THROWS_AS(make_upoly(1, {1}), ModelError);
  CHECK_THROWS_AS(make_upoly(2, {1, -1}), ModelError);
  CHECK_THROWS_AS(make_interlace(2, 1), ModelError);
  CHECK_THROWS_AS(make_rc(std::nan(""), 1), ModelError);

  const auto p3 = path_graph(3);
  CHECK_THROWS_AS(log_weight(make_upoly(2, {1, 1}), p3, p3.empty_edges()), ModelError);
  CHECK_THROWS_AS(log_weight(make_multi_tutte(2, {1}), p3, p3.empty_edges()), ModelError);
  CHECK_THROWS(log_weight(make_rc(2, 1), p3, p3.empty_vertices()));
  CHECK_THROWS(log_weight(make_interlace(2, 3), p3, p3.empty_edges()));
  CHECK(make_interlace(2, 3).kind() == Kind::Vertex);
  CHECK(make_upoly(2, {1}).kind() == Kind::Edge);
}

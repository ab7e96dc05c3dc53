#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "glauber/graph.hpp"
#include "glauber/subset.hpp"
#include "glauber/weight_model.hpp"
#include "glauber/width.hpp"

namespace glauber {

// ---------------------------------------------------------------------------
// Canonical paths and congestion
// ---------------------------------------------------------------------------

/// States H_0 = I, ..., H_k = F, flipping the elements of I xor F in ordering position.
struct CanonicalPath {
  std::vector<Subset> states;
  std::vector<std::size_t> flips;
  std::size_t length() const { return flips.size(); }
};

CanonicalPath canonical_path(const Ordering& o, const Subset& initial, const Subset& final);

struct Transition {
  Subset from;
  Subset to;
};

struct CongestionReport {
  double rho = 0.0;
  std::optional<Transition> argmax_transition;  // empty when the chain has no moves
  double bound = 0.0;                           // 2 size^2 lambda_hat^(4 width)
  std::size_t ordering_width = 0;
  std::size_t ground_size = 0;  // m for edge chains, n for vertex chains
  double lambda_hat = 1.0;
  bool pass = false;
};

/// Exact congestion of the canonical paths induced by o, maximised over non-loop transitions.
CongestionReport congestion(const WeightModel& model, const Graph& g, const Ordering& o,
                            unsigned max_log2_states = 10);

/// Bound 2 size^2 lambda_hat^(4 width).
double congestion_bound(std::size_t ground_size, double lambda_hat, std::size_t width);

struct LemmaReport {
  double log_max_ratio = 0.0;  // max of log[w(I)w(F) / (w(H)w(C))], C = I xor F xor H
  double log_bound = 0.0;      // 4 width log(lambda_hat)
  Subset initial, final, on_path;
  bool pass = false;           // log_max_ratio <= log_bound + 1e-9
};

LemmaReport lemma_ratio_max(const WeightModel& model, const Graph& g, const Ordering& o,
                            unsigned max_log2_states = 10);

// ---------------------------------------------------------------------------
// Multiplicativity
// ---------------------------------------------------------------------------

struct MultiplicativityOptions {
  unsigned max_vertices = 12;
  /// Also check every spanning (edge) or induced (vertex) subgraph of the base graph.
  bool include_subgraphs = true;
  /// Cap on the number of base-graph edges whose subsets are enumerated.
  unsigned max_subgraph_edges = 16;
  double tolerance = 1e-9;
};

struct MultiplicativityWitness {
  /// Edge kind: the spanning subgraph (V,S). Vertex kind: the induced subgraph's vertex set T.
  Subset subgraph;
  /// Over the base graph's vertices.
  Separation separation;
  /// Edge kind only: the E1 side of the appropriate partition.
  std::optional<Subset> e1;
  double log_ratio = 0.0;
};

struct MultiplicativityReport {
  double lambda = 1.0;
  double lambda_hat = 1.0;
  std::size_t checked = 0;
  /// max over cases of |log ratio| - |K| log(lambda_hat); -inf if nothing was checked.
  double max_excess = 0.0;
  std::optional<MultiplicativityWitness> witness;  // case attaining max_excess
  bool pass = true;
};

/// Log of w((V1+K, E1)) w((V2+K, E2)) / w((V,S)) for one separation of (V,S) and one E1.
/// E2 is S minus E1. Throws std::invalid_argument if the partition is not appropriate.
double edge_separation_log_ratio(const WeightModel& model, const Graph& g, const Subset& s,
                                 const Separation& sep, const Subset& e1);

/// Log of w(G[V1]) w(G[V2+K]) / w(G) on g itself.
double vertex_separation_log_ratio(const WeightModel& model, const Graph& g, const Separation& sep);

MultiplicativityReport check_edge_multiplicativity(const WeightModel& model, const Graph& g, double lambda,
                                                   const MultiplicativityOptions& options = {});
MultiplicativityReport check_vertex_multiplicativity(const WeightModel& model, const Graph& g, double lambda,
                                                     const MultiplicativityOptions& options = {});
/// Dispatches on the model kind.
MultiplicativityReport check_multiplicativity(const WeightModel& model, const Graph& g, double lambda,
                                              const MultiplicativityOptions& options = {});

// ---------------------------------------------------------------------------
// Stationary distribution and mixing
// ---------------------------------------------------------------------------

/// pi(S) proportional to the weight, indexed by bitmask.
std::vector<double> stationary_distribution(const WeightModel& model, const Graph& g,
                                            unsigned max_log2_states = 20);

/// Half the L1 distance. Throws std::invalid_argument on size mismatch or if either
/// input is not normalised within 1e-9.
double tv_distance(std::span<const double> a, std::span<const double> b);

/// Sparse exact transition matrix of a single-flip chain.
struct TransitionTable {
  std::size_t universe = 0;
  std::vector<double> log_weights;
  std::vector<double> move;  // move[h * universe + i] = P(h, h xor {i})
  std::vector<double> stay;  // P(h, h)

  std::size_t states() const { return log_weights.size(); }
  /// P(from, to) for state bitmasks.
  double probability(std::uint64_t from, std::uint64_t to) const;
};

TransitionTable transition_table(const WeightModel& model, const Graph& g, unsigned max_log2_states = 10);

struct MixingReport {
  std::size_t tau = 0;
  double epsilon = 0.0;
  double sinclair_bound = 0.0;  // rho (log(1/pi_min) + log(1/epsilon))
  double pi_min = 0.0;
  double rho = 0.0;
  bool pass = false;  // tau <= sinclair_bound
  /// Worst-start total variation distance at t = 0..tau.
  std::vector<double> tv_curve;
};

/// Smallest t with max over starts of ||P^t(H,.) - pi||_TV <= epsilon, by iterating all rows.
MixingReport exact_mixing_time(const WeightModel& model, const Graph& g, double epsilon,
                               const CongestionReport& congestion, unsigned max_log2_states = 10,
                               std::size_t max_steps = 1'000'000);

}  // namespace glauber

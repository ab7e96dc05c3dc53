#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "glauber/graph.hpp"
#include "glauber/subset.hpp"

namespace glauber {

namespace family {

/// q^kappa(S) mu^|S|
struct RandomCluster {
  double q;
  double mu;
};

/// (x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S)), x, y > 1
struct Tutte {
  double x;
  double y;
};

/// q^rank2(S) mu^|S| with rank2 the GF(2) adjacency rank
struct AdjacencyRank {
  double q;
  double mu;
};

/// q^kappa(S) prod_{e in S} v_e
struct MultiTutte {
  double q;
  std::vector<double> v;
};

/// (y-1)^(|S|-r(S)) prod_i x_i^kappa(i,S); x[i-1] weights components of order i
struct UPolynomial {
  double y;
  std::vector<double> x;
};

/// Vertex expansion: (x-1)^rank2(G[S]) (y-1)^(|V|-rank2(G[S]))
struct Interlace {
  double x;
  double y;
};

}  // namespace family

using ModelFamily = std::variant<family::RandomCluster, family::Tutte, family::AdjacencyRank,
                                 family::MultiTutte, family::UPolynomial, family::Interlace>;

/// A strictly positive subset-expansion weight function. Parameters are validated on construction.
class WeightModel {
 public:
  explicit WeightModel(ModelFamily family);

  const ModelFamily& family() const noexcept { return family_; }
  /// "rc", "tutte", "r2", "multi_tutte", "upoly" or "interlace".
  std::string name() const;
  Kind kind() const noexcept;
  double lambda() const noexcept { return lambda_; }
  double lambda_hat() const noexcept { return lambda_hat_; }

  /// Throws ModelError if per-edge or per-size parameter vectors do not fit g.
  void check_fits(const Graph& g) const;

 private:
  ModelFamily family_;
  double lambda_;
  double lambda_hat_;
};

WeightModel make_rc(double q, double mu);
WeightModel make_tutte(double x, double y);
WeightModel make_r2(double q, double mu);
WeightModel make_multi_tutte(double q, std::vector<double> v);
WeightModel make_upoly(double y, std::vector<double> x);
WeightModel make_interlace(double x, double y);

double lambda_of(const WeightModel& model);

/// Natural log of w((V,S)) for edge models or w(G[S]) for vertex models.
double log_weight(const WeightModel& model, const Graph& g, const Subset& s);

/// log_weight(s xor {flip}) - log_weight(s).
double log_weight_ratio(const WeightModel& model, const Graph& g, const Subset& s, std::size_t flip);

/// log of the sum of weights over all subsets, by streaming log-sum-exp in index order.
double exact_partition_log(const WeightModel& model, const Graph& g, unsigned max_log2_states = 24);

/// log_weight for every subset, indexed by bitmask (bit i = element i).
std::vector<double> all_log_weights(const WeightModel& model, const Graph& g, unsigned max_log2_states = 24);

/// Log weight of a standalone graph under the model's graph function, without the
/// normalising factor that depends on the ambient graph: for Tutte this omits
/// (x-1)^r(E); for Interlace the (y-1) exponent uses h's own vertex count.
/// edge_labels[i] is the original index of h's edge i (used by per-edge parameters).
double intrinsic_log_weight(const WeightModel& model, std::size_t n, std::span<const Edge> edges,
                            std::span<const std::size_t> edge_labels);

}  // namespace glauber

#pragma once

#include <cstddef>

#include "glauber/graph.hpp"
#include "glauber/weight_model.hpp"

namespace glauber {

/// Evaluates log_weight for one (model, graph) pair, caching the subset-independent offset.
class WeightEvaluator {
 public:
  /// Throws ModelError if the model does not fit g.
  WeightEvaluator(const WeightModel& model, const Graph& g);

  Kind kind() const noexcept { return model_->kind(); }
  std::size_t universe() const noexcept { return g_->universe(kind()); }

  double operator()(const Subset& s) const;
  double ratio(const Subset& s, std::size_t flip) const;

 private:
  const WeightModel* model_;
  const Graph* g_;
  double offset_ = 0.0;
};

}  // namespace glauber

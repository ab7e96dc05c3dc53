#include "glauber/weight_evaluator.hpp"

#include <cmath>
#include <stdexcept>
#include <variant>

namespace glauber {

WeightEvaluator::WeightEvaluator(const WeightModel& model, const Graph& g) : model_(&model), g_(&g) {
  model.check_fits(g);
  if (const auto* t = std::get_if<family::Tutte>(&model.family()))
    offset_ = static_cast<double>(kernels::incidence_rank(g.n(), g.edges())) * std::log(t->x - 1.0);
}

double WeightEvaluator::operator()(const Subset& s) const {
  if (s.kind() != kind() || s.universe() != universe())
    throw std::invalid_argument(std::string("log_weight: ") + model_->name() + " needs a " + to_string(kind()) +
                                " subset over " + std::to_string(universe()) + " elements");
  if (kind() == Kind::Edge) {
    const auto labels = s.indices();
    std::vector<Edge> edges;
    edges.reserve(labels.size());
    for (auto e : labels) edges.push_back(g_->edge(e));
    return offset_ + intrinsic_log_weight(*model_, g_->n(), edges, labels);
  }
  // Interlace weights G[S] against the full vertex count: (y-1)^(|V| - rank2).
  const Graph h = induced_subgraph(*g_, s);
  const auto& f = std::get<family::Interlace>(model_->family());
  const double missing = static_cast<double>(g_->n() - h.n());
  return intrinsic_log_weight(*model_, h.n(), h.edges(), {}) + missing * std::log(f.y - 1.0);
}

double WeightEvaluator::ratio(const Subset& s, std::size_t flip) const {
  if (flip >= universe()) throw std::out_of_range("flip index " + std::to_string(flip) + " out of range");
  return (*this)(s.flipped(flip)) - (*this)(s);
}

}  // namespace glauber

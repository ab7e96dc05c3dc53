#include "glauber/weight_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "glauber/errors.hpp"
#include "glauber/weight_evaluator.hpp"

namespace glauber {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw ModelError(what);
}

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

void validate(const ModelFamily& f) {
  std::visit(overloaded{
                 [](const family::RandomCluster& m) {
                   require(positive_finite(m.q) && positive_finite(m.mu), "rc requires q > 0 and mu > 0");
                 },
                 [](const family::Tutte& m) {
                   require(std::isfinite(m.x) && std::isfinite(m.y) && m.x > 1.0 && m.y > 1.0,
                           "tutte requires x > 1 and y > 1");
                 },
                 [](const family::AdjacencyRank& m) {
                   require(positive_finite(m.q) && positive_finite(m.mu), "r2 requires q > 0 and mu > 0");
                 },
                 [](const family::MultiTutte& m) {
                   require(positive_finite(m.q), "multi_tutte requires q > 0");
                   require(std::all_of(m.v.begin(), m.v.end(), positive_finite),
                           "multi_tutte requires every v_e > 0");
                 },
                 [](const family::UPolynomial& m) {
                   require(std::isfinite(m.y) && m.y > 1.0, "upoly requires y > 1");
                   require(std::all_of(m.x.begin(), m.x.end(), positive_finite), "upoly requires every x_i > 0");
                 },
                 [](const family::Interlace& m) {
                   require(std::isfinite(m.x) && std::isfinite(m.y) && m.x > 1.0 && m.y > 1.0,
                           "interlace requires x > 1 and y > 1");
                 },
             },
             f);
}

double spread(double v) { return std::max(v, 1.0 / v); }

double compute_lambda(const ModelFamily& f) {
  return std::visit(overloaded{
                        [](const family::RandomCluster& m) { return m.q; },
                        [](const family::Tutte& m) { return (m.x - 1.0) * (m.y - 1.0); },
                        [](const family::AdjacencyRank& m) { return m.q * m.q; },
                        [](const family::MultiTutte& m) { return m.q; },
                        [](const family::UPolynomial& m) {
                          double x_prime = 1.0;
                          for (double xi : m.x) x_prime = std::max(x_prime, spread(xi));
                          return spread(m.y - 1.0) * x_prime * x_prime * x_prime;
                        },
                        [](const family::Interlace& m) {
                          const double r = (m.x - 1.0) / (m.y - 1.0);
                          return r * r;
                        },
                    },
                    f);
}

}  // namespace

WeightModel::WeightModel(ModelFamily family) : family_(std::move(family)) {
  validate(family_);
  lambda_ = compute_lambda(family_);
  lambda_hat_ = spread(lambda_);
}

std::string WeightModel::name() const {
  return std::visit(overloaded{
                        [](const family::RandomCluster&) { return "rc"; },
                        [](const family::Tutte&) { return "tutte"; },
                        [](const family::AdjacencyRank&) { return "r2"; },
                        [](const family::MultiTutte&) { return "multi_tutte"; },
                        [](const family::UPolynomial&) { return "upoly"; },
                        [](const family::Interlace&) { return "interlace"; },
                    },
                    family_);
}

Kind WeightModel::kind() const noexcept {
  return std::holds_alternative<family::Interlace>(family_) ? Kind::Vertex : Kind::Edge;
}

void WeightModel::check_fits(const Graph& g) const {
  if (const auto* mt = std::get_if<family::MultiTutte>(&family_); mt && mt->v.size() != g.m())
    throw ModelError("multi_tutte has " + std::to_string(mt->v.size()) + " edge weights but the graph has " +
                     std::to_string(g.m()) + " edges");
  if (const auto* up = std::get_if<family::UPolynomial>(&family_); up && up->x.size() < g.n())
    throw ModelError("upoly has " + std::to_string(up->x.size()) + " size weights but the graph has " +
                     std::to_string(g.n()) + " vertices");
}

WeightModel make_rc(double q, double mu) { return WeightModel(family::RandomCluster{q, mu}); }
WeightModel make_tutte(double x, double y) { return WeightModel(family::Tutte{x, y}); }
WeightModel make_r2(double q, double mu) { return WeightModel(family::AdjacencyRank{q, mu}); }
WeightModel make_multi_tutte(double q, std::vector<double> v) {
  return WeightModel(family::MultiTutte{q, std::move(v)});
}
WeightModel make_upoly(double y, std::vector<double> x) { return WeightModel(family::UPolynomial{y, std::move(x)}); }
WeightModel make_interlace(double x, double y) { return WeightModel(family::Interlace{x, y}); }

double lambda_of(const WeightModel& model) { return model.lambda(); }

double intrinsic_log_weight(const WeightModel& model, std::size_t n, std::span<const Edge> edges,
                            std::span<const std::size_t> edge_labels) {
  const double size = static_cast<double>(edges.size());
  return std::visit(
      overloaded{
          [&](const family::RandomCluster& m) {
            return static_cast<double>(kernels::components(n, edges)) * std::log(m.q) + size * std::log(m.mu);
          },
          [&](const family::Tutte& m) {
            const auto r = static_cast<double>(kernels::incidence_rank(n, edges));
            return -r * std::log(m.x - 1.0) + (size - r) * std::log(m.y - 1.0);
          },
          [&](const family::AdjacencyRank& m) {
            return static_cast<double>(kernels::adjacency_rank(n, edges)) * std::log(m.q) + size * std::log(m.mu);
          },
          [&](const family::MultiTutte& m) {
            double acc = static_cast<double>(kernels::components(n, edges)) * std::log(m.q);
            for (auto label : edge_labels) {
              if (label >= m.v.size()) throw ModelError("multi_tutte edge weight index out of range");
              acc += std::log(m.v[label]);
            }
            return acc;
          },
          [&](const family::UPolynomial& m) {
            const auto r = static_cast<double>(kernels::incidence_rank(n, edges));
            double acc = (size - r) * std::log(m.y - 1.0);
            const auto profile = kernels::size_profile(n, edges);
            for (std::size_t i = 0; i < profile.size(); ++i) {
              if (profile[i] == 0) continue;
              if (i >= m.x.size()) throw ModelError("upoly has no weight for components of order " +
                                                    std::to_string(i + 1));
              acc += static_cast<double>(profile[i]) * std::log(m.x[i]);
            }
            return acc;
          },
          [&](const family::Interlace& m) {
            const auto r = static_cast<double>(kernels::adjacency_rank(n, edges));
            return r * std::log(m.x - 1.0) + (static_cast<double>(n) - r) * std::log(m.y - 1.0);
          },
      },
      model.family());
}

double log_weight(const WeightModel& model, const Graph& g, const Subset& s) {
  return WeightEvaluator(model, g)(s);
}

double log_weight_ratio(const WeightModel& model, const Graph& g, const Subset& s, std::size_t flip) {
  const WeightEvaluator eval(model, g);
  return eval.ratio(s, flip);
}

std::vector<double> all_log_weights(const WeightModel& model, const Graph& g, unsigned max_log2_states) {
  const std::size_t universe = g.universe(model.kind());
  if (universe > max_log2_states || universe >= 64)
    throw CapExceeded("state space 2^" + std::to_string(universe) + " exceeds the enumeration cap 2^" +
                      std::to_string(max_log2_states));
  const WeightEvaluator eval(model, g);
  const std::uint64_t states = std::uint64_t{1} << universe;
  std::vector<double> out(states);
  for (std::uint64_t mask = 0; mask < states; ++mask)
    out[mask] = eval(Subset::from_mask(model.kind(), universe, mask));
  return out;
}

double exact_partition_log(const WeightModel& model, const Graph& g, unsigned max_log2_states) {
  const std::size_t universe = g.universe(model.kind());
  if (universe > max_log2_states || universe >= 64)
    throw CapExceeded("state space 2^" + std::to_string(universe) + " exceeds the enumeration cap 2^" +
                      std::to_string(max_log2_states));
  const WeightEvaluator eval(model, g);
  const std::uint64_t states = std::uint64_t{1} << universe;
  // Running sum is kept relative to the running maximum.
  double running_max = -std::numeric_limits<double>::infinity();
  double running_sum = 0.0;
  for (std::uint64_t mask = 0; mask < states; ++mask) {
    const double lw = eval(Subset::from_mask(model.kind(), universe, mask));
    if (lw <= running_max) {
      running_sum += std::exp(lw - running_max);
    } else {
      running_sum = running_sum * std::exp(running_max - lw) + 1.0;
      running_max = lw;
    }
  }
  return running_max + std::log(running_sum);
}

}  // namespace glauber

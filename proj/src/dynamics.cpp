#include "glauber/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "glauber/errors.hpp"
#include "glauber/weight_evaluator.hpp"

namespace glauber {

std::size_t Rng::uniform_index(std::size_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_index: empty range");
  const std::uint64_t b = bound;
  // Largest multiple of b that fits; values at or above it are redrawn.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % b;
  std::uint64_t u;
  do {
    u = next();
  } while (u >= limit);
  return static_cast<std::size_t>(u % b);
}

Subset ChainConfig::effective_initial() const {
  return initial.value_or(Subset(model.kind(), graph.universe(model.kind())));
}

void ChainConfig::validate() const {
  model.check_fits(graph);
  if (thinning == 0) throw std::invalid_argument("thinning must be at least 1");
  const Subset init = effective_initial();
  if (init.kind() != model.kind() || init.universe() != graph.universe(model.kind()))
    throw std::invalid_argument("initial subset does not match the model kind and graph");
}

double acceptance_probability(double log_ratio) { return 0.5 * std::exp(std::min(log_ratio, 0.0)); }

namespace {

class Stepper {
 public:
  Stepper(const WeightModel& model, const Graph& g, Subset state)
      : eval_(model, g), state_(std::move(state)), current_(eval_(state_)) {
    if (eval_.universe() == 0) throw std::invalid_argument("step: empty ground set");
  }

  bool advance(Rng& rng) {
    const std::size_t index = rng.uniform_index(eval_.universe());
    const double u = rng.uniform01();
    Subset proposal = state_.flipped(index);
    const double proposed = eval_(proposal);
    if (u < acceptance_probability(proposed - current_)) {
      state_ = std::move(proposal);
      current_ = proposed;
      return true;
    }
    return false;
  }

  const Subset& state() const { return state_; }
  double log_weight() const { return current_; }

 private:
  WeightEvaluator eval_;
  Subset state_;
  double current_;
};

}  // namespace

Subset step(const WeightModel& model, const Graph& g, const Subset& state, Rng& rng) {
  Stepper stepper(model, g, state);
  stepper.advance(rng);
  return stepper.state();
}

RunSummary run_streaming(const ChainConfig& config, const SampleVisitor& visit) {
  config.validate();
  RunSummary summary;
  if (config.steps == 0) {
    summary.final = config.effective_initial();
    return summary;
  }
  Rng rng(config.seed);
  Stepper stepper(config.model, config.graph, config.effective_initial());
  const std::size_t burn_in = config.effective_burn_in();
  std::size_t accepted = 0;
  for (std::size_t t = 1; t <= config.steps; ++t) {
    accepted += stepper.advance(rng);
    if (t > burn_in && (t - burn_in) % config.thinning == 0) {
      ++summary.retained;
      if (visit) visit(t, stepper.state(), stepper.log_weight());
    }
  }
  summary.acceptance_rate = static_cast<double>(accepted) / static_cast<double>(config.steps);
  summary.final = stepper.state();
  return summary;
}

Trace run(const ChainConfig& config) {
  Trace trace;
  auto summary = run_streaming(config, [&](std::size_t t, const Subset& s, double lw) {
    trace.samples.push_back({t, s, lw});
  });
  trace.acceptance_rate = summary.acceptance_rate;
  trace.final = std::move(summary.final);
  return trace;
}

double transition_probability(const WeightModel& model, const Graph& g, const Subset& h, const Subset& h2) {
  const WeightEvaluator eval(model, g);
  if (h.kind() != model.kind() || h2.kind() != model.kind() || h.universe() != eval.universe() ||
      h2.universe() != eval.universe())
    throw std::invalid_argument("transition_probability: subsets do not match the model");
  const std::size_t universe = eval.universe();
  const Subset diff = h ^ h2;
  const std::size_t distance = diff.count();
  if (distance > 1) return 0.0;
  const double lw = eval(h);
  const double per_index = 1.0 / static_cast<double>(universe);
  if (distance == 1) return per_index * acceptance_probability(eval(h2) - lw);
  double leave = 0.0;
  for (std::size_t i = 0; i < universe; ++i) leave += per_index * acceptance_probability(eval(h.flipped(i)) - lw);
  return 1.0 - leave;
}

std::map<Subset, double> empirical_distribution(const ChainConfig& config) {
  std::map<Subset, double> freq;
  const auto summary = run_streaming(config, [&](std::size_t, const Subset& s, double) { freq[s] += 1.0; });
  if (summary.retained > 0)
    for (auto& [s, f] : freq) f /= static_cast<double>(summary.retained);
  return freq;
}

std::vector<double> to_dense(const std::map<Subset, double>& freq, Kind kind, std::size_t universe,
                             unsigned max_log2_states) {
  if (universe > max_log2_states)
    throw CapExceeded("state space 2^" + std::to_string(universe) + " exceeds the comparison cap 2^" +
                      std::to_string(max_log2_states));
  std::vector<double> dense(std::size_t{1} << universe, 0.0);
  for (const auto& [s, f] : freq) {
    if (s.kind() != kind || s.universe() != universe) throw std::invalid_argument("to_dense: subset mismatch");
    dense[s.to_mask()] = f;
  }
  return dense;
}

}  // namespace glauber

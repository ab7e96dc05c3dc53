#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "glauber/graph.hpp"
#include "glauber/rng.hpp"
#include "glauber/subset.hpp"
#include "glauber/weight_model.hpp"

namespace glauber {

struct ChainConfig {
  WeightModel model;
  Graph graph;
  std::uint64_t seed = 0;
  /// Defaults to the empty subset.
  std::optional<Subset> initial;
  std::size_t steps = 0;
  /// Defaults to steps / 10.
  std::optional<std::size_t> burn_in;
  std::size_t thinning = 1;

  std::size_t effective_burn_in() const { return burn_in.value_or(steps / 10); }
  Subset effective_initial() const;
  /// Throws std::invalid_argument / ModelError on inconsistent settings.
  void validate() const;
};

struct Sample {
  std::size_t step;  // number of completed steps when the sample was taken
  Subset state;
  double log_weight;
};

struct Trace {
  std::vector<Sample> samples;
  double acceptance_rate = 0.0;
  Subset final;
};

/// Probability of accepting a proposal whose log weight ratio is log_ratio: 1/2 min{1, exp(log_ratio)}.
double acceptance_probability(double log_ratio);

/// One Metropolis step: uniform flip index, then one uniform for acceptance (always both draws).
Subset step(const WeightModel& model, const Graph& g, const Subset& state, Rng& rng);

using SampleVisitor = std::function<void(std::size_t step, const Subset& state, double log_weight)>;

struct RunSummary {
  double acceptance_rate = 0.0;
  Subset final;
  std::size_t retained = 0;
};

/// Runs the chain and hands each retained sample to visit; samples are taken after step t
/// whenever t > burn_in and (t - burn_in) is a multiple of thinning.
RunSummary run_streaming(const ChainConfig& config, const SampleVisitor& visit);

Trace run(const ChainConfig& config);

/// Exact one-step transition probability P(h, h2).
double transition_probability(const WeightModel& model, const Graph& g, const Subset& h, const Subset& h2);

/// Normalised visit frequencies of the retained samples.
std::map<Subset, double> empirical_distribution(const ChainConfig& config);

/// Dense form indexed by bitmask; throws CapExceeded beyond 2^max_log2_states states.
std::vector<double> to_dense(const std::map<Subset, double>& freq, Kind kind, std::size_t universe,
                             unsigned max_log2_states = 20);

}  // namespace glauber

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "glauber/dynamics.hpp"
#include "glauber/errors.hpp"
#include "glauber/verification.hpp"

namespace glauber {

std::vector<double> stationary_distribution(const WeightModel& model, const Graph& g, unsigned max_log2_states) {
  const auto lw = all_log_weights(model, g, max_log2_states);
  const double log_z = exact_partition_log(model, g, max_log2_states);
  std::vector<double> pi(lw.size());
  for (std::size_t i = 0; i < pi.size(); ++i) pi[i] = std::exp(lw[i] - log_z);
  return pi;
}

double tv_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("tv_distance: distributions differ in size");
  const double sa = std::accumulate(a.begin(), a.end(), 0.0);
  const double sb = std::accumulate(b.begin(), b.end(), 0.0);
  if (std::abs(sa - 1.0) > 1e-9 || std::abs(sb - 1.0) > 1e-9)
    throw std::invalid_argument("tv_distance: distribution not normalised");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
  return 0.5 * acc;
}

double TransitionTable::probability(std::uint64_t from, std::uint64_t to) const {
  if (from >= states() || to >= states()) throw std::out_of_range("TransitionTable: state out of range");
  if (from == to) return stay[from];
  const std::uint64_t diff = from ^ to;
  if ((diff & (diff - 1)) != 0) return 0.0;
  return move[from * universe + static_cast<std::size_t>(std::countr_zero(diff))];
}

TransitionTable transition_table(const WeightModel& model, const Graph& g, unsigned max_log2_states) {
  TransitionTable table;
  table.log_weights = all_log_weights(model, g, max_log2_states);
  table.universe = g.universe(model.kind());
  const std::size_t u = table.universe;
  const std::size_t states = table.states();
  table.move.assign(states * u, 0.0);
  table.stay.assign(states, 1.0);
  const double per_index = u == 0 ? 0.0 : 1.0 / static_cast<double>(u);
  for (std::size_t h = 0; h < states; ++h) {
    double leave = 0.0;
    for (std::size_t i = 0; i < u; ++i) {
      const double p =
          per_index * acceptance_probability(table.log_weights[h ^ (std::size_t{1} << i)] - table.log_weights[h]);
      table.move[h * u + i] = p;
      leave += p;
    }
    table.stay[h] = 1.0 - leave;
  }
  return table;
}

MixingReport exact_mixing_time(const WeightModel& model, const Graph& g, double epsilon,
                               const CongestionReport& congestion, unsigned max_log2_states, std::size_t max_steps) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const TransitionTable table = transition_table(model, g, max_log2_states);
  const std::size_t u = table.universe;
  const std::size_t states = table.states();
  const auto pi = stationary_distribution(model, g, max_log2_states);

  MixingReport report;
  report.epsilon = epsilon;
  report.rho = congestion.rho;
  report.pi_min = *std::min_element(pi.begin(), pi.end());
  report.sinclair_bound = congestion.rho * (std::log(1.0 / report.pi_min) + std::log(1.0 / epsilon));

  // into[j * u + i] = P(j xor {i} -> j)
  std::vector<double> into(states * u);
  for (std::size_t j = 0; j < states; ++j)
    for (std::size_t i = 0; i < u; ++i) into[j * u + i] = table.move[(j ^ (std::size_t{1} << i)) * u + i];

  // Row r holds P^t(r, .).
  std::vector<double> rows(states * states, 0.0), next(states * states);
  for (std::size_t r = 0; r < states; ++r) rows[r * states + r] = 1.0;

  auto worst_tv = [&](const std::vector<double>& m) {
    double worst = 0.0;
    for (std::size_t r = 0; r < states; ++r) {
      const double* row = &m[r * states];
      double acc = 0.0;
      for (std::size_t j = 0; j < states; ++j) acc += std::abs(row[j] - pi[j]);
      worst = std::max(worst, 0.5 * acc);
    }
    return worst;
  };

  double tv = worst_tv(rows);
  report.tv_curve.push_back(tv);
  std::size_t t = 0;
  while (tv > epsilon) {
    if (t == max_steps)
      throw Error("mixing did not reach epsilon within " + std::to_string(max_steps) + " steps");
#pragma omp parallel for schedule(static)
    for (std::size_t r = 0; r < states; ++r) {
      const double* row = &rows[r * states];
      double* out = &next[r * states];
      for (std::size_t j = 0; j < states; ++j) {
        double acc = row[j] * table.stay[j];
        const double* in = &into[j * u];
        for (std::size_t i = 0; i < u; ++i) acc += row[j ^ (std::size_t{1} << i)] * in[i];
        out[j] = acc;
      }
    }
    rows.swap(next);
    ++t;
    tv = worst_tv(rows);
    report.tv_curve.push_back(tv);
  }
  report.tau = t;
  report.pass = static_cast<double>(report.tau) <= report.sinclair_bound;
  return report;
}

}  // namespace glauber

#include "glauber/verification.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "glauber/errors.hpp"

namespace glauber {

namespace {

void check_ordering(const WeightModel& model, const Graph& g, const Ordering& o) {
  if (o.kind != model.kind() || o.perm.size() != g.universe(model.kind()))
    throw std::invalid_argument("ordering does not match the model kind and graph");
}

// Re-expresses states so that bit p is the element at ordering position p; canonical
// paths then flip differing bits from least to most significant.
struct PositionSpace {
  std::size_t size;
  std::vector<std::uint64_t> element_mask;  // position-space mask -> element-space mask

  explicit PositionSpace(const std::vector<std::size_t>& perm) : size(perm.size()) {
    element_mask.assign(std::size_t{1} << size, 0);
    for (std::uint64_t p = 1; p < element_mask.size(); ++p) {
      const auto low = static_cast<std::size_t>(std::countr_zero(p));
      element_mask[p] = element_mask[p & (p - 1)] | (std::uint64_t{1} << perm[low]);
    }
  }

  std::vector<double> permute(const std::vector<double>& by_element) const {
    std::vector<double> out(element_mask.size());
    for (std::size_t p = 0; p < out.size(); ++p) out[p] = by_element[element_mask[p]];
    return out;
  }
};

std::vector<double> normalise(const std::vector<double>& log_weights) {
  const double top = *std::max_element(log_weights.begin(), log_weights.end());
  std::vector<double> pi(log_weights.size());
  double total = 0.0;
  for (std::size_t i = 0; i < pi.size(); ++i) total += pi[i] = std::exp(log_weights[i] - top);
  for (auto& p : pi) p /= total;
  return pi;
}

}  // namespace

CanonicalPath canonical_path(const Ordering& o, const Subset& initial, const Subset& final) {
  if (initial.kind() != o.kind || final.kind() != o.kind || initial.universe() != o.perm.size() ||
      final.universe() != o.perm.size())
    throw std::invalid_argument("canonical_path: subsets do not match the ordering");
  CanonicalPath path;
  path.states.push_back(initial);
  const Subset diff = initial ^ final;
  for (auto element : o.perm) {
    if (!diff.contains(element)) continue;
    path.flips.push_back(element);
    path.states.push_back(path.states.back().flipped(element));
  }
  return path;
}

double congestion_bound(std::size_t ground_size, double lambda_hat, std::size_t width) {
  const double size = static_cast<double>(ground_size);
  return 2.0 * size * size * std::pow(lambda_hat, 4.0 * static_cast<double>(width));
}

CongestionReport congestion(const WeightModel& model, const Graph& g, const Ordering& o,
                            unsigned max_log2_states) {
  check_ordering(model, g, o);
  const auto pi_by_element = normalise(all_log_weights(model, g, max_log2_states));
  const PositionSpace space(o.perm);
  const auto pi = space.permute(pi_by_element);
  const std::size_t m = space.size;
  const std::uint64_t states = std::uint64_t{1} << m;

  CongestionReport report;
  report.ground_size = m;
  report.lambda_hat = model.lambda_hat();
  report.ordering_width = o.width;
  report.bound = congestion_bound(m, report.lambda_hat, o.width);

  // The step H -> H xor {p} lies on the path I -> F exactly when I agrees with H on
  // positions >= p, F agrees with H below p and differs at p. Bits of I below p and of
  // F above p are free, and |I xor F| = popcount(I_low xor H_low) + 1 + popcount(F_high xor H_high),
  // so the sum over pairs factorises into sums over each free half.
  for (std::uint64_t h = 0; h < states; ++h) {
    for (std::size_t p = 0; p < m; ++p) {
      const std::uint64_t bit = std::uint64_t{1} << p;
      const std::uint64_t low_mask = bit - 1;
      const std::uint64_t h_low = h & low_mask;
      const std::uint64_t h_from_p = h & ~low_mask;
      double a0 = 0.0, a1 = 0.0;
      for (std::uint64_t a = 0; a <= low_mask; ++a) {
        const double w = pi[h_from_p | a];
        a0 += w;
        a1 += w * std::popcount(a ^ h_low);
      }
      const std::uint64_t f_base = h_low | (~h & bit);
      const std::uint64_t h_high = h >> (p + 1);
      const std::uint64_t high_count = std::uint64_t{1} << (m - p - 1);
      double b0 = 0.0, b1 = 0.0;
      for (std::uint64_t b = 0; b < high_count; ++b) {
        const double w = pi[f_base | (b << (p + 1))];
        b0 += w;
        b1 += w * std::popcount(b ^ h_high);
      }
      const double load = a1 * b0 + a0 * b0 + a0 * b1;
      const double flow = std::min(pi[h], pi[h ^ bit]) / (2.0 * static_cast<double>(m));
      const double value = load / flow;
      if (!report.argmax_transition || value > report.rho) {
        report.rho = value;
        report.argmax_transition =
            Transition{Subset::from_mask(model.kind(), m, space.element_mask[h]),
                       Subset::from_mask(model.kind(), m, space.element_mask[h ^ bit])};
      }
    }
  }
  report.pass = report.rho <= report.bound;
  return report;
}

LemmaReport lemma_ratio_max(const WeightModel& model, const Graph& g, const Ordering& o,
                            unsigned max_log2_states) {
  check_ordering(model, g, o);
  const PositionSpace space(o.perm);
  const auto lw = space.permute(all_log_weights(model, g, max_log2_states));
  const std::size_t m = space.size;
  const std::uint64_t states = std::uint64_t{1} << m;

  // H on the path I -> F takes F's bits below some position p and I's bits from p on.
  double best = 0.0;
  std::uint64_t best_i = 0, best_f = 0, best_h = 0;
  for (std::uint64_t i = 0; i < states; ++i) {
    for (std::uint64_t f = 0; f < states; ++f) {
      const double base = lw[i] + lw[f];
      for (std::size_t p = 1; p < m; ++p) {
        const std::uint64_t low = (std::uint64_t{1} << p) - 1;
        const std::uint64_t h = (f & low) | (i & ~low);
        const std::uint64_t c = (i & low) | (f & ~low);
        const double r = base - lw[h] - lw[c];
        if (r > best) {
          best = r;
          best_i = i;
          best_f = f;
          best_h = h;
        }
      }
    }
  }
  LemmaReport report;
  report.log_max_ratio = best;
  report.log_bound = 4.0 * static_cast<double>(o.width) * std::log(model.lambda_hat());
  report.initial = Subset::from_mask(model.kind(), m, space.element_mask[best_i]);
  report.final = Subset::from_mask(model.kind(), m, space.element_mask[best_f]);
  report.on_path = Subset::from_mask(model.kind(), m, space.element_mask[best_h]);
  report.pass = report.log_max_ratio <= report.log_bound + 1e-9;
  return report;
}

}  // namespace glauber

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "glauber/errors.hpp"
#include "glauber/verification.hpp"

namespace glauber {

namespace {

struct LabeledEdge {
  std::size_t u;
  std::size_t v;
  std::size_t label;
};

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

// Evaluates the model's graph function on pieces given as a vertex mask plus edges in
// base-graph numbering; vertices are compacted to 0..|mask|-1 before evaluation.
class PieceEvaluator {
 public:
  explicit PieceEvaluator(const WeightModel& model) : model_(model) {}

  double operator()(std::uint64_t vertices, std::span<const LabeledEdge> edges) {
    edges_.clear();
    labels_.clear();
    for (const auto& e : edges) {
      edges_.push_back({rank_in(vertices, e.u), rank_in(vertices, e.v)});
      labels_.push_back(e.label);
    }
    return intrinsic_log_weight(model_, static_cast<std::size_t>(std::popcount(vertices)), edges_, labels_);
  }

 private:
  static std::size_t rank_in(std::uint64_t mask, std::size_t v) {
    return static_cast<std::size_t>(std::popcount(mask & (bit(v) - 1)));
  }

  const WeightModel& model_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> labels_;
};

// Odometer over assignments of `count` vertices to {V1, K, V2}, as bitmasks.
class SeparationCounter {
 public:
  explicit SeparationCounter(std::size_t count) : digits_(count, 0) {}

  std::uint64_t v1 = 0, k = 0, v2 = 0;

  void reset(std::size_t count) {
    digits_.assign(count, 0);
    v1 = k = v2 = 0;
    for (std::size_t i = 0; i < count; ++i) v1 |= bit(i);
  }

  bool next() {
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      const std::uint64_t b = bit(i);
      if (digits_[i] == 0) {
        digits_[i] = 1;
        v1 &= ~b;
        k |= b;
        return true;
      }
      if (digits_[i] == 1) {
        digits_[i] = 2;
        k &= ~b;
        v2 |= b;
        return true;
      }
      digits_[i] = 0;
      v2 &= ~b;
      v1 |= b;
    }
    return false;
  }

 private:
  std::vector<unsigned char> digits_;
};

bool crosses(std::uint64_t a, std::uint64_t b, std::size_t u, std::size_t v) {
  return ((a & bit(u)) && (b & bit(v))) || ((a & bit(v)) && (b & bit(u)));
}

Subset mask_subset(Kind kind, std::size_t universe, std::uint64_t mask) {
  return Subset::from_mask(kind, universe, mask);
}

double checked_log_lambda_hat(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be positive");
  return std::log(std::max(lambda, 1.0 / lambda));
}

class Tracker {
 public:
  Tracker(double lambda, double tolerance) : tolerance_(tolerance) {
    report.lambda = lambda;
    report.lambda_hat = std::max(lambda, 1.0 / lambda);
    report.max_excess = -std::numeric_limits<double>::infinity();
    log_lambda_hat_ = checked_log_lambda_hat(lambda);
  }

  // Returns true if this case is the new worst.
  bool record(double log_ratio, std::size_t cut_size) {
    ++report.checked;
    const double excess = std::abs(log_ratio) - static_cast<double>(cut_size) * log_lambda_hat_;
    if (excess > report.max_excess) {
      report.max_excess = excess;
      return true;
    }
    return false;
  }

  MultiplicativityReport finish() {
    report.pass = report.checked == 0 || report.max_excess <= tolerance_;
    return report;
  }

  MultiplicativityReport report;

 private:
  double tolerance_;
  double log_lambda_hat_ = 0.0;
};

void require_kind(const WeightModel& model, Kind kind, const char* op) {
  if (model.kind() != kind)
    throw std::invalid_argument(std::string(op) + ": " + model.name() + " is not a " + to_string(kind) + " model");
}

std::uint64_t vertex_mask(const Subset& s) { return s.to_mask(); }

}  // namespace

double edge_separation_log_ratio(const WeightModel& model, const Graph& g, const Subset& s, const Separation& sep,
                                 const Subset& e1) {
  require_kind(model, Kind::Edge, "edge_separation_log_ratio");
  model.check_fits(g);
  if (g.n() > 64) throw CapExceeded("separation ratios support at most 64 vertices");
  if (s.kind() != Kind::Edge || s.universe() != g.m() || e1.kind() != Kind::Edge || e1.universe() != g.m())
    throw std::invalid_argument("edge_separation_log_ratio: edge subsets do not match the graph");
  const Graph spanning(g.n(), selected_edges(g, s));
  if (!is_separation(spanning, sep)) throw std::invalid_argument("not a separation of (V,S)");
  if ((e1 & s) != e1) throw std::invalid_argument("E1 is not a subset of S");
  const std::uint64_t v1 = vertex_mask(sep.v1), k = vertex_mask(sep.k), v2 = vertex_mask(sep.v2);

  std::vector<LabeledEdge> whole, side1, side2;
  for (auto e : s.indices()) {
    const auto [u, v] = g.edge(e);
    const LabeledEdge le{u, v, e};
    whole.push_back(le);
    const bool touches1 = (v1 & (bit(u) | bit(v))) != 0;
    const bool touches2 = (v2 & (bit(u) | bit(v))) != 0;
    if (e1.contains(e)) {
      if (touches2) throw std::invalid_argument("partition is not appropriate: E1 edge meets V2");
      side1.push_back(le);
    } else {
      if (touches1) throw std::invalid_argument("partition is not appropriate: E2 edge meets V1");
      side2.push_back(le);
    }
  }
  PieceEvaluator piece(model);
  const std::uint64_t all = v1 | k | v2;
  return piece(v1 | k, side1) + piece(v2 | k, side2) - piece(all, whole);
}

double vertex_separation_log_ratio(const WeightModel& model, const Graph& g, const Separation& sep) {
  require_kind(model, Kind::Vertex, "vertex_separation_log_ratio");
  if (g.n() > 64) throw CapExceeded("separation ratios support at most 64 vertices");
  if (!is_separation(g, sep)) throw std::invalid_argument("not a separation of G");
  const std::uint64_t v1 = vertex_mask(sep.v1), rest = vertex_mask(sep.k) | vertex_mask(sep.v2);
  std::vector<LabeledEdge> whole, side1, side2;
  for (std::size_t e = 0; e < g.m(); ++e) {
    const auto [u, v] = g.edge(e);
    const LabeledEdge le{u, v, e};
    whole.push_back(le);
    if ((v1 & bit(u)) && (v1 & bit(v))) side1.push_back(le);
    if ((rest & bit(u)) && (rest & bit(v))) side2.push_back(le);
  }
  PieceEvaluator piece(model);
  return piece(v1, side1) + piece(rest, side2) - piece(v1 | rest, whole);
}

MultiplicativityReport check_edge_multiplicativity(const WeightModel& model, const Graph& g, double lambda,
                                                   const MultiplicativityOptions& options) {
  require_kind(model, Kind::Edge, "check_edge_multiplicativity");
  model.check_fits(g);
  const std::size_t n = g.n(), m = g.m();
  if (n > options.max_vertices || n > 20)
    throw CapExceeded("multiplicativity check over " + std::to_string(n) + " vertices exceeds the cap of " +
                      std::to_string(options.max_vertices));
  if ((options.include_subgraphs && m > options.max_subgraph_edges) || m > 62)
    throw CapExceeded("enumerating spanning subgraphs of " + std::to_string(m) + " edges exceeds the cap of " +
                      std::to_string(options.max_subgraph_edges));

  Tracker tracker(lambda, options.tolerance);
  PieceEvaluator piece(model);
  SeparationCounter sep(n);
  const std::uint64_t all_vertices = bit(n) - 1;
  const std::uint64_t full = bit(m) - 1;

  std::vector<LabeledEdge> whole, fixed1, fixed2, free, side1, side2;
  auto check_subgraph = [&](std::uint64_t s_mask) {
    whole.clear();
    for (std::size_t e = 0; e < m; ++e)
      if (s_mask & bit(e)) whole.push_back({g.edge(e).u, g.edge(e).v, e});
    const double lw_whole = piece(all_vertices, whole);

    sep.reset(n);
    do {
      if (std::any_of(whole.begin(), whole.end(),
                      [&](const LabeledEdge& e) { return crosses(sep.v1, sep.v2, e.u, e.v); }))
        continue;
      fixed1.clear();
      fixed2.clear();
      free.clear();
      for (const auto& e : whole) {
        const std::uint64_t ends = bit(e.u) | bit(e.v);
        if (ends & sep.v1) fixed1.push_back(e);
        else if (ends & sep.v2) fixed2.push_back(e);
        else free.push_back(e);
      }
      const std::size_t cut = static_cast<std::size_t>(std::popcount(sep.k));
      for (std::uint64_t choice = 0; choice < bit(free.size()); ++choice) {
        side1 = fixed1;
        side2 = fixed2;
        for (std::size_t i = 0; i < free.size(); ++i) (choice & bit(i) ? side1 : side2).push_back(free[i]);
        const double r = piece(sep.v1 | sep.k, side1) + piece(sep.v2 | sep.k, side2) - lw_whole;
        if (tracker.record(r, cut)) {
          Subset e1(Kind::Edge, m);
          for (const auto& e : side1) e1.insert(e.label);
          tracker.report.witness = MultiplicativityWitness{
              mask_subset(Kind::Edge, m, s_mask),
              Separation{mask_subset(Kind::Vertex, n, sep.v1), mask_subset(Kind::Vertex, n, sep.k),
                         mask_subset(Kind::Vertex, n, sep.v2)},
              std::move(e1), r};
        }
      }
    } while (sep.next());
  };

  if (options.include_subgraphs) {
    for (std::uint64_t s = 0; s <= full; ++s) {
      check_subgraph(s);
      if (s == full) break;
    }
  } else {
    check_subgraph(full);
  }
  return tracker.finish();
}

MultiplicativityReport check_vertex_multiplicativity(const WeightModel& model, const Graph& g, double lambda,
                                                     const MultiplicativityOptions& options) {
  require_kind(model, Kind::Vertex, "check_vertex_multiplicativity");
  model.check_fits(g);
  const std::size_t n = g.n();
  if (n > options.max_vertices || n > 20)
    throw CapExceeded("multiplicativity check over " + std::to_string(n) + " vertices exceeds the cap of " +
                      std::to_string(options.max_vertices));

  Tracker tracker(lambda, options.tolerance);
  PieceEvaluator piece(model);
  const std::uint64_t all_vertices = bit(n) - 1;

  // Pieces are induced subgraphs, so only the vertex sets matter; edges are filtered per piece.
  std::vector<LabeledEdge> induced_t, side1, side2;
  auto induced = [&](std::uint64_t vertices, std::vector<LabeledEdge>& out) {
    out.clear();
    for (std::size_t e = 0; e < g.m(); ++e) {
      const auto [u, v] = g.edge(e);
      if ((vertices & bit(u)) && (vertices & bit(v))) out.push_back({u, v, e});
    }
  };

  auto check_induced = [&](std::uint64_t t_mask) {
    induced(t_mask, induced_t);
    const double lw_whole = piece(t_mask, induced_t);
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < n; ++v)
      if (t_mask & bit(v)) members.push_back(v);
    SeparationCounter sep(members.size());
    sep.reset(members.size());
    auto expand = [&](std::uint64_t local) {
      std::uint64_t out = 0;
      for (std::size_t i = 0; i < members.size(); ++i)
        if (local & bit(i)) out |= bit(members[i]);
      return out;
    };
    do {
      const std::uint64_t v1 = expand(sep.v1), k = expand(sep.k), v2 = expand(sep.v2);
      if (std::any_of(induced_t.begin(), induced_t.end(),
                      [&](const LabeledEdge& e) { return crosses(v1, v2, e.u, e.v); }))
        continue;
      induced(v1, side1);
      induced(v2 | k, side2);
      const double r = piece(v1, side1) + piece(v2 | k, side2) - lw_whole;
      if (tracker.record(r, static_cast<std::size_t>(std::popcount(k))))
        tracker.report.witness = MultiplicativityWitness{
            mask_subset(Kind::Vertex, n, t_mask),
            Separation{mask_subset(Kind::Vertex, n, v1), mask_subset(Kind::Vertex, n, k),
                       mask_subset(Kind::Vertex, n, v2)},
            std::nullopt, r};
    } while (sep.next());
  };

  if (options.include_subgraphs) {
    for (std::uint64_t t = 0; t <= all_vertices; ++t) check_induced(t);
  } else {
    check_induced(all_vertices);
  }
  return tracker.finish();
}

MultiplicativityReport check_multiplicativity(const WeightModel& model, const Graph& g, double lambda,
                                              const MultiplicativityOptions& options) {
  return model.kind() == Kind::Edge ? check_edge_multiplicativity(model, g, lambda, options)
                                    : check_vertex_multiplicativity(model, g, lambda, options);
}

}  // namespace glauber

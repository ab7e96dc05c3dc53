#include "glauber/width.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "glauber/errors.hpp"

namespace glauber {

namespace {

void check_permutation(const std::vector<std::size_t>& perm, std::size_t size) {
  if (perm.size() != size)
    throw std::invalid_argument("ordering has " + std::to_string(perm.size()) + " entries, expected " +
                                std::to_string(size));
  std::vector<bool> seen(size, false);
  for (auto i : perm) {
    if (i >= size || seen[i]) throw std::invalid_argument("ordering is not a permutation");
    seen[i] = true;
  }
}

// Tracks which vertices straddle a growing edge prefix.
class EdgeBoundary {
 public:
  explicit EdgeBoundary(const Graph& g) : g_(g), placed_(g.n(), 0) {}

  std::size_t size() const { return size_; }

  std::size_t size_after(std::size_t e) const {
    const auto [u, v] = g_.edge(e);
    return size_ + delta(u) + delta(v);
  }

  void place(std::size_t e) {
    size_ = size_after(e);
    const auto [u, v] = g_.edge(e);
    ++placed_[u];
    ++placed_[v];
  }

 private:
  bool straddles(std::size_t v, std::size_t placed) const { return placed > 0 && placed < g_.degree(v); }

  std::ptrdiff_t delta(std::size_t v) const {
    return static_cast<std::ptrdiff_t>(straddles(v, placed_[v] + 1)) -
           static_cast<std::ptrdiff_t>(straddles(v, placed_[v]));
  }

  const Graph& g_;
  std::vector<std::size_t> placed_;
  std::size_t size_ = 0;
};

// Tracks prefix vertices that still have a neighbour outside the prefix.
class VertexBoundary {
 public:
  explicit VertexBoundary(const Graph& g) : g_(g), placed_(g.n(), false), outside_(g.n()) {
    for (std::size_t v = 0; v < g.n(); ++v) outside_[v] = g.degree(v);
  }

  std::size_t size() const { return size_; }

  std::size_t size_after(std::size_t v) const {
    std::size_t s = size_ + (outside_[v] > 0 ? 1 : 0);
    for (const auto& inc : g_.incident(v))
      if (placed_[inc.neighbor] && outside_[inc.neighbor] == 1) --s;
    return s;
  }

  void place(std::size_t v) {
    size_ = size_after(v);
    placed_[v] = true;
    for (const auto& inc : g_.incident(v)) --outside_[inc.neighbor];
  }

 private:
  const Graph& g_;
  std::vector<bool> placed_;
  std::vector<std::size_t> outside_;
  std::size_t size_ = 0;
};

template <class Boundary>
std::size_t width_along(const Graph& g, const std::vector<std::size_t>& perm) {
  Boundary boundary(g);
  std::size_t width = 0;
  for (auto i : perm) {
    width = std::max(width, boundary.size());
    boundary.place(i);
  }
  return width;
}

// best[A] = smallest achievable max boundary over the prefixes from A onward.
// boundary(A) must be callable for every subset mask.
template <class BoundaryFn>
std::vector<std::size_t> prefix_dp_ordering(std::size_t size, BoundaryFn boundary) {
  const std::uint64_t full = (std::uint64_t{1} << size) - 1;
  std::vector<std::uint8_t> best(std::size_t{1} << size, 0);
  for (std::uint64_t a = full + 1; a-- > 0;) {
    std::uint8_t completion = 0;
    if (a != full) {
      completion = UINT8_MAX;
      for (std::uint64_t rest = full & ~a; rest; rest &= rest - 1)
        completion = std::min(completion, best[a | (rest & (~rest + 1))]);
    }
    best[a] = std::max(static_cast<std::uint8_t>(boundary(a)), completion);
  }
  std::vector<std::size_t> perm;
  perm.reserve(size);
  const std::uint8_t target = best[0];
  std::uint64_t a = 0;
  while (a != full) {
    for (std::size_t i = 0; i < size; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (!(a & bit) && best[a | bit] <= target) {
        perm.push_back(i);
        a |= bit;
        break;
      }
    }
  }
  return perm;
}

void check_cap(std::size_t size, unsigned max_elements, const char* what) {
  if (size > max_elements || size > 30)
    throw CapExceeded(std::string("exact ") + what + " search over " + std::to_string(size) +
                      " elements exceeds the cap of " + std::to_string(max_elements));
}

}  // namespace

std::size_t linear_width_of_ordering(const Graph& g, const std::vector<std::size_t>& perm) {
  check_permutation(perm, g.m());
  return width_along<EdgeBoundary>(g, perm);
}

std::size_t vertex_separation_of_ordering(const Graph& g, const std::vector<std::size_t>& perm) {
  check_permutation(perm, g.n());
  return width_along<VertexBoundary>(g, perm);
}

Ordering make_ordering(const Graph& g, Kind kind, std::vector<std::size_t> perm) {
  Ordering o{kind, std::move(perm), 0};
  o.width = kind == Kind::Edge ? linear_width_of_ordering(g, o.perm) : vertex_separation_of_ordering(g, o.perm);
  return o;
}

Ordering identity_ordering(const Graph& g, Kind kind) {
  std::vector<std::size_t> perm(g.universe(kind));
  std::iota(perm.begin(), perm.end(), 0);
  return make_ordering(g, kind, std::move(perm));
}

Ordering optimal_edge_ordering(const Graph& g, unsigned max_elements) {
  check_cap(g.m(), max_elements, "linear-width");
  if (g.n() > 64) throw CapExceeded("exact linear-width search supports at most 64 vertices");
  const std::size_t m = g.m();
  // touched[A]: vertices incident to some edge of A.
  std::vector<std::uint64_t> touched(std::size_t{1} << m, 0);
  for (std::uint64_t a = 1; a < touched.size(); ++a) {
    const auto low = static_cast<std::size_t>(std::countr_zero(a));
    const auto [u, v] = g.edge(low);
    touched[a] = touched[a & (a - 1)] | (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
  }
  const std::uint64_t full = touched.size() - 1;
  auto perm = prefix_dp_ordering(m, [&](std::uint64_t a) {
    return std::popcount(touched[a] & touched[full & ~a]);
  });
  return make_ordering(g, Kind::Edge, std::move(perm));
}

Ordering optimal_vertex_ordering(const Graph& g, unsigned max_elements) {
  check_cap(g.n(), max_elements, "vertex-separation");
  const std::size_t n = g.n();
  std::vector<std::uint64_t> nbrs(n, 0);
  for (const auto& [u, v] : g.edges()) {
    nbrs[u] |= std::uint64_t{1} << v;
    nbrs[v] |= std::uint64_t{1} << u;
  }
  auto perm = prefix_dp_ordering(n, [&](std::uint64_t a) {
    int count = 0;
    for (std::uint64_t rest = a; rest; rest &= rest - 1)
      count += (nbrs[static_cast<std::size_t>(std::countr_zero(rest))] & ~a) != 0;
    return count;
  });
  return make_ordering(g, Kind::Vertex, std::move(perm));
}

Ordering optimal_ordering(const Graph& g, Kind kind, unsigned max_elements) {
  return kind == Kind::Edge ? optimal_edge_ordering(g, max_elements) : optimal_vertex_ordering(g, max_elements);
}

namespace {

template <class Boundary>
std::vector<std::size_t> greedy_perm(const Graph& g, std::size_t size) {
  Boundary boundary(g);
  std::vector<bool> used(size, false);
  std::vector<std::size_t> perm;
  perm.reserve(size);
  for (std::size_t step = 0; step < size; ++step) {
    std::size_t pick = size;
    std::size_t pick_size = 0;
    for (std::size_t i = 0; i < size; ++i) {
      if (used[i]) continue;
      const std::size_t s = boundary.size_after(i);
      if (pick == size || s < pick_size) {
        pick = i;
        pick_size = s;
      }
    }
    used[pick] = true;
    boundary.place(pick);
    perm.push_back(pick);
  }
  return perm;
}

}  // namespace

Ordering greedy_ordering(const Graph& g, Kind kind) {
  auto perm = kind == Kind::Edge ? greedy_perm<EdgeBoundary>(g, g.m()) : greedy_perm<VertexBoundary>(g, g.n());
  return make_ordering(g, kind, std::move(perm));
}

Ordering parse_ordering(const Graph& g, Kind kind, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::size_t> perm;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    long long value;
    std::string extra;
    if (!(ls >> value) || value < 0 || (ls >> extra))
      throw std::invalid_argument("ordering line is not a single index: " + line);
    perm.push_back(static_cast<std::size_t>(value));
  }
  return make_ordering(g, kind, std::move(perm));
}

Ordering load_ordering(const Graph& g, Kind kind, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ordering file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_ordering(g, kind, buffer.str());
}

}  // namespace glauber

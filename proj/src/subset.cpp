#include "glauber/subset.hpp"

#include <bit>
#include <stdexcept>
#include <tuple>

namespace glauber {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t universe) { return (universe + kWordBits - 1) / kWordBits; }
}  // namespace

const char* to_string(Kind kind) { return kind == Kind::Edge ? "edge" : "vertex"; }

Subset::Subset(Kind kind, std::size_t universe)
    : kind_(kind), universe_(universe), words_(words_for(universe), 0) {}

Subset Subset::from_mask(Kind kind, std::size_t universe, std::uint64_t mask) {
  Subset s(kind, universe);
  if (universe < kWordBits && (mask >> universe) != 0)
    throw std::invalid_argument("mask has bits beyond the universe");
  if (universe > 0) s.words_[0] = mask;
  return s;
}

Subset Subset::from_indices(Kind kind, std::size_t universe, const std::vector<std::size_t>& indices) {
  Subset s(kind, universe);
  for (auto i : indices) s.insert(i);
  return s;
}

Subset Subset::full(Kind kind, std::size_t universe) {
  Subset s(kind, universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(i);
  return s;
}

Subset Subset::from_hex(Kind kind, std::size_t universe, const std::string& hex) {
  Subset s(kind, universe);
  std::size_t bit = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
    const char c = *it;
    unsigned digit;
    if (c >= '0' && c <= '9') digit = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f') digit = static_cast<unsigned>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F') digit = static_cast<unsigned>(c - 'A' + 10);
    else throw std::invalid_argument("bad hex digit in subset: " + hex);
    for (unsigned b = 0; b < 4; ++b) {
      if (!((digit >> b) & 1u)) continue;
      if (bit + b >= universe) throw std::invalid_argument("hex subset has bits beyond the universe");
      s.insert(bit + b);
    }
  }
  return s;
}

void Subset::check_index(std::size_t i) const {
  if (i >= universe_)
    throw std::out_of_range("index " + std::to_string(i) + " outside universe of size " +
                            std::to_string(universe_));
}

void Subset::check_compatible(const Subset& other) const {
  if (kind_ != other.kind_ || universe_ != other.universe_)
    throw std::invalid_argument("subsets over different universes");
}

bool Subset::contains(std::size_t i) const {
  check_index(i);
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void Subset::insert(std::size_t i) {
  check_index(i);
  words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}

void Subset::erase(std::size_t i) {
  check_index(i);
  words_[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits));
}

void Subset::flip(std::size_t i) {
  check_index(i);
  words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

Subset Subset::flipped(std::size_t i) const {
  Subset s = *this;
  s.flip(i);
  return s;
}

std::size_t Subset::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::size_t> Subset::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::uint64_t Subset::to_mask() const {
  if (universe_ > kWordBits) throw std::invalid_argument("subset universe exceeds 64 bits");
  return words_.empty() ? 0 : words_[0];
}

std::string Subset::to_hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  const std::size_t n_digits = universe_ == 0 ? 1 : (universe_ + 3) / 4;
  std::string out(n_digits, '0');
  for (std::size_t d = 0; d < n_digits; ++d) {
    unsigned v = 0;
    for (unsigned b = 0; b < 4; ++b) {
      const std::size_t i = d * 4 + b;
      if (i < universe_ && contains(i)) v |= 1u << b;
    }
    out[n_digits - 1 - d] = digits[v];
  }
  return out;
}

Subset Subset::operator^(const Subset& other) const {
  check_compatible(other);
  Subset s = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) s.words_[w] ^= other.words_[w];
  return s;
}

Subset Subset::operator&(const Subset& other) const {
  check_compatible(other);
  Subset s = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) s.words_[w] &= other.words_[w];
  return s;
}

Subset Subset::operator|(const Subset& other) const {
  check_compatible(other);
  Subset s = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) s.words_[w] |= other.words_[w];
  return s;
}

bool operator<(const Subset& a, const Subset& b) {
  return std::tie(a.kind_, a.universe_, a.words_) < std::tie(b.kind_, b.universe_, b.words_);
}

}  // namespace glauber

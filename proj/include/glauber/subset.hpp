#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace glauber {

enum class Kind { Edge, Vertex };

const char* to_string(Kind kind);

/// A set of edge or vertex indices over a fixed universe 0..universe-1.
class Subset {
 public:
  Subset() = default;
  Subset(Kind kind, std::size_t universe);

  static Subset from_mask(Kind kind, std::size_t universe, std::uint64_t mask);
  static Subset from_indices(Kind kind, std::size_t universe, const std::vector<std::size_t>& indices);
  static Subset full(Kind kind, std::size_t universe);
  /// Inverse of to_hex(); throws std::invalid_argument on bad digits or bits beyond the universe.
  static Subset from_hex(Kind kind, std::size_t universe, const std::string& hex);

  Kind kind() const noexcept { return kind_; }
  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t i) const;
  void insert(std::size_t i);
  void erase(std::size_t i);
  void flip(std::size_t i);
  Subset flipped(std::size_t i) const;

  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }
  std::vector<std::size_t> indices() const;

  /// Low 64 bits of membership; throws if the universe exceeds 64.
  std::uint64_t to_mask() const;
  /// Bit i is element i; most significant digit first, ceil(universe/4) digits (at least one).
  std::string to_hex() const;

  Subset operator^(const Subset& other) const;
  Subset operator&(const Subset& other) const;
  Subset operator|(const Subset& other) const;

  friend bool operator==(const Subset&, const Subset&) = default;
  friend bool operator<(const Subset& a, const Subset& b);

 private:
  void check_index(std::size_t i) const;
  void check_compatible(const Subset& other) const;

  Kind kind_ = Kind::Edge;
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace glauber

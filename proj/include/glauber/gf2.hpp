#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace glauber::gf2 {

/// Dense GF(2) matrix with bit-packed rows.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value = true);
  void toggle(std::size_t r, std::size_t c);

  /// Rank by Gaussian elimination on a copy.
  std::size_t rank() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t stride_;
  std::vector<std::uint64_t> bits_;
};

/// Rank of up to 64-column rows packed into single words. Destroys the input.
std::size_t rank_of_words(std::vector<std::uint64_t>& rows);

}  // namespace glauber::gf2

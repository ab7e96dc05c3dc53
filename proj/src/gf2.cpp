#include "glauber/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace glauber::gf2 {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), bits_(rows * stride_, 0) {}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix index");
  return (bits_[r * stride_ + c / 64] >> (c % 64)) & 1u;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix index");
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  auto& word = bits_[r * stride_ + c / 64];
  word = value ? (word | bit) : (word & ~bit);
}

void BitMatrix::toggle(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix index");
  bits_[r * stride_ + c / 64] ^= std::uint64_t{1} << (c % 64);
}

std::size_t BitMatrix::rank() const {
  if (stride_ == 1) {
    std::vector<std::uint64_t> rows(bits_);
    return rank_of_words(rows);
  }
  std::vector<std::uint64_t> m(bits_);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows_ && !(m[pivot * stride_ + w] & bit)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank)
      for (std::size_t k = 0; k < stride_; ++k) std::swap(m[pivot * stride_ + k], m[rank * stride_ + k]);
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (!(m[r * stride_ + w] & bit)) continue;
      for (std::size_t k = w; k < stride_; ++k) m[r * stride_ + k] ^= m[rank * stride_ + k];
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_of_words(std::vector<std::uint64_t>& rows) {
  // Pivot on the lowest set bit of each surviving row.
  std::size_t rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::uint64_t row = rows[i];
    if (row == 0) continue;
    ++rank;
    const std::uint64_t pivot = row & (~row + 1);
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (rows[j] & pivot) rows[j] ^= row;
  }
  return rank;
}

}  // namespace glauber::gf2

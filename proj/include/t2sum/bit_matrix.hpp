#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace t2sum {

/// Dense 0/1 matrix stored as packed 64-bit row words.
///
/// Shared carrier for adjacency matrices, block matrices and GF(2) pair
/// matrices. Bits past `cols()` in the last word of a row are always zero, so
/// word-wise equality and popcount are exact.
class BitMatrix {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_((cols + kWordBits - 1) / kWordBits),
        words_(rows * stride_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return (words_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool value = true) {
    Word &w = words_[r * stride_ + c / kWordBits];
    const Word mask = Word{1} << (c % kWordBits);
    w = value ? (w | mask) : (w & ~mask);
  }
  void flip(std::size_t r, std::size_t c) {
    words_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
  }

  std::span<const Word> row(std::size_t r) const {
    return {words_.data() + r * stride_, stride_};
  }
  std::span<Word> row(std::size_t r) {
    return {words_.data() + r * stride_, stride_};
  }
  std::span<const Word> words() const { return words_; }

  BitMatrix &operator^=(const BitMatrix &other) {
    for (std::size_t k = 0; k < words_.size(); ++k)
      words_[k] ^= other.words_[k];
    return *this;
  }

  std::size_t popcount() const {
    std::size_t total = 0;
    for (Word w : words_)
      total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  std::size_t row_popcount(std::size_t r) const {
    std::size_t total = 0;
    for (Word w : row(r))
      total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool is_zero() const {
    for (Word w : words_)
      if (w != 0)
        return false;
    return true;
  }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c))
          t.set(c, r);
    return t;
  }

  friend bool operator==(const BitMatrix &, const BitMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> words_;
};

} // namespace t2sum

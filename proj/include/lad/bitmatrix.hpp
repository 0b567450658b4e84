#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lad {

/// Row-major packed bit matrix. Rows are padded to whole 64-bit words so a
/// row can be handed around as a span of words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(size_t rows, size_t cols)
      : rows_(rows),
        cols_(cols),
        words_per_row_((cols + 63) / 64),
        words_(rows * words_per_row_, 0) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t words_per_row() const { return words_per_row_; }

  bool get(size_t r, size_t c) const {
    return (words_[r * words_per_row_ + (c >> 6)] >> (c & 63)) & 1;
  }
  void set(size_t r, size_t c, bool v) {
    uint64_t& w = words_[r * words_per_row_ + (c >> 6)];
    const uint64_t mask = uint64_t{1} << (c & 63);
    if (v)
      w |= mask;
    else
      w &= ~mask;
  }

  std::span<const uint64_t> row(size_t r) const {
    return {words_.data() + r * words_per_row_, words_per_row_};
  }

  bool operator==(const BitMatrix& other) const = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  size_t words_per_row_ = 0;
  std::vector<uint64_t> words_;
};

/// One column of a bit matrix packed over rows; the working representation
/// for column-sliced scans (support-set scoring, pattern coverage).
class BitColumn {
 public:
  BitColumn() = default;
  explicit BitColumn(size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  size_t size() const { return bits_; }
  bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool v) {
    uint64_t& w = words_[i >> 6];
    const uint64_t mask = uint64_t{1} << (i & 63);
    if (v)
      w |= mask;
    else
      w &= ~mask;
  }

  std::span<const uint64_t> words() const { return words_; }
  std::span<uint64_t> words() { return words_; }

  size_t popcount() const {
    size_t n = 0;
    for (uint64_t w : words_) n += static_cast<size_t>(__builtin_popcountll(w));
    return n;
  }

  /// this &= other
  void intersect(const BitColumn& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  }
  /// this &= ~other
  void subtract(const BitColumn& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  }
  /// Number of set bits shared with `other`.
  size_t intersection_count(const BitColumn& other) const {
    size_t n = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      n += static_cast<size_t>(__builtin_popcountll(words_[i] & other.words_[i]));
    return n;
  }
  bool intersects(const BitColumn& other) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  /// Indices of set bits, ascending.
  std::vector<size_t> set_bits() const {
    std::vector<size_t> out;
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      uint64_t w = words_[wi];
      while (w) {
        out.push_back(wi * 64 + static_cast<size_t>(__builtin_ctzll(w)));
        w &= w - 1;
      }
    }
    return out;
  }

 private:
  size_t bits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace lad

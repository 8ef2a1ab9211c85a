#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spinkirby {

// Dense vector over the field with two elements.
//
// Ordering is lexicographic on the bit sequence read from index 0, with
// 0 < 1, so (0,1) < (1,0).
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}
  static BitVector from_bits(const std::vector<int>& bits);
  // "0110" -> (0,1,1,0); any other character is rejected.
  static BitVector from_string(std::string_view s);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, bool v = true);
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  std::size_t count() const noexcept;
  bool any() const noexcept;
  // Inner product mod 2.
  bool dot(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  BitVector concat(const BitVector& tail) const;
  BitVector select(const std::vector<std::size_t>& indices) const;
  std::vector<int> to_bits() const;
  // "(0,1,1)"; the empty vector prints as "()".
  std::string to_string() const;

  friend bool operator==(const BitVector& a, const BitVector& b) = default;
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Row-major matrix over the field with two elements.
class Mod2Matrix {
 public:
  Mod2Matrix() = default;
  Mod2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}
  static Mod2Matrix from_rows(const std::vector<std::vector<int>>& rows);
  static Mod2Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { data_[r].set(c, v); }
  const BitVector& row(std::size_t r) const { return data_[r]; }

  BitVector multiply(const BitVector& x) const;

  friend bool operator==(const Mod2Matrix&, const Mod2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

}  // namespace spinkirby

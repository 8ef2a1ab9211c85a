#include "spinkirby/bits.hpp"

#include <algorithm>
#include <bit>

#include "spinkirby/error.hpp"

namespace spinkirby {

BitVector BitVector::from_bits(const std::vector<int>& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1)
      throw Error(ErrorCode::InvalidArgument, "bit vector entries must be 0 or 1", i);
    v.set(i, bits[i] == 1);
  }
  return v;
}

BitVector BitVector::from_string(std::string_view s) {
  BitVector v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1')
      throw Error(ErrorCode::InvalidArgument, "bit string must contain only 0 and 1", i);
    v.set(i, s[i] == '1');
  }
  return v;
}

void BitVector::set(std::size_t i, bool v) {
  const auto mask = std::uint64_t{1} << (i % 64);
  if (v)
    words_[i / 64] |= mask;
  else
    words_[i / 64] &= ~mask;
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::any() const noexcept {
  for (auto w : words_)
    if (w) return true;
  return false;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_)
    throw Error(ErrorCode::DimensionMismatch, "dot product of bit vectors of different length");
  unsigned parity = 0;
  for (std::size_t k = 0; k < words_.size(); ++k)
    parity ^= static_cast<unsigned>(std::popcount(words_[k] & other.words_[k]));
  return parity & 1u;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_)
    throw Error(ErrorCode::DimensionMismatch, "xor of bit vectors of different length");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

BitVector BitVector::concat(const BitVector& tail) const {
  BitVector out(size_ + tail.size_);
  for (std::size_t i = 0; i < size_; ++i) out.set(i, get(i));
  for (std::size_t i = 0; i < tail.size_; ++i) out.set(size_ + i, tail.get(i));
  return out;
}

BitVector BitVector::select(const std::vector<std::size_t>& indices) const {
  BitVector out(indices.size());
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= size_)
      throw Error(ErrorCode::IndexOutOfRange, "bit index out of range", indices[k]);
    out.set(k, get(indices[k]));
  }
  return out;
}

std::vector<int> BitVector::to_bits() const {
  std::vector<int> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = get(i) ? 1 : 0;
  return out;
}

std::string BitVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) s += ',';
    s += get(i) ? '1' : '0';
  }
  s += ')';
  return s;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
  const std::size_t common = std::min(a.words_.size(), b.words_.size());
  for (std::size_t k = 0; k < common; ++k) {
    const auto diff = a.words_[k] ^ b.words_[k];
    if (diff) {
      // Lowest set bit is the first differing index.
      const auto bit = std::uint64_t{1} << std::countr_zero(diff);
      return (a.words_[k] & bit) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return a.size_ <=> b.size_;
}

Mod2Matrix Mod2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Mod2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::DimensionMismatch, "ragged rows in mod 2 matrix", r);
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, (rows[r][c] % 2) != 0);
  }
  return m;
}

Mod2Matrix Mod2Matrix::identity(std::size_t n) {
  Mod2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitVector Mod2Matrix::multiply(const BitVector& x) const {
  if (x.size() != cols_)
    throw Error(ErrorCode::DimensionMismatch, "mod 2 matrix-vector size mismatch");
  BitVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) y.set(r, data_[r].dot(x));
  return y;
}

}  // namespace spinkirby

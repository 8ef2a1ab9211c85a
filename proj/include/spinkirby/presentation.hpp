#pragma once

// Surgery presentations carrying a spin structure.
//
// A spin structure on the surgered manifold is a characteristic vector c
// of the linking matrix b: b c ≡ diag(b) (mod 2), with c_i = 1 marking
// component i as a member of the characteristic sublink.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "spinkirby/bits.hpp"
#include "spinkirby/exactlin.hpp"

namespace spinkirby {

class SpinPresentation {
 public:
  // The empty link, i.e. S³ with its unique spin structure.
  SpinPresentation() = default;

  // Throws DimensionMismatch or NotCharacteristic (position = first bad row).
  static SpinPresentation validate(IntSymMatrix b, BitVector c);

  const IntSymMatrix& matrix() const noexcept { return b_; }
  const BitVector& characteristic() const noexcept { return c_; }
  std::size_t size() const noexcept { return b_.size(); }

  friend bool operator==(const SpinPresentation&, const SpinPresentation&) = default;

 private:
  SpinPresentation(IntSymMatrix b, BitVector c) : b_(std::move(b)), c_(std::move(c)) {}

  IntSymMatrix b_;
  BitVector c_;
};

// Index of the first row where (b c)_i ≢ b_ii (mod 2), if any.
std::optional<std::size_t> first_characteristic_violation(const IntSymMatrix& b, const BitVector& c);
inline bool is_characteristic(const IntSymMatrix& b, const BitVector& c) {
  return c.size() == b.size() && !first_characteristic_violation(b, c);
}

// Affine description of all characteristic vectors of b. Always solvable.
Mod2AffineSolutionSet characteristic_solutions(const IntSymMatrix& b);

// All characteristic vectors in lexicographic order. Throws TooManySolutions
// when the mod 2 nullity exceeds max_nullity.
std::vector<BitVector> characteristic_vectors(const IntSymMatrix& b, std::size_t max_nullity = 20);

// log2 of the number of spin structures: n - rank of b over GF(2).
std::size_t spin_nullity(const IntSymMatrix& b);
// |H¹(M; Z/2)| = 2^nullity. Throws Overflow when it does not fit.
std::uint64_t spin_count(const IntSymMatrix& b);

// Connected sum, presented by the split union of the two links.
SpinPresentation block_sum(const SpinPresentation& p, const SpinPresentation& q);

struct SublinkSelector {
  std::set<std::size_t> components;
};

// Principal submatrix on the selected components. Throws IndexOutOfRange.
IntSymMatrix sublink(const SpinPresentation& p, const SublinkSelector& s);

}  // namespace spinkirby

#include "spinkirby/presentation.hpp"

#include <string>

#include "spinkirby/error.hpp"

namespace spinkirby {

std::optional<std::size_t> first_characteristic_violation(const IntSymMatrix& b, const BitVector& c) {
  if (c.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "characteristic vector length " + std::to_string(c.size()) +
                                                  " does not match matrix size " + std::to_string(b.size()));
  const std::size_t n = b.size();
  for (std::size_t i = 0; i < n; ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (c[j]) row += b(i, j);
    row -= b(i, i);
    if (mpz_odd_p(row.get_mpz_t())) return i;
  }
  return std::nullopt;
}

SpinPresentation SpinPresentation::validate(IntSymMatrix b, BitVector c) {
  if (auto row = first_characteristic_violation(b, c))
    throw Error(ErrorCode::NotCharacteristic,
                "characteristic condition fails at row " + std::to_string(*row), *row);
  return SpinPresentation(std::move(b), std::move(c));
}

Mod2AffineSolutionSet characteristic_solutions(const IntSymMatrix& b) {
  return mod2_solve_affine(b.mod2(), b.diagonal_mod2());
}

std::vector<BitVector> characteristic_vectors(const IntSymMatrix& b, std::size_t max_nullity) {
  return characteristic_solutions(b).enumerate(max_nullity);
}

std::size_t spin_nullity(const IntSymMatrix& b) { return b.size() - mod2_rank(b.mod2()); }

std::uint64_t spin_count(const IntSymMatrix& b) {
  const auto k = spin_nullity(b);
  if (k >= 64) throw Error(ErrorCode::Overflow, "spin structure count 2^" + std::to_string(k) + " overflows");
  return std::uint64_t{1} << k;
}

SpinPresentation block_sum(const SpinPresentation& p, const SpinPresentation& q) {
  return SpinPresentation::validate(p.matrix().block_sum(q.matrix()),
                                    p.characteristic().concat(q.characteristic()));
}

IntSymMatrix sublink(const SpinPresentation& p, const SublinkSelector& s) {
  const std::vector<std::size_t> idx(s.components.begin(), s.components.end());
  return p.matrix().principal_submatrix(idx);
}

}  // namespace spinkirby

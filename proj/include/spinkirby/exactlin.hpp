#pragma once

// Exact linear algebra over Z, Q and GF(2).

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spinkirby/bits.hpp"

namespace spinkirby {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntMatrix from_integer_rows(const std::vector<std::vector<Integer>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Symmetric integer matrix; symmetry holds by construction.
class IntSymMatrix {
 public:
  IntSymMatrix() = default;
  explicit IntSymMatrix(std::size_t n) : n_(n), data_(n * n) {}
  // Throws NotSymmetric / DimensionMismatch.
  static IntSymMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntSymMatrix from_integer_rows(const std::vector<std::vector<Integer>>& rows);
  static IntSymMatrix from_matrix(const IntMatrix& m);
  static IntSymMatrix diagonal(const std::vector<long>& entries);

  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  // Writes both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, const Integer& v);

  IntMatrix to_matrix() const;
  IntSymMatrix principal_submatrix(std::span<const std::size_t> indices) const;
  IntSymMatrix without(std::size_t index) const;
  // Block-diagonal b ⊕ other.
  IntSymMatrix block_sum(const IntSymMatrix& other) const;

  // xᵀ b x over Z.
  Integer quadratic_form(const BitVector& x) const;
  Mod2Matrix mod2() const;
  BitVector diagonal_mod2() const;

  std::string to_string() const;

  friend bool operator==(const IntSymMatrix&, const IntSymMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> data_;
};

// Solutions of m x = d over GF(2): particular + span(kernel_basis).
struct Mod2AffineSolutionSet {
  std::size_t dimension = 0;  // number of unknowns
  std::optional<BitVector> particular;
  std::vector<BitVector> kernel_basis;

  bool solvable() const noexcept { return particular.has_value(); }
  std::size_t nullity() const noexcept { return kernel_basis.size(); }

  // Every solution, in lexicographic order. Empty if unsolvable.
  // Throws TooManySolutions above max_nullity.
  std::vector<BitVector> enumerate(std::size_t max_nullity = 20) const;
};

std::size_t mod2_rank(const Mod2Matrix& m);
Mod2AffineSolutionSet mod2_solve_affine(const Mod2Matrix& m, const BitVector& d);

// Counts of positive, negative and zero directions of a symmetric form.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  long signature() const noexcept {
    return static_cast<long>(positive) - static_cast<long>(negative);
  }
  std::size_t rank() const noexcept { return positive + negative; }
};

// Symmetric congruence diagonalization over Q.
Inertia inertia(const IntSymMatrix& b);
long signature(const IntSymMatrix& b);
std::size_t rank_q(const IntSymMatrix& b);

// Fraction-free (Bareiss) elimination. det of 0x0 is 1.
Integer det(const IntMatrix& m);
Integer det(const IntSymMatrix& b);

// Pᵀ b P.
IntSymMatrix congruence(const IntSymMatrix& b, const IntMatrix& p);

}  // namespace spinkirby

#pragma once

// Invariants of spin surgery presentations, the alternating-sum (finite
// type) machinery over surgery schemes, and the Casson surgery recursion.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spinkirby/exactlin.hpp"
#include "spinkirby/laurent.hpp"
#include "spinkirby/presentation.hpp"

namespace spinkirby {

enum class ValueGroup { Integers, IntegersMod2 };

const char* to_string(ValueGroup g);

// An element of Z or Z/2. Mod 2 values are kept reduced to {0, 1}.
class InvariantValue {
 public:
  InvariantValue(ValueGroup group, Integer value);
  static InvariantValue zero(ValueGroup group) { return InvariantValue(group, 0); }

  ValueGroup group() const noexcept { return group_; }
  const Integer& value() const noexcept { return value_; }
  bool is_zero() const { return value_ == 0; }

  // Throws InvalidArgument when the groups differ.
  InvariantValue& operator+=(const InvariantValue& other);
  InvariantValue& operator-=(const InvariantValue& other);
  friend InvariantValue operator+(InvariantValue a, const InvariantValue& b) { return a += b; }
  friend InvariantValue operator-(InvariantValue a, const InvariantValue& b) { return a -= b; }
  friend bool operator==(const InvariantValue&, const InvariantValue&) = default;

 private:
  ValueGroup group_;
  Integer value_;
};

struct Invariant {
  std::string name;
  ValueGroup group;
  std::function<InvariantValue(const SpinPresentation&)> evaluate;
};

// I(M, s) = (n + cᵀ b c) mod 2. Equals the Euler characteristic of a spin
// 0-cobordism minus one (mod 2) when c = 0, and is unchanged by every spin
// Kirby move.
InvariantValue rohlin_mod2(const SpinPresentation& p);

Invariant rohlin_invariant();
Invariant constant_invariant(long value = 1, ValueGroup group = ValueGroup::Integers);

struct SigmaRankReport {
  long signature = 0;
  std::size_t rank = 0;
  std::size_t components = 0;
  Integer det;
  // signature ≡ rank ≡ n (mod 2)
  bool consistent = false;
};

// Throws DegeneratePresentation when det(b) == 0.
SigmaRankReport check_sigma_rank_consistency(const SpinPresentation& p);

// ---------------------------------------------------------------------------
// Surgery schemes

// A base presentation bordered by m extra components. The full matrix has
// the base matrix as its leading block; extras occupy indices n..n+m-1.
// Extra membership bits may be declared for the Declared policy.
class SurgeryScheme {
 public:
  // Throws InvalidScheme.
  static SurgeryScheme make(SpinPresentation base, IntSymMatrix full,
                            std::optional<BitVector> extras_c = std::nullopt);

  const SpinPresentation& base() const noexcept { return base_; }
  const IntSymMatrix& full() const noexcept { return full_; }
  const std::optional<BitVector>& extras_c() const noexcept { return extras_c_; }
  std::size_t base_size() const noexcept { return base_.size(); }
  std::size_t extra_count() const noexcept { return full_.size() - base_.size(); }
  std::vector<std::size_t> extras() const;

  // Keeps only the given extras (absolute indices), in order.
  SurgeryScheme restrict_to(const std::vector<std::size_t>& extras) const;

 private:
  SurgeryScheme(SpinPresentation base, IntSymMatrix full, std::optional<BitVector> extras_c)
      : base_(std::move(base)), full_(std::move(full)), extras_c_(std::move(extras_c)) {}

  SpinPresentation base_;
  IntSymMatrix full_;
  std::optional<BitVector> extras_c_;
};

// How the spin structure of the surgery on base ∪ T is chosen.
//   Unique    the characteristic extension of base.c must be unique
//   Declared  base.c extended by the declared extra bits; must be characteristic
//   Average   average of v over all extensions (count must be odd mod 2,
//             and the sum must be divisible by the count over Z)
enum class ExtensionPolicy { Unique, Declared, Average };

const char* to_string(ExtensionPolicy p);

// Characteristic vectors of the submatrix on base ∪ subset extending base.c,
// in lexicographic order. `subset` holds absolute extra indices.
std::vector<BitVector> characteristic_extensions(const SurgeryScheme& s, const std::vector<std::size_t>& subset);

// Σ_{T ⊆ extras} (-1)^{|T|} v(M_{base ∪ T}). Throws AmbiguousExtension or
// NoExtension naming the offending subset.
InvariantValue vassiliev_sum(const SurgeryScheme& s, const Invariant& v, ExtensionPolicy policy);

struct SubsetSum {
  std::vector<std::size_t> extras;  // absolute indices
  InvariantValue value;
};

// The alternating sum restricted to every `size`-subset of the extras,
// subsets in lexicographic order.
std::vector<SubsetSum> alternating_sums(const SurgeryScheme& s, const Invariant& v, ExtensionPolicy policy,
                                        std::size_t size);

struct OrderFailure {
  std::size_t scheme = 0;
  SubsetSum sum;
};

struct OrderReport {
  std::size_t order = 0;
  bool pass = true;
  std::size_t sums_checked = 0;
  std::vector<OrderFailure> failures;
};

// Passes iff every (k+1)-fold alternating sum vanishes on every scheme.
// Throws InvalidArgument when a scheme has fewer than k+1 extras.
OrderReport order_at_most(const Invariant& v, std::size_t k, const std::vector<SurgeryScheme>& schemes,
                          ExtensionPolicy policy);

// ---------------------------------------------------------------------------
// Alexander polynomials and the Casson surgery recursion

// Square integer matrix V with det(V - Vᵀ) = 1.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;
  // Throws InvalidSeifertMatrix.
  static SeifertMatrix validate(IntMatrix v);

  const IntMatrix& matrix() const noexcept { return v_; }
  std::size_t genus() const noexcept { return v_.rows() / 2; }

 private:
  explicit SeifertMatrix(IntMatrix v) : v_(std::move(v)) {}
  IntMatrix v_;
};

// det(V - t Vᵀ) normalized by ±t^k to be symmetric with Δ(1) = 1.
LaurentPolynomial alexander_from_seifert(const SeifertMatrix& v);

// ½ Δ''(1). Throws NotNormalized or OddSecondDerivative.
Integer half_second_derivative_at_1(const LaurentPolynomial& d);

// λ(M(K_n)) for the (1,n) surgery on a knot with Alexander polynomial d,
// by telescoping from λ(M(K_0)) = λ(S³) = 0.
Integer casson(const LaurentPolynomial& d, long n);

}  // namespace spinkirby

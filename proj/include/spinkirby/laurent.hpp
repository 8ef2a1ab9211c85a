#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace spinkirby {

// Integer Laurent polynomial in t. Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(long constant);  // NOLINT: implicit promotion from integers is intended
  LaurentPolynomial(const mpz_class& constant);  // NOLINT
  static LaurentPolynomial monomial(const mpz_class& coeff, long exponent);
  // coeffs[k] is the coefficient of t^(lowest + k).
  static LaurentPolynomial from_coefficients(const std::vector<long>& coeffs, long lowest = 0);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<long, mpz_class>& terms() const noexcept { return terms_; }
  mpz_class coefficient(long exponent) const;
  // Undefined for the zero polynomial.
  long lowest_exponent() const { return terms_.begin()->first; }
  long highest_exponent() const { return terms_.rbegin()->first; }

  mpz_class evaluate_at_one() const;
  // f(t) == f(1/t).
  bool is_symmetric() const;
  LaurentPolynomial shifted(long k) const;  // t^k · f

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  // Exact quotient; throws InvalidArgument if `divisor` does not divide.
  LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const;

  // Ascending exponents, e.g. "t^-1 - 1 + t"; zero prints as "0".
  std::string to_string() const;

 private:
  void add_term(long exponent, const mpz_class& coeff);

  std::map<long, mpz_class> terms_;
};

using PolynomialMatrix = std::vector<std::vector<LaurentPolynomial>>;

// Fraction-free elimination over Z[t, t⁻¹]. det of 0x0 is 1.
LaurentPolynomial determinant(PolynomialMatrix m);

}  // namespace spinkirby

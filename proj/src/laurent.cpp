#include "spinkirby/laurent.hpp"

#include <sstream>
#include <utility>

#include "spinkirby/error.hpp"

namespace spinkirby {

LaurentPolynomial::LaurentPolynomial(long constant) { add_term(0, constant); }

LaurentPolynomial::LaurentPolynomial(const mpz_class& constant) { add_term(0, constant); }

LaurentPolynomial LaurentPolynomial::monomial(const mpz_class& coeff, long exponent) {
  LaurentPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPolynomial LaurentPolynomial::from_coefficients(const std::vector<long>& coeffs, long lowest) {
  LaurentPolynomial p;
  for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term(lowest + static_cast<long>(k), coeffs[k]);
  return p;
}

void LaurentPolynomial::add_term(long exponent, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class LaurentPolynomial::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class LaurentPolynomial::evaluate_at_one() const {
  mpz_class total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

bool LaurentPolynomial::is_symmetric() const {
  for (const auto& [e, c] : terms_)
    if (coefficient(-e) != c) return false;
  return true;
}

LaurentPolynomial LaurentPolynomial::shifted(long k) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator-(const LaurentPolynomial& a) {
  LaurentPolynomial out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  LaurentPolynomial quotient;
  LaurentPolynomial rem = *this;
  const long d_hi = divisor.highest_exponent();
  const long d_lo = divisor.lowest_exponent();
  const mpz_class& lead = divisor.terms_.rbegin()->second;
  while (!rem.is_zero()) {
    const long shift = rem.highest_exponent() - d_hi;
    // An exact quotient's support lies in [lo(rem) - lo(d), hi(rem) - hi(d)].
    if (shift < rem.lowest_exponent() - d_lo)
      throw Error(ErrorCode::InvalidArgument, "polynomial division is not exact");
    const mpz_class& top = rem.terms_.rbegin()->second;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw Error(ErrorCode::InvalidArgument, "polynomial division is not exact");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    const auto term = monomial(q, shift);
    quotient += term;
    rem -= term * divisor;
  }
  return quotient;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

LaurentPolynomial determinant(PolynomialMatrix a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  if (n == 0) return 1;
  LaurentPolynomial prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return LaurentPolynomial();
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).divide_exact(prev);
      a[i][k] = LaurentPolynomial();
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace spinkirby

#pragma once

// Test-only oracles. Each one computes its answer by a route that shares
// no code with the library path it is compared against.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "spinkirby/exactlin.hpp"
#include "spinkirby/laurent.hpp"

namespace oracle {

using spinkirby::BitVector;
using spinkirby::IntMatrix;
using spinkirby::IntSymMatrix;
using spinkirby::Integer;
using spinkirby::Mod2Matrix;
using spinkirby::Rational;

// Bit vector for the integer `code`, index 0 = most significant of n bits,
// so increasing codes give lexicographic order.
inline BitVector vector_from_code(std::uint64_t code, std::size_t n) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, (code >> (n - 1 - i)) & 1u);
  return v;
}

inline bool integer_odd(const Integer& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

// All c with b c ≡ diag(b) (mod 2), tried one by one.
inline std::vector<BitVector> brute_force_characteristic(const IntSymMatrix& b) {
  const std::size_t n = b.size();
  std::vector<BitVector> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    const auto c = vector_from_code(code, n);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (c[j]) s += b(i, j);
      ok = integer_odd(s) == integer_odd(b(i, i));
    }
    if (ok) out.push_back(c);
  }
  return out;
}

inline std::vector<BitVector> brute_force_solutions(const Mod2Matrix& m, const BitVector& d) {
  std::vector<BitVector> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << m.cols()); ++code) {
    const auto x = vector_from_code(code, m.cols());
    bool ok = true;
    for (std::size_t r = 0; r < m.rows() && ok; ++r) {
      bool acc = false;
      for (std::size_t c = 0; c < m.cols(); ++c) acc ^= (m.get(r, c) && x[c]);
      ok = acc == d[r];
    }
    if (ok) out.push_back(x);
  }
  return out;
}

// Sum over permutations.
inline Integer leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Integer term = 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
    if (inversions % 2) total -= term; else total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier; coeffs[k] is
// the coefficient of x^k.
inline std::vector<Integer> characteristic_polynomial(const IntSymMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Integer> coeff(n + 1);
  coeff[n] = 1;
  std::vector<Rational> m(n * n, 0);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    std::vector<Rational> next(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += Rational(a(i, l)) * m[l * n + j];
        if (i == j) s += Rational(coeff[n - k + 1]);
        next[i * n + j] = s;
      }
    m = std::move(next);
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += Rational(a(i, l)) * m[l * n + i];
    Rational c = -trace / static_cast<long>(k);
    coeff[n - k] = c.get_num();  // always integral
  }
  return coeff;
}

struct Inertia {
  std::size_t positive = 0, negative = 0, zero = 0;
};

// Descartes' rule is exact for real-rooted polynomials, which the
// characteristic polynomial of a symmetric matrix is.
inline Inertia inertia_by_descartes(const IntSymMatrix& a) {
  auto p = characteristic_polynomial(a);
  Inertia in;
  std::size_t low = 0;
  while (low < p.size() && p[low] == 0) ++low;
  in.zero = low;
  auto changes = [&](bool flip_odd) {
    std::size_t count = 0;
    int last = 0;
    for (std::size_t k = low; k < p.size(); ++k) {
      int s = sgn(p[k]);
      if (flip_odd && (k % 2)) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  in.positive = changes(false);
  in.negative = changes(true);
  return in;
}

// det(V - t Vᵀ) by permutation expansion over plain coefficient vectors,
// then shifted to be centred at t^0 and signed so that the value at 1 is +1.
inline spinkirby::LaurentPolynomial leibniz_alexander(const IntMatrix& v) {
  const std::size_t n = v.rows();
  std::vector<Integer> total(n + 1, 0);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::vector<Integer> term{1};
    for (std::size_t i = 0; i < n; ++i) {
      // entry (i, perm[i]) of V - tVᵀ is a + b t
      const Integer a = v(i, perm[i]);
      const Integer b = -v(perm[i], i);
      std::vector<Integer> next(term.size() + 1, 0);
      for (std::size_t k = 0; k < term.size(); ++k) {
        next[k] += term[k] * a;
        next[k + 1] += term[k] * b;
      }
      term = std::move(next);
    }
    for (std::size_t k = 0; k < term.size(); ++k) total[k] += (inversions % 2) ? Integer(-term[k]) : term[k];
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::size_t lo = 0, hi = total.size();
  while (lo < total.size() && total[lo] == 0) ++lo;
  while (hi > lo && total[hi - 1] == 0) --hi;
  Integer at_one = 0;
  for (const auto& x : total) at_one += x;
  const long centre = static_cast<long>(lo + hi - 1) / 2;
  spinkirby::LaurentPolynomial out;
  for (std::size_t k = lo; k < hi; ++k) {
    const Integer c = at_one < 0 ? Integer(-total[k]) : total[k];
    out += spinkirby::LaurentPolynomial::monomial(c, static_cast<long>(k) - centre);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generators

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline IntSymMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long lo = -5, long hi = 5) {
  IntSymMatrix b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) b.set(i, j, uniform(rng, lo, hi));
  return b;
}

inline Mod2Matrix random_mod2(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Mod2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1u);
  return m;
}

// Product of random elementary row operations, swaps and sign flips.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, std::size_t ops = 8) {
  IntMatrix p = IntMatrix::identity(n);
  if (n == 0) return p;
  for (std::size_t k = 0; k < ops; ++k) {
    const auto kind = rng() % 3;
    const std::size_t i = rng() % n;
    std::size_t j = rng() % n;
    if (kind == 0 && n > 1) {
      if (j == i) j = (i + 1) % n;
      const long f = uniform(rng, -2, 2);
      for (std::size_t c = 0; c < n; ++c) p(i, c) += f * p(j, c);
    } else if (kind == 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(p(i, c), p(j, c));
    } else {
      for (std::size_t c = 0; c < n; ++c) p(i, c) = -p(i, c);
    }
  }
  return p;
}

// Pᵀ (S + U) P where S is random symmetric and U - Uᵀ is the standard
// symplectic form, so det(V - Vᵀ) = det(P)² = 1.
inline IntMatrix random_seifert(std::mt19937_64& rng, std::size_t genus) {
  const std::size_t n = 2 * genus;
  const auto s = random_symmetric(rng, n, -3, 3);
  IntMatrix v = s.to_matrix();
  for (std::size_t g = 0; g < genus; ++g) v(2 * g, 2 * g + 1) += 1;
  const auto p = random_unimodular(rng, n, 6);
  return p.transpose() * v * p;
}

}  // namespace oracle

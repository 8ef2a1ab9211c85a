#include "spinkirby/exactlin.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <utility>

#include "spinkirby/error.hpp"

namespace spinkirby {

namespace {

template <typename T>
IntMatrix matrix_from_rows(const std::vector<std::vector<T>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows", r);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Integer(rows[r][c]);
  }
  return m;
}

}  // namespace

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  return matrix_from_rows(rows);
}

IntMatrix IntMatrix::from_integer_rows(const std::vector<std::vector<Integer>>& rows) {
  return matrix_from_rows(rows);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product size mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
    }
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix difference size mismatch");
  IntMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

IntSymMatrix IntSymMatrix::from_matrix(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  IntSymMatrix b(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i))
        throw Error(ErrorCode::NotSymmetric,
                    "matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")",
                    i);
      b.data_[i * b.n_ + j] = m(i, j);
    }
  return b;
}

IntSymMatrix IntSymMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  auto m = IntMatrix::from_rows(rows);
  if (!rows.empty() && m.cols() != m.rows())
    throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  return from_matrix(m);
}

IntSymMatrix IntSymMatrix::from_integer_rows(const std::vector<std::vector<Integer>>& rows) {
  auto m = IntMatrix::from_integer_rows(rows);
  if (!rows.empty() && m.cols() != m.rows())
    throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  return from_matrix(m);
}

IntSymMatrix IntSymMatrix::diagonal(const std::vector<long>& entries) {
  IntSymMatrix b(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) b.set(i, i, entries[i]);
  return b;
}

void IntSymMatrix::set(std::size_t i, std::size_t j, const Integer& v) {
  data_[i * n_ + j] = v;
  data_[j * n_ + i] = v;
}

IntMatrix IntSymMatrix::to_matrix() const {
  IntMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

IntSymMatrix IntSymMatrix::principal_submatrix(std::span<const std::size_t> indices) const {
  IntSymMatrix sub(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a) {
    if (indices[a] >= n_)
      throw Error(ErrorCode::IndexOutOfRange, "component index out of range", indices[a]);
    for (std::size_t b = 0; b < indices.size(); ++b) {
      if (indices[b] >= n_)
        throw Error(ErrorCode::IndexOutOfRange, "component index out of range", indices[b]);
      sub.data_[a * sub.n_ + b] = (*this)(indices[a], indices[b]);
    }
  }
  return sub;
}

IntSymMatrix IntSymMatrix::without(std::size_t index) const {
  if (index >= n_) throw Error(ErrorCode::IndexOutOfRange, "component index out of range", index);
  std::vector<std::size_t> keep;
  keep.reserve(n_ - 1);
  for (std::size_t i = 0; i < n_; ++i)
    if (i != index) keep.push_back(i);
  return principal_submatrix(keep);
}

IntSymMatrix IntSymMatrix::block_sum(const IntSymMatrix& other) const {
  IntSymMatrix out(n_ + other.n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out.data_[i * out.n_ + j] = (*this)(i, j);
  for (std::size_t i = 0; i < other.n_; ++i)
    for (std::size_t j = 0; j < other.n_; ++j)
      out.data_[(n_ + i) * out.n_ + (n_ + j)] = other(i, j);
  return out;
}

Integer IntSymMatrix::quadratic_form(const BitVector& x) const {
  if (x.size() != n_) throw Error(ErrorCode::DimensionMismatch, "vector length does not match matrix");
  Integer total = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (x[j]) total += (*this)(i, j);
  }
  return total;
}

Mod2Matrix IntSymMatrix::mod2() const {
  Mod2Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m.set(i, j, mpz_odd_p((*this)(i, j).get_mpz_t()) != 0);
  return m;
}

BitVector IntSymMatrix::diagonal_mod2() const {
  BitVector d(n_);
  for (std::size_t i = 0; i < n_; ++i) d.set(i, mpz_odd_p((*this)(i, i).get_mpz_t()) != 0);
  return d;
}

std::string IntSymMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

struct Echelon {
  std::vector<BitVector> rows;        // reduced rows of [m | d]
  std::vector<std::size_t> pivots;    // pivot column of each row
  bool inconsistent = false;
};

// Gauss-Jordan on [m | d]; the augmented column is index m.cols().
Echelon reduce(const Mod2Matrix& m, const BitVector* d) {
  const std::size_t cols = m.cols();
  const std::size_t width = cols + (d ? 1 : 0);
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BitVector row(width);
    for (std::size_t c = 0; c < cols; ++c) row.set(c, m.get(r, c));
    if (d) row.set(cols, d->get(r));
    rows.push_back(std::move(row));
  }

  Echelon e;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t pivot = next;
    while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[next]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != next && rows[r][c]) rows[r] ^= rows[next];
    e.pivots.push_back(c);
    ++next;
  }
  if (d)
    for (std::size_t r = next; r < rows.size(); ++r)
      if (rows[r][cols]) e.inconsistent = true;
  rows.resize(next);
  e.rows = std::move(rows);
  return e;
}

}  // namespace

std::size_t mod2_rank(const Mod2Matrix& m) { return reduce(m, nullptr).pivots.size(); }

Mod2AffineSolutionSet mod2_solve_affine(const Mod2Matrix& m, const BitVector& d) {
  if (d.size() != m.rows())
    throw Error(ErrorCode::DimensionMismatch, "right-hand side length does not match row count");
  const std::size_t cols = m.cols();
  const Echelon e = reduce(m, &d);

  Mod2AffineSolutionSet out;
  out.dimension = cols;

  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;

  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    BitVector v(cols);
    v.set(f);
    for (std::size_t r = 0; r < e.rows.size(); ++r)
      if (e.rows[r][f]) v.set(e.pivots[r]);
    out.kernel_basis.push_back(std::move(v));
  }

  if (!e.inconsistent) {
    BitVector x(cols);
    for (std::size_t r = 0; r < e.rows.size(); ++r)
      if (e.rows[r][cols]) x.set(e.pivots[r]);
    out.particular = std::move(x);
  }
  return out;
}

std::vector<BitVector> Mod2AffineSolutionSet::enumerate(std::size_t max_nullity) const {
  if (!particular) return {};
  const std::size_t k = kernel_basis.size();
  if (k > max_nullity)
    throw Error(ErrorCode::TooManySolutions,
                "solution space has dimension " + std::to_string(k) + ", above the enumeration limit " +
                    std::to_string(max_nullity));
  std::vector<BitVector> out;
  out.reserve(std::size_t{1} << k);
  // Gray-code walk: consecutive solutions differ by one basis vector.
  BitVector x = *particular;
  out.push_back(x);
  for (std::size_t step = 1; step < (std::size_t{1} << k); ++step) {
    x ^= kernel_basis[static_cast<std::size_t>(std::countr_zero(step))];
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Inertia inertia(const IntSymMatrix& b) {
  const std::size_t n = b.size();
  std::vector<Rational> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = b(i, j);
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };

  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  Inertia result;
  auto drop = [&](std::size_t idx) { active.erase(std::find(active.begin(), active.end(), idx)); };

  while (!active.empty()) {
    auto diag = std::find_if(active.begin(), active.end(), [&](std::size_t k) { return sgn(at(k, k)) != 0; });
    if (diag != active.end()) {
      const std::size_t k = *diag;
      const Rational pivot = at(k, k);
      (sgn(pivot) > 0 ? result.positive : result.negative) += 1;
      drop(k);
      for (auto r : active) {
        if (sgn(at(r, k)) == 0) continue;
        const Rational factor = at(r, k) / pivot;
        for (auto s : active) at(r, s) -= factor * at(k, s);
      }
      continue;
    }

    // All remaining diagonal entries vanish: look for a hyperbolic pair.
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t x = 0; x < active.size() && !pair; ++x)
      for (std::size_t y = x + 1; y < active.size() && !pair; ++y)
        if (sgn(at(active[x], active[y])) != 0) pair = {active[x], active[y]};
    if (!pair) break;

    const auto [i, j] = *pair;
    const Rational h = at(i, j);
    result.positive += 1;
    result.negative += 1;
    drop(i);
    drop(j);
    // Schur complement of the block [[0,h],[h,0]].
    std::vector<Rational> ri, rj;
    for (auto r : active) {
      ri.push_back(at(r, i));
      rj.push_back(at(r, j));
    }
    for (std::size_t x = 0; x < active.size(); ++x)
      for (std::size_t y = 0; y < active.size(); ++y)
        at(active[x], active[y]) -= (ri[x] * rj[y] + rj[x] * ri[y]) / h;
  }
  result.zero = n - result.rank();
  return result;
}

long signature(const IntSymMatrix& b) { return inertia(b).signature(); }

std::size_t rank_q(const IntSymMatrix& b) { return inertia(b).rank(); }

Integer det(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Integer d = a(n - 1, n - 1);
  return sign < 0 ? Integer(-d) : d;
}

Integer det(const IntSymMatrix& b) { return det(b.to_matrix()); }

IntSymMatrix congruence(const IntSymMatrix& b, const IntMatrix& p) {
  if (p.rows() != b.size()) throw Error(ErrorCode::DimensionMismatch, "congruence size mismatch");
  return IntSymMatrix::from_matrix(p.transpose() * b.to_matrix() * p);
}

}  // namespace spinkirby

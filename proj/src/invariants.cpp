#include "spinkirby/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "spinkirby/error.hpp"

namespace spinkirby {

const char* to_string(ValueGroup g) {
  return g == ValueGroup::Integers ? "Z" : "Z/2";
}

const char* to_string(ExtensionPolicy p) {
  switch (p) {
    case ExtensionPolicy::Unique: return "unique";
    case ExtensionPolicy::Declared: return "declared";
    case ExtensionPolicy::Average: return "average";
  }
  return "unknown";
}

InvariantValue::InvariantValue(ValueGroup group, Integer value) : group_(group), value_(std::move(value)) {
  if (group_ == ValueGroup::IntegersMod2) value_ = mpz_odd_p(value_.get_mpz_t()) ? 1 : 0;
}

InvariantValue& InvariantValue::operator+=(const InvariantValue& other) {
  if (group_ != other.group_) throw Error(ErrorCode::InvalidArgument, "adding values from different groups");
  *this = InvariantValue(group_, value_ + other.value_);
  return *this;
}

InvariantValue& InvariantValue::operator-=(const InvariantValue& other) {
  if (group_ != other.group_) throw Error(ErrorCode::InvalidArgument, "subtracting values from different groups");
  *this = InvariantValue(group_, value_ - other.value_);
  return *this;
}

InvariantValue rohlin_mod2(const SpinPresentation& p) {
  const Integer n = static_cast<unsigned long>(p.size());
  return InvariantValue(ValueGroup::IntegersMod2, n + p.matrix().quadratic_form(p.characteristic()));
}

Invariant rohlin_invariant() { return Invariant{"I", ValueGroup::IntegersMod2, rohlin_mod2}; }

Invariant constant_invariant(long value, ValueGroup group) {
  return Invariant{"const", group, [value, group](const SpinPresentation&) { return InvariantValue(group, value); }};
}

SigmaRankReport check_sigma_rank_consistency(const SpinPresentation& p) {
  SigmaRankReport r;
  r.det = det(p.matrix());
  if (r.det == 0)
    throw Error(ErrorCode::DegeneratePresentation, "det(b) = 0; the signature/rank congruence is not asserted");
  const auto in = inertia(p.matrix());
  r.signature = in.signature();
  r.rank = in.rank();
  r.components = p.size();
  const auto parity = [](long x) { return ((x % 2) + 2) % 2; };
  r.consistent = parity(r.signature) == parity(static_cast<long>(r.rank)) &&
                 parity(static_cast<long>(r.rank)) == parity(static_cast<long>(r.components));
  return r;
}

// ---------------------------------------------------------------------------

SurgeryScheme SurgeryScheme::make(SpinPresentation base, IntSymMatrix full, std::optional<BitVector> extras_c) {
  const std::size_t n = base.size();
  if (full.size() < n)
    throw Error(ErrorCode::InvalidScheme, "full matrix is smaller than the base presentation");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (full(i, j) != base.matrix()(i, j))
        throw Error(ErrorCode::InvalidScheme,
                    "leading block differs from the base matrix at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")",
                    i);
  if (extras_c && extras_c->size() != full.size() - n)
    throw Error(ErrorCode::InvalidScheme, "declared extra bits do not match the number of extras");
  return SurgeryScheme(std::move(base), std::move(full), std::move(extras_c));
}

std::vector<std::size_t> SurgeryScheme::extras() const {
  std::vector<std::size_t> out(extra_count());
  std::iota(out.begin(), out.end(), base_size());
  return out;
}

SurgeryScheme SurgeryScheme::restrict_to(const std::vector<std::size_t>& keep) const {
  std::vector<std::size_t> idx(base_size());
  std::iota(idx.begin(), idx.end(), 0);
  std::optional<BitVector> bits;
  if (extras_c_) bits = BitVector(keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] < base_size() || keep[k] >= full_.size())
      throw Error(ErrorCode::IndexOutOfRange, "not an extra component", keep[k]);
    idx.push_back(keep[k]);
    if (bits) bits->set(k, (*extras_c_)[keep[k] - base_size()]);
  }
  return SurgeryScheme(base_, full_.principal_submatrix(idx), std::move(bits));
}

namespace {

std::vector<std::size_t> with_base(const SurgeryScheme& s, const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> idx(s.base_size());
  std::iota(idx.begin(), idx.end(), 0);
  for (auto e : subset) {
    if (e < s.base_size() || e >= s.full().size())
      throw Error(ErrorCode::IndexOutOfRange, "not an extra component", e);
    idx.push_back(e);
  }
  return idx;
}

std::string subset_string(const std::vector<std::size_t>& subset) {
  std::string out = "{";
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(subset[k]);
  }
  return out + "}";
}

}  // namespace

std::vector<BitVector> characteristic_extensions(const SurgeryScheme& s, const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  const auto idx = with_base(s, sorted);
  const auto& full = s.full();
  const auto& base_c = s.base().characteristic();
  const std::size_t n = s.base_size();

  // Unknowns are the membership bits of the chosen extras:
  //   Σ_{k ∈ T} b_rk x_k ≡ b_rr + Σ_{j ∈ base} b_rj c_j   for every row r.
  Mod2Matrix m(idx.size(), sorted.size());
  BitVector rhs(idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r) {
    const std::size_t row = idx[r];
    for (std::size_t k = 0; k < sorted.size(); ++k) m.set(r, k, mpz_odd_p(full(row, sorted[k]).get_mpz_t()) != 0);
    Integer target = full(row, row);
    for (std::size_t j = 0; j < n; ++j)
      if (base_c[j]) target += full(row, j);
    rhs.set(r, mpz_odd_p(target.get_mpz_t()) != 0);
  }

  std::vector<BitVector> out;
  for (const auto& x : mod2_solve_affine(m, rhs).enumerate()) out.push_back(base_c.concat(x));
  return out;
}

namespace {

InvariantValue evaluate_term(const SurgeryScheme& s, const std::vector<std::size_t>& subset, const Invariant& v,
                             ExtensionPolicy policy) {
  const auto idx = with_base(s, subset);
  const auto b = s.full().principal_submatrix(idx);

  if (policy == ExtensionPolicy::Declared) {
    if (!s.extras_c())
      throw Error(ErrorCode::InvalidArgument, "declared policy needs declared membership bits for the extras");
    BitVector x(subset.size());
    for (std::size_t k = 0; k < subset.size(); ++k) x.set(k, (*s.extras_c())[subset[k] - s.base_size()]);
    const auto c = s.base().characteristic().concat(x);
    if (!is_characteristic(b, c))
      throw Error(ErrorCode::NoExtension,
                  "declared membership is not characteristic on base + " + subset_string(subset), std::nullopt,
                  subset);
    return v.evaluate(SpinPresentation::validate(b, c));
  }

  const auto extensions = characteristic_extensions(s, subset);
  if (extensions.empty())
    throw Error(ErrorCode::NoExtension, "no characteristic extension on base + " + subset_string(subset),
                std::nullopt, subset);
  if (policy == ExtensionPolicy::Unique) {
    if (extensions.size() != 1)
      throw Error(ErrorCode::AmbiguousExtension,
                  std::to_string(extensions.size()) + " characteristic extensions on base + " +
                      subset_string(subset),
                  std::nullopt, subset);
    return v.evaluate(SpinPresentation::validate(b, extensions.front()));
  }

  auto total = InvariantValue::zero(v.group);
  for (const auto& c : extensions) total += v.evaluate(SpinPresentation::validate(b, c));
  const Integer count = static_cast<unsigned long>(extensions.size());
  if (v.group == ValueGroup::IntegersMod2) {
    if (extensions.size() % 2 == 0)
      throw Error(ErrorCode::AmbiguousExtension,
                  "even number of extensions on base + " + subset_string(subset) + "; mod 2 average undefined",
                  std::nullopt, subset);
    return total;  // 1/count ≡ 1 (mod 2)
  }
  if (!mpz_divisible_p(total.value().get_mpz_t(), count.get_mpz_t()))
    throw Error(ErrorCode::AmbiguousExtension,
                "average over extensions on base + " + subset_string(subset) + " is not integral", std::nullopt,
                subset);
  Integer avg;
  mpz_divexact(avg.get_mpz_t(), total.value().get_mpz_t(), count.get_mpz_t());
  return InvariantValue(v.group, avg);
}

}  // namespace

InvariantValue vassiliev_sum(const SurgeryScheme& s, const Invariant& v, ExtensionPolicy policy) {
  const auto extras = s.extras();
  if (extras.size() > 24)
    throw Error(ErrorCode::InvalidArgument, "too many extras for an alternating sum");
  auto total = InvariantValue::zero(v.group);
  for (std::size_t mask = 0; mask < (std::size_t{1} << extras.size()); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t k = 0; k < extras.size(); ++k)
      if (mask & (std::size_t{1} << k)) subset.push_back(extras[k]);
    const auto term = evaluate_term(s, subset, v, policy);
    if (subset.size() % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

std::vector<SubsetSum> alternating_sums(const SurgeryScheme& s, const Invariant& v, ExtensionPolicy policy,
                                        std::size_t size) {
  const auto extras = s.extras();
  std::vector<SubsetSum> out;
  if (size > extras.size()) return out;
  // Lexicographic walk over size-combinations of extras.
  std::vector<std::size_t> pos(size);
  std::iota(pos.begin(), pos.end(), 0);
  while (true) {
    std::vector<std::size_t> chosen;
    for (auto p : pos) chosen.push_back(extras[p]);
    out.push_back(SubsetSum{chosen, vassiliev_sum(s.restrict_to(chosen), v, policy)});

    std::size_t k = size;
    while (k > 0 && pos[k - 1] == extras.size() - size + (k - 1)) --k;
    if (k == 0) break;
    ++pos[k - 1];
    for (std::size_t r = k; r < size; ++r) pos[r] = pos[r - 1] + 1;
  }
  return out;
}

OrderReport order_at_most(const Invariant& v, std::size_t k, const std::vector<SurgeryScheme>& schemes,
                          ExtensionPolicy policy) {
  OrderReport report;
  report.order = k;
  for (std::size_t idx = 0; idx < schemes.size(); ++idx) {
    if (schemes[idx].extra_count() < k + 1)
      throw Error(ErrorCode::InvalidArgument,
                  "scheme " + std::to_string(idx) + " has fewer than " + std::to_string(k + 1) + " extras", idx);
    for (auto& sum : alternating_sums(schemes[idx], v, policy, k + 1)) {
      ++report.sums_checked;
      if (!sum.value.is_zero()) {
        report.pass = false;
        report.failures.push_back(OrderFailure{idx, std::move(sum)});
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

SeifertMatrix SeifertMatrix::validate(IntMatrix v) {
  if (!v.square()) throw Error(ErrorCode::InvalidSeifertMatrix, "Seifert matrix must be square");
  if (v.rows() % 2 != 0) throw Error(ErrorCode::InvalidSeifertMatrix, "Seifert matrix must have even size");
  const Integer d = det(v - v.transpose());
  if (d != 1)
    throw Error(ErrorCode::InvalidSeifertMatrix, "det(V - V^T) = " + d.get_str() + ", expected 1");
  return SeifertMatrix(std::move(v));
}

LaurentPolynomial alexander_from_seifert(const SeifertMatrix& s) {
  const auto& v = s.matrix();
  const std::size_t n = v.rows();
  PolynomialMatrix m(n, std::vector<LaurentPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = LaurentPolynomial(v(i, j)) - LaurentPolynomial::monomial(v(j, i), 1);
  auto p = determinant(std::move(m));
  if (p.is_zero()) throw Error(ErrorCode::InvalidSeifertMatrix, "det(V - tV^T) vanishes");
  const long span = p.lowest_exponent() + p.highest_exponent();
  if (span % 2 != 0) throw Error(ErrorCode::InvalidSeifertMatrix, "det(V - tV^T) cannot be symmetrized");
  p = p.shifted(-span / 2);
  if (p.evaluate_at_one() < 0) p = -p;
  if (p.evaluate_at_one() != 1 || !p.is_symmetric())
    throw Error(ErrorCode::InvalidSeifertMatrix, "normalized polynomial " + p.to_string() + " is not an Alexander polynomial");
  return p;
}

Integer half_second_derivative_at_1(const LaurentPolynomial& d) {
  if (d.evaluate_at_one() != 1 || !d.is_symmetric())
    throw Error(ErrorCode::NotNormalized, d.to_string() + " is not normalized (symmetric with value 1 at t = 1)");
  Integer second = 0;
  for (const auto& [e, c] : d.terms()) second += c * Integer(e) * Integer(e - 1);
  if (mpz_odd_p(second.get_mpz_t()))
    throw Error(ErrorCode::OddSecondDerivative, "second derivative at 1 is odd: " + second.get_str());
  return second / 2;
}

Integer casson(const LaurentPolynomial& d, long n) { return Integer(n) * half_second_derivative_at_1(d); }

}  // namespace spinkirby

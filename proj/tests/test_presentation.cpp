#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "spinkirby/error.hpp"
#include "spinkirby/presentation.hpp"

using namespace spinkirby;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

SpinPresentation make(const std::vector<std::vector<long>>& rows, const std::string& c) {
  return SpinPresentation::validate(IntSymMatrix::from_rows(rows), BitVector::from_string(c));
}

}  // namespace

TEST_CASE("validate") {
  CHECK(make({{2}}, "1").size() == 1);
  CHECK(SpinPresentation::validate(IntSymMatrix(), BitVector()).size() == 0);
  CHECK(SpinPresentation() == SpinPresentation::validate(IntSymMatrix(), BitVector()));

  try {
    make({{1}}, "0");
    FAIL("accepted a non-characteristic vector");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCharacteristic);
    CHECK(e.position() == std::optional<std::size_t>(0));
  }
  try {
    make({{2, 1}, {1, 2}}, "10");
    FAIL("accepted a non-characteristic vector");
  } catch (const Error& e) {
    CHECK(e.position() == std::optional<std::size_t>(1));
  }
  CHECK(code_of([] { make({{2}}, "10"); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("characteristic_vectors examples") {
  CHECK(characteristic_vectors(IntSymMatrix::from_rows({{2}})) ==
        std::vector{BitVector::from_string("0"), BitVector::from_string("1")});
  CHECK(characteristic_vectors(IntSymMatrix::from_rows({{1}})) == std::vector{BitVector::from_string("1")});
  CHECK(characteristic_vectors(IntSymMatrix::from_rows({{0, 0}, {0, 0}})).size() == 4);
  CHECK(characteristic_vectors(IntSymMatrix()) == std::vector{BitVector()});
}

TEST_CASE("spin_count") {
  CHECK(spin_count(IntSymMatrix()) == 1);
  CHECK(spin_count(IntSymMatrix::from_rows({{0}})) == 2);
  IntSymMatrix e8(8);
  for (std::size_t i = 0; i < 8; ++i) e8.set(i, i, 2);
  const std::size_t edges[][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};
  for (auto [a, c] : edges) e8.set(a, c, -1);
  CHECK(spin_count(e8) == 1);
  CHECK(code_of([] { spin_count(IntSymMatrix(64)); }) == ErrorCode::Overflow);
  CHECK(spin_nullity(IntSymMatrix(64)) == 64);
}

TEST_CASE("characteristic vectors against brute force") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 9;
    const auto b = oracle::random_symmetric(rng, n, -3, 3);
    const auto got = characteristic_vectors(b);
    CHECK_FALSE(got.empty());
    CHECK(got == oracle::brute_force_characteristic(b));
    CHECK(got.size() == spin_count(b));
    for (const auto& c : got) CHECK_NOTHROW(SpinPresentation::validate(b, c));
  }
}

TEST_CASE("block_sum") {
  const auto p = make({{2}}, "1");
  const auto q = make({{1}}, "1");
  CHECK(block_sum(p, SpinPresentation()) == p);
  CHECK(block_sum(SpinPresentation(), p) == p);
  CHECK(block_sum(p, q) == make({{2, 0}, {0, 1}}, "11"));

  const auto r = make({{0, 1}, {1, 0}}, "00");
  CHECK(block_sum(block_sum(p, q), r) == block_sum(p, block_sum(q, r)));
}

TEST_CASE("sublink") {
  const auto p = make({{1, 2}, {2, 1}}, "11");
  CHECK(sublink(p, {{0, 1}}) == p.matrix());
  CHECK(sublink(p, {}).empty());
  CHECK(sublink(p, {{0}}) == IntSymMatrix::from_rows({{1}}));
  CHECK(code_of([&] { sublink(p, {{2}}); }) == ErrorCode::IndexOutOfRange);
}

#include <doctest.h>

#include <random>

#include "pretrop/linalg.hpp"
#include "test_util.hpp"

using namespace pretrop;
using namespace pretrop::test;

TEST_CASE("primitive divides by the gcd, keeping direction") {
  CHECK(primitive(iv({2, -4, 6})) == iv({1, -2, 3}));
  CHECK(primitive(iv({0, 5, 0})) == iv({0, 1, 0}));
  CHECK(primitive(iv({1, -1, 1, -1})) == iv({1, -1, 1, -1}));
  CHECK_THROWS_AS(primitive(iv({0, 0, 0})), std::invalid_argument);
}

TEST_CASE("primitive is idempotent and scale invariant") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    const int dim = 1 + static_cast<int>(rng() % 6);
    IntVec v(dim);
    bool zero = true;
    for (int j = 0; j < dim; ++j) {
      v[j] = Int(static_cast<long>(rng() % 41)) - 20;
      if (sign_of(v[j]) != 0) zero = false;
    }
    if (zero) v[0] = 7;
    const IntVec p = primitive(v);
    CHECK(primitive(p) == p);
    const long k = 1 + static_cast<long>(rng() % 9);
    IntVec scaled = v;
    for (auto& x : scaled) x *= k;
    CHECK(primitive(scaled) == p);
  }
}

TEST_CASE("kernel_basis on the stated examples") {
  SUBCASE("one row [1 1 1]") {
    auto basis = kernel_basis_int_rows(ivs({{1, 1, 1}}), 3);
    REQUIRE(basis.size() == 2);
    for (const IntVec& b : basis)
      CHECK(sign_of(dot(b, iv({1, 1, 1}))) == 0);
  }
  SUBCASE("identity has trivial kernel") {
    auto basis =
        kernel_basis_int_rows(ivs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3);
    CHECK(basis.empty());
  }
  SUBCASE("no constraints give the whole space") {
    auto basis = kernel_basis_int_rows({}, 3);
    REQUIRE(basis.size() == 3);
    CHECK(basis[0] == iv({1, 0, 0}));
    CHECK(basis[1] == iv({0, 1, 0}));
    CHECK(basis[2] == iv({0, 0, 1}));
  }
}

TEST_CASE("rank on the stated examples") {
  CHECK(rank_int_rows(ivs({{1, 0}, {0, 1}}), 2) == 2);
  CHECK(rank_int_rows(ivs({{1, 2}, {2, 4}}), 2) == 1);
  CHECK(rank_int_rows({}, 4) == 0);
}

TEST_CASE("rank-nullity and exact kernel membership on random matrices") {
  std::mt19937_64 rng(172);
  for (int t = 0; t < 100; ++t) {
    const std::size_t ncols = 1 + rng() % 6;
    const std::size_t nrows = rng() % 7;
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < nrows; ++i) {
      IntVec r(ncols);
      for (auto& x : r) x = Int(static_cast<long>(rng() % 11)) - 5;
      rows.push_back(std::move(r));
    }
    const auto basis = kernel_basis_int_rows(rows, ncols);
    CHECK(rank_int_rows(rows, ncols) + basis.size() == ncols);
    for (const IntVec& b : basis) {
      CHECK_FALSE(is_zero_vec(b));
      for (const IntVec& r : rows) CHECK(sign_of(dot(r, b)) == 0);
    }
  }
}

TEST_CASE("rref rows are canonical for the row space") {
  auto a = rref_int_rows(ivs({{0, 2, 4}, {1, 1, 1}}), 3);
  auto b = rref_int_rows(ivs({{1, 3, 5}, {2, 2, 2}, {3, 5, 7}}), 3);
  CHECK(a == b);
}

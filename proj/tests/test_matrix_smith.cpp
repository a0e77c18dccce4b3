#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qlens/error.hpp"
#include "qlens/smith.hpp"

using namespace qlens;

TEST_CASE("matrix basics") {
  const IntMatrix a{{1, 2}, {3, 4}};
  const IntMatrix b{{0, 1}, {1, 0}};
  CHECK(a * b == IntMatrix{{2, 1}, {4, 3}});
  CHECK(a + b == IntMatrix{{1, 3}, {4, 4}});
  CHECK(a - a == IntMatrix(2, 2));
  CHECK(determinant(a) == -2);
  CHECK(determinant(IntMatrix::identity(5)) == 1);
  CHECK(a.digest() == "1,2;3,4");
  CHECK(IntMatrix{{1, 5}, {0, 1}}.is_unipotent_upper());
  CHECK_FALSE(IntMatrix{{2, 5}, {0, 1}}.is_unipotent_upper());
  CHECK(IntMatrix{{1, 2, 3}, {0, 1, 4}, {0, 0, 1}}.principal_block(1, 2) ==
        IntMatrix{{1, 4}, {0, 1}});
  CHECK_THROWS_AS(a.principal_block(1, 2), Error);
}

TEST_CASE("unipotent inverse") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    const IntMatrix u = oracle::random_unipotent(rng, 6, 20);
    CHECK(u * unipotent_inverse(u) == IntMatrix::identity(6));
  }
}

namespace {

void check_smith(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  CHECK(s.left * m * s.right == s.diagonal);
  CHECK(s.diagonal.is_diagonal());
  const BigInt dl = determinant(s.left);
  const BigInt dr = determinant(s.right);
  CHECK(abs(dl) == 1);
  CHECK(abs(dr) == 1);
  for (std::size_t i = 0; i < s.rank; ++i) {
    CHECK(s.diagonal(i, i) > 0);
    if (i + 1 < s.rank) CHECK(s.diagonal(i + 1, i + 1) % s.diagonal(i, i) == 0);
  }
}

}  // namespace

TEST_CASE("smith normal form") {
  SUBCASE("2x2") {
    const SmithForm s = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
    CHECK(s.diagonal == IntMatrix{{2, 0}, {0, 4}});
    CHECK(s.rank == 2);
    check_smith(IntMatrix{{2, 4}, {6, 8}});
  }
  SUBCASE("identity") {
    const SmithForm s = smith_normal_form(IntMatrix::identity(3));
    CHECK(s.diagonal == IntMatrix::identity(3));
    CHECK(s.rank == 3);
  }
  SUBCASE("zero") {
    const SmithForm s = smith_normal_form(IntMatrix(2, 2));
    CHECK(s.diagonal == IntMatrix(2, 2));
    CHECK(s.rank == 0);
  }
  SUBCASE("random rectangular") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> pick(-30, 30);
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    for (int k = 0; k < 100; ++k) {
      IntMatrix m(dim(rng), dim(rng));
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = pick(rng) * (k % 3 == 0 ? 6 : 1);
      }
      check_smith(m);
    }
  }
}

TEST_CASE("solve_diophantine") {
  using V = std::vector<BigInt>;
  CHECK(solve_diophantine(IntMatrix::identity(2), V{3, -4}) == V{3, -4});
  CHECK_FALSE(solve_diophantine(IntMatrix{{2}}, V{3}).has_value());
  CHECK(solve_diophantine(IntMatrix{{2, 0}, {0, 3}}, V{4, 3}) == V{2, 1});
  CHECK_THROWS_AS(solve_diophantine(IntMatrix{{2, 0}}, V{1, 2}), Error);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> pick(-9, 9);
  for (int k = 0; k < 200; ++k) {
    IntMatrix m(5, 7);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 7; ++j) m(i, j) = pick(rng) * (j % 2 == 0 ? 2 : 3);
    }
    V x(7);
    for (auto& v : x) v = pick(rng);
    const V rhs = m * x;
    const auto sol = solve_diophantine(m, rhs);
    REQUIRE(sol.has_value());
    CHECK(m * *sol == rhs);
  }
  // Every entry even, odd right-hand side: infeasible.
  CHECK_FALSE(solve_diophantine(IntMatrix{{2, 4}, {6, 8}}, V{1, 0}).has_value());
}

#include <doctest.h>

#include "topohelly/generators.hpp"
#include "topohelly/linalg.hpp"

using namespace topohelly;

namespace {

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

IntMatrix random_matrix(SeededRng& rng, std::size_t rows, std::size_t cols,
                        int lo, int hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform_int(lo, hi);
  return m;
}

}  // namespace

TEST_CASE("rank of simple matrices") {
  CHECK(rank_q(IntMatrix::identity(3)) == 3);
  CHECK(rank_q(IntMatrix(4, 7)) == 0);
  CHECK(rank_q(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank_q(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
  CHECK(rank_q(IntMatrix(0, 5)) == 0);
  CHECK(rank_q(IntMatrix(5, 0)) == 0);
}

TEST_CASE("kernel basis is an exact null space basis") {
  SeededRng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = rng.uniform_int(0, 8);
    const std::size_t cols = rng.uniform_int(1, 8);
    const IntMatrix m = random_matrix(rng, rows, cols, -3, 3);
    const IntMatrix k = kernel_q(m);
    CHECK(static_cast<long>(k.cols()) ==
          static_cast<long>(cols) - rank_q(m));
    if (k.cols() > 0) {
      CHECK((m * k).is_zero());
      CHECK(rank_q(k) == static_cast<long>(k.cols()));
    }
  }
}

TEST_CASE("rank over F_p matches rank over Q away from torsion") {
  SeededRng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const IntMatrix m = random_matrix(rng, 5, 6, -2, 2);
    const long rq = rank_q(m);
    // Ranks can only drop mod p.
    CHECK(rank_fp(m, 2) <= rq);
    CHECK(rank_fp(m, 97) <= rq);
  }
  CHECK(rank_fp(from_rows({{2}}), 2) == 0);
  CHECK(rank_fp(from_rows({{2}}), 3) == 1);
}

TEST_CASE("kernel over F_p") {
  const IntMatrix m = from_rows({{2, 0}, {0, 1}});
  const IntMatrix k2 = kernel_fp(m, 2);
  REQUIRE(k2.cols() == 1);
  // (1, 0) generates the mod-2 kernel.
  CHECK(k2(0, 0) == 1);
  CHECK(k2(1, 0) == 0);
  CHECK(kernel_fp(m, 5).cols() == 0);
}

TEST_CASE("extending_columns picks a complement basis") {
  const IntMatrix fixed = from_rows({{1}, {0}, {0}});
  const IntMatrix cand = from_rows({{1, 0, 2}, {0, 1, 0}, {0, 0, 0}});
  const auto idx = extending_columns(fixed, cand, 0);
  REQUIRE(idx.size() == 1);
  CHECK(idx[0] == 1);
}

TEST_CASE("solve_linear solves and detects inconsistency") {
  const IntMatrix a = from_rows({{2, 0}, {0, 3}});
  const IntMatrix b = from_rows({{1}, {1}});
  const auto x = solve_linear(a, b, 0);
  REQUIRE(x.has_value());
  CHECK((*x)(0, 0) == Rat(1, 2));
  CHECK((*x)(1, 0) == Rat(1, 3));

  const IntMatrix bad_a = from_rows({{1, 1}, {1, 1}});
  const IntMatrix bad_b = from_rows({{0}, {1}});
  CHECK_FALSE(solve_linear(bad_a, bad_b, 0).has_value());

  const auto xp = solve_linear(a, b, 5);
  REQUIRE(xp.has_value());
  // 2x = 1 mod 5 -> x = 3; 3y = 1 mod 5 -> y = 2.
  CHECK((*xp)(0, 0) == Rat(3));
  CHECK((*xp)(1, 0) == Rat(2));
}

TEST_CASE("big-integer fallback survives coefficient blowup") {
  // Entries around 2^40: products overflow int64 during elimination.
  SeededRng rng(5);
  IntMatrix m(6, 6);
  const Int big = Int(1) << 40;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      m(i, j) = big * rng.uniform_int(-4, 4) + rng.uniform_int(-4, 4);
  const long r = rank_q(m);
  CHECK(r >= 5);
  const IntMatrix k = kernel_q(m);
  CHECK(static_cast<long>(k.cols()) == 6 - r);
  if (k.cols() > 0) CHECK((m * k).is_zero());
}

TEST_CASE("prime detection") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

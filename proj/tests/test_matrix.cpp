#include <random>
#include <unordered_set>

#include "doctest.h"
#include "oracles.hpp"
#include "tropmon/matrix.hpp"

using namespace tropmon;

namespace {
  constexpr TropInt X = NEG_INF;

  oracle::Matrix to_oracle(TropMatrix const& m) {
    oracle::Matrix o(m.dim(), std::vector<oracle::Entry>(m.dim()));
    for (Eigen::Index i = 0; i < m.dim(); ++i) {
      for (Eigen::Index j = 0; j < m.dim(); ++j) {
        if (m(i, j).is_finite()) {
          o[i][j] = m(i, j).value();
        }
      }
    }
    return o;
  }

  TropMatrix random_matrix(std::mt19937_64& rng, Eigen::Index n, std::int64_t bound) {
    std::uniform_int_distribution<std::int64_t> value(-bound, bound);
    std::bernoulli_distribution                 inf(0.3);
    TropMatrix                                  m(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (!inf(rng)) {
          m.set(i, j, value(rng));
        }
      }
    }
    return m;
  }
}  // namespace

TEST_CASE("tropical scalars") {
  CHECK(TropInt(3) + TropInt(5) == TropInt(5));
  CHECK(TropInt(3) * TropInt(5) == TropInt(8));
  CHECK(X + TropInt(-7) == TropInt(-7));
  CHECK(X * TropInt(7) == X);
  CHECK(TropInt::one() * TropInt(4) == TropInt(4));
  CHECK(X < TropInt(-1'000'000));
  CHECK(to_string(X) == "-inf");
  CHECK(to_string(TropInt(-4)) == "-4");
  CHECK_THROWS_AS(TropInt(TropInt::guard + 1), OverflowError);
  CHECK_THROWS_AS(TropInt(TropInt::guard) * TropInt(1), OverflowError);
  CHECK_NOTHROW(TropInt(TropInt::guard) * X);
}

TEST_CASE("matrix literals and accessors") {
  TropMatrix m{{0, X}, {X, 1}};
  CHECK(m.dim() == 2);
  CHECK(m(0, 0) == TropInt(0));
  CHECK(m(0, 1) == X);
  CHECK(TropMatrix::identity(2) == TropMatrix{{0, X}, {X, 0}});
  CHECK(TropMatrix::zero(2) == TropMatrix(2));
  CHECK_THROWS_AS((TropMatrix{{0, 1}, {2}}), DimensionError);
  CHECK_THROWS_AS(TropMatrix(0), DimensionError);
  CHECK_THROWS_AS(TropMatrix(2) * TropMatrix(3), DimensionError);
  CHECK(to_string(m) == "[[0, -inf], [-inf, 1]]");
}

TEST_CASE("product and sum agree with the naive oracle") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    Eigen::Index n = 1 + t % 5;
    auto         a = random_matrix(rng, n, 50);
    auto         b = random_matrix(rng, n, 50);
    CHECK(to_oracle(a * b) == oracle::product(to_oracle(a), to_oracle(b)));
    CHECK(to_oracle(a + b) == oracle::sum(to_oracle(a), to_oracle(b)));
    CHECK(otimes(a, b) == a * b);
    CHECK(oplus(a, b) == a + b);
  }
}

TEST_CASE("product overflow is reported") {
  auto const g = TropInt::guard;
  TropMatrix a{{g}};
  CHECK_THROWS_AS(a * a, OverflowError);
  TropMatrix b{{g, X}, {X, 0}};
  TropMatrix c{{X, 0}, {1, X}};
  CHECK_THROWS_AS(b * c * b, OverflowError);
}

TEST_CASE("powers") {
  TropMatrix b{{1, 1}, {X, X}};
  CHECK(power(b, 3) == TropMatrix{{3, 3}, {X, X}});
  CHECK(power(b, 0) == TropMatrix::identity(2));

  TropMatrix a{{X, 1}, {X, X}};
  CHECK(power(a, 2) == TropMatrix(2));
  CHECK(power(a, 3) == TropMatrix(2));

  auto ps = powers(b, 4);
  REQUIRE(ps.size() == 5);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    CHECK(ps[i] == power(b, i));
  }
}

TEST_CASE("transpose and anti-transpose") {
  TropMatrix b{{1, 1}, {X, X}};
  CHECK(anti_transpose(b) == TropMatrix{{X, 1}, {X, 1}});
  CHECK(transpose(b) == TropMatrix{{1, X}, {1, X}});
  TropMatrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  CHECK(anti_transpose(m) == TropMatrix{{9, 6, 3}, {8, 5, 2}, {7, 4, 1}});
  CHECK(anti_transpose(anti_transpose(m)) == m);
  CHECK(is_upper_triangular(TropMatrix{{1, 2}, {X, 3}}));
  CHECK_FALSE(is_upper_triangular(TropMatrix{{1, 2}, {0, 3}}));
  CHECK(is_upper_triangular(anti_transpose(TropMatrix{{1, 2}, {X, 3}})));
}

TEST_CASE("matrices hash consistently with equality") {
  std::unordered_set<TropMatrix> set;
  set.insert(TropMatrix{{0, X}, {X, 1}});
  set.insert(TropMatrix{{0, X}, {X, 1}});
  set.insert(TropMatrix{{0, X}, {X, 2}});
  CHECK(set.size() == 2);
}

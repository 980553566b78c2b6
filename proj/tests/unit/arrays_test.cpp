#include <gtest/gtest.h>

#include "generators.hpp"
#include "riordan/arrays.hpp"
#include "riordan/error.hpp"

namespace riordan {
namespace {

AlmostRiordanSpec counterexample(int order) {
  return AlmostRiordanSpec{Series::polynomial({1, 3}, order), Series::polynomial({1, 1}, order),
                           Series::polynomial({0, 2, 1}, order)};
}

TEST(BuildAlmost, LinearDWithPfG) {
  const MatrixWindow m = build_almost(counterexample(5), 6, 6);
  // Columns j >= 1 are t*g*f^(j-1) expanded directly.
  EXPECT_EQ(m, MatrixWindow::from_rows({{1}, {3, 1}, {0, 1, 2}, {0, 0, 3, 4}, {0, 0, 1, 8, 8}, {0, 0, 0, 5, 20, 16}}));
}

TEST(BuildAlmost, SquaredDOverAllOnesTriangle) {
  const int n = 4;
  const AlmostRiordanSpec spec{Series::polynomial({1, 2, 1}, n), Series::polynomial({1, 1, 1, 1, 1}, n),
                               Series::identity(n)};
  EXPECT_EQ(build_almost(spec, 5, 5),
            MatrixWindow::from_rows({{1}, {2, 1}, {1, 1, 1}, {0, 1, 1, 1}, {0, 1, 1, 1, 1}}));
}

TEST(BuildAlmost, DiagonalFollowsLeadingCoefficients) {
  testing::Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const AlmostRiordanSpec spec = rng.constructible_almost(6);
    const MatrixWindow m = build_almost(spec, 7, 7);
    EXPECT_TRUE(m.is_lower_triangular());
    EXPECT_EQ(m(0, 0), spec.d[0]);
    for (std::size_t j = 1; j < 7; ++j) EXPECT_EQ(m(j, j), spec.g[0] * spec.f[1].pow(static_cast<long>(j) - 1));
  }
}

TEST(BuildAlmost, RejectsShortSeriesAndBadSpecs) {
  try {
    build_almost(counterexample(3), 6, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientOrder);
  }
  AlmostRiordanSpec bad = counterexample(5);
  bad.f = Series::polynomial({1, 1}, 5);
  EXPECT_THROW(build_almost(bad, 3, 3), Error);
  bad = counterexample(5);
  bad.d = Series::polynomial({-1, 1}, 5);
  EXPECT_THROW(build_almost(bad, 3, 3), Error);
  EXPECT_NO_THROW(build_almost_relaxed(bad, 3, 3));
}

TEST(BuildRiordan, PascalTriangle) {
  const RiordanSpec pascal{Series::polynomial({1, 1, 1, 1, 1}, 4), Series::polynomial({0, 1, 1, 1, 1}, 4)};
  EXPECT_EQ(build_riordan(pascal, 5, 5),
            MatrixWindow::from_rows({{1}, {1, 1}, {1, 2, 1}, {1, 3, 3, 1}, {1, 4, 6, 4, 1}}));
}

TEST(BuildQuasi, ColumnsAreShiftsOfF) {
  const QuasiRiordanSpec q{Series::polynomial({1, 1, 1, 1}, 3), Series::polynomial({0, 1, 1, 1}, 3)};
  EXPECT_EQ(build_quasi(q, 4, 4), MatrixWindow::from_rows({{1}, {1, 1}, {1, 1, 1}, {1, 1, 1, 1}}));
}

TEST(Products, AlmostProductMatchesWindowProduct) {
  testing::Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const AlmostRiordanSpec x = rng.normalized_almost(7);
    const AlmostRiordanSpec y = rng.normalized_almost(7);
    const AlmostRiordanSpec xy = mult_almost(x, y);
    ASSERT_GE(xy.order(), 7);
    EXPECT_EQ(build_almost(x, 8, 8) * build_almost(y, 8, 8), build_almost_relaxed(xy, 8, 8)) << trial;
  }
}

TEST(Products, AlmostProductNeedsNormalizedFactors) {
  try {
    mult_almost(counterexample(4), counterexample(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotGroupElement);
  }
}

TEST(Products, QuasiProductMatchesWindowProduct) {
  testing::Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const QuasiRiordanSpec x = rng.normalized_quasi(7);
    const QuasiRiordanSpec y = rng.normalized_quasi(7);
    const QuasiRiordanSpec xy = mult_quasi(x, y);
    ASSERT_GE(xy.order(), 7);
    EXPECT_EQ(build_quasi(x, 8, 8) * build_quasi(y, 8, 8), build_quasi(xy, 8, 8)) << trial;
  }
}

TEST(Products, QuasiActionIsWindowTimesVector) {
  testing::Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const QuasiRiordanSpec q = rng.normalized_quasi(7);
    const Series u = rng.series(7, rng.rational(3, 2));
    const Series v = apply_quasi(q, u);
    const MatrixWindow m = build_quasi(q, 8, 8);
    for (std::size_t i = 0; i < 8; ++i) {
      Rational acc(0);
      for (std::size_t j = 0; j < 8; ++j) acc += m(i, j) * u[static_cast<int>(j)];
      EXPECT_EQ(v[static_cast<int>(i)], acc);
    }
  }
}

TEST(Factorizations, RiordanThroughQuasi) {
  testing::Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) EXPECT_TRUE(verify_quasi_factorization(rng.riordan(7), 8));
}

TEST(Factorizations, SemidirectSplit) {
  testing::Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const AlmostRiordanSpec spec = trial % 2 == 0 ? rng.normalized_almost(7) : rng.constructible_almost(7);
    const SemidirectFactors parts = semidirect_factor(spec);
    EXPECT_EQ(build_almost(spec, 8, 8), build_quasi(parts.quasi, 8, 8) * build_almost(parts.almost, 8, 8));
  }
}

}  // namespace
}  // namespace riordan

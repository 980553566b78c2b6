#include <gtest/gtest.h>

#include <vector>

#include "generators.hpp"
#include "riordan/error.hpp"
#include "riordan/series.hpp"

namespace riordan {
namespace {

Series S(std::initializer_list<Rational> c) { return Series(std::vector<Rational>(c)); }

void expect_code(ErrorCode code, auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "no exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(Series, ProductKeepsSmallerOrder) {
  const Series a = S({1, 1, 0, 0});
  const Series b = S({1, -1, 0});
  EXPECT_EQ(mul(a, b), S({1, 0, -1}));
}

TEST(Series, QuotientMatchesGeometricExpansion) {
  const Series num = S({1, -1, 0, 0, 0, 0});
  const Series den = S({1, -2, 0, 0, 0, 0});
  EXPECT_EQ(div(num, den), S({1, 1, 2, 4, 8, 16}));
  expect_code(ErrorCode::DivByNonUnit, [&] { div(num, Series::identity(5)); });
}

TEST(Series, CompositionWithDeltaSeries) {
  const Series geometric = Series::polynomial({1, 1, 1, 1, 1, 1, 1}, 6);
  const Series inner = Series::polynomial({0, 2, 1}, 6);
  EXPECT_EQ(compose(geometric, inner), S({1, 2, 5, 12, 29, 70, 169}));
  expect_code(ErrorCode::InnerNotDelta, [&] { compose(geometric, Series::constant(1, 6)); });
}

TEST(Series, ReversionOfQuadratic) {
  const Series f = Series::polynomial({0, 2, 1}, 7);
  EXPECT_EQ(reversion(f), S({0, Rational(1, 2), Rational(-1, 8), Rational(1, 16), Rational(-5, 128), Rational(7, 256),
                             Rational(-21, 1024), Rational(33, 2048)}));
  expect_code(ErrorCode::NotInvertible, [&] { reversion(Series::polynomial({0, 0, 1}, 4)); });
}

TEST(Series, ReversionRoundTripsOnRandomSeries) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Rational f1 = rng.rational(3, 2);
    if (f1.is_zero()) f1 = 1;
    const Series f = rng.delta(8, f1);
    const Series r = reversion(f);
    EXPECT_EQ(compose(f, r), Series::identity(8));
    EXPECT_EQ(compose(r, f), Series::identity(8));
  }
}

TEST(Series, SquareRoots) {
  EXPECT_EQ(sqrt(Series::polynomial({1, 1}, 5)),
            S({1, Rational(1, 2), Rational(-1, 8), Rational(1, 16), Rational(-5, 128), Rational(7, 256)}));
  EXPECT_EQ(sqrt(Series::polynomial({1, -4}, 6)), S({1, -2, -2, -4, -10, -28, -84}));
  expect_code(ErrorCode::NonSquareConstantTerm, [] { sqrt(Series::polynomial({2, 1}, 3)); });
  expect_code(ErrorCode::NonSquareConstantTerm, [] { sqrt(Series::polynomial({0, 1}, 3)); });
}

TEST(Series, SquareOfRootIsIdentityOnRandomInput) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational c = rng.positive_rational(5, 3);
    const Series a = rng.series(7, c * c);
    const Series s = sqrt(a);
    EXPECT_EQ(mul(s, s), a);
    EXPECT_GT(s[0], Rational(0));
  }
}

TEST(Series, PowerAndInverse) {
  const Series a = Series::polynomial({1, 1}, 4);
  EXPECT_EQ(pow(a, 2), S({1, 2, 1, 0, 0}));
  EXPECT_EQ(pow(a, -1), S({1, -1, 1, -1, 1}));
  EXPECT_EQ(mul(inverse(a), a), Series::constant(1, 4));
}

TEST(Series, ShiftsAndDrops) {
  const Series a = S({1, 2, 3});
  EXPECT_EQ(shift_t(a, 1), S({0, 1, 2}));
  EXPECT_EQ(shift_up(a, 1), S({0, 1, 2, 3}));
  EXPECT_EQ(drop_t(S({0, 0, 5, 6}), 2), S({5, 6}));
  expect_code(ErrorCode::UncanceledPole, [&] { drop_t(a, 1); });
}

TEST(Series, AccessBeyondOrderIsAnError) {
  const Series a = S({1, 2});
  expect_code(ErrorCode::OutOfRange, [&] { (void)a[2]; });
  expect_code(ErrorCode::InsufficientOrder, [&] { (void)a.truncate(3); });
}

TEST(Series, Printing) {
  EXPECT_EQ(S({1, 2, -1}).to_string(), "1 + 2*t - t^2 + O(t^3)");
  EXPECT_EQ(S({0, Rational(1, 2)}).to_string(), "1/2*t + O(t^2)");
}

}  // namespace
}  // namespace riordan

#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "riordan/arrays.hpp"
#include "riordan/error.hpp"
#include "riordan/gf_expr.hpp"
#include "riordan/verify.hpp"

namespace riordan {
namespace {

TEST(TgAlphaBuild, LayoutAndPositivity) {
  const Series g = gf_series("1/(1-t)", 7);
  const Series f = gf_series("t/(1-t)", 7);
  for (const Rational& alpha : {Rational(1, 2), Rational(1), Rational(3)}) {
    const MatrixWindow m = thm_tg_alpha_build(g, f, alpha, 7);
    EXPECT_EQ(m(0, 0), alpha);
    for (std::size_t i = 1; i < 7; ++i) EXPECT_EQ(m(i, 0), Rational(1));
    EXPECT_EQ(m.block(1, 1, 6, 6), build_riordan(RiordanSpec{g, f}, 6, 6));
    EXPECT_EQ(tp_check(m, 4).verdict, TPVerdict::WindowTP);
  }
  EXPECT_THROW(thm_tg_alpha_build(g, f, 0, 5), Error);
}

TEST(LinearDBuild, LayoutAndZeroD0) {
  const Series g = gf_series("1/(1-t)", 6);
  const Series f = gf_series("t/(1-t)", 6);
  const MatrixWindow m = thm_linear_d_build(g, f, 0, 2, 6);
  EXPECT_EQ(m(0, 0), Rational(0));
  EXPECT_EQ(m(1, 0), Rational(2));
  EXPECT_EQ(m(2, 0), Rational(0));
  EXPECT_EQ(m(3, 2), Rational(2));
  EXPECT_EQ(tp_check(thm_linear_d_build(g, f, 1, 1, 6), 4).verdict, TPVerdict::WindowTP);
  EXPECT_THROW(thm_linear_d_build(g, f, -1, 1, 4), Error);
}

TEST(Corollary, DSquaredExampleIsConsistent) {
  const CorollaryReport r = corollary_check(gf_series("(1+t)^2", 6), gf_series("1/(1-t)", 6), gf_series("t", 6), 6);
  EXPECT_TRUE(r.f_is_pf);
  EXPECT_TRUE(r.f_pf_exact);
  EXPECT_EQ(r.array_report.verdict, TPVerdict::NotTP);
  EXPECT_FALSE(r.premises_hold());
  EXPECT_TRUE(r.consistent());
}

TEST(Corollary, PremisesAndConclusionHold) {
  const Series geo = gf_series("1/(1-t)", 7);
  const CorollaryReport r = corollary_check(geo, geo, gf_series("t+t^2", 7), 7);
  EXPECT_TRUE(r.premises_hold());
  EXPECT_TRUE(r.conclusion_holds());
  EXPECT_TRUE(r.consistent());
  EXPECT_EQ(r.array_report.checked_order, 4);
}

TEST(Families, ProductionData) {
  EXPECT_EQ(azw_family(Family::AZW1, 2, 0), (TridiagonalProduction{1, 2, 1, 1, 1, 1, 1, 0}));
  EXPECT_EQ(azw_family(Family::AZW2, 1, Rational(1, 4)),
            (TridiagonalProduction{1, 1, Rational(1, 4), 1, 1, Rational(1, 4), 1, Rational(1, 2)}));
  EXPECT_EQ(azw_family(Family::AZW3, 4, Rational(1, 3)), (TridiagonalProduction{1, 4, 1, 1, 1, 1, 1, Rational(1, 3)}));
  EXPECT_EQ(azw_family(Family::AZW4, 3, 0), (TridiagonalProduction{1, 3, 1, 1, 1, 0, 1, Rational(1, 3)}));
  EXPECT_EQ(parse_family("azw3"), Family::AZW3);
  EXPECT_EQ(parse_family("AZW4"), Family::AZW4);
  EXPECT_EQ(family_name(Family::AZW2), "AZW2");
  EXPECT_THROW(parse_family("AZW5"), Error);
}

TEST(Regions, Membership) {
  EXPECT_TRUE(region_check(Family::AZW1, 2, 0));
  EXPECT_FALSE(region_check(Family::AZW1, 2, Rational(1, 2)));
  EXPECT_TRUE(region_check(Family::AZW1, 4, Rational(1, 2)));
  EXPECT_TRUE(region_check(Family::AZW2, 1, Rational(1, 4)));
  EXPECT_FALSE(region_check(Family::AZW2, 1, Rational(1, 2)));
  EXPECT_FALSE(region_check(Family::AZW2, 1, Rational(-1, 2)));
  EXPECT_TRUE(region_check(Family::AZW3, 3, Rational(2, 3)));
  EXPECT_FALSE(region_check(Family::AZW3, 3, Rational(3, 4)));
  EXPECT_TRUE(region_check(Family::AZW4, 3, 0));
  EXPECT_TRUE(region_check(Family::AZW4, Rational(5, 2), Rational(1, 24)));
  EXPECT_FALSE(region_check(Family::AZW4, Rational(5, 2), Rational(1, 5)));
}

TEST(Regions, OutOfDomain) {
  for (const auto& [family, alpha] : {std::pair{Family::AZW3, Rational(2)}, std::pair{Family::AZW4, Rational(2)},
                                      std::pair{Family::AZW4, Rational(7, 2)}}) {
    try {
      region_check(family, alpha, 0);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::OutOfDomain);
    }
  }
}

TEST(Regions, GridIncludesEndsAndSkipsOutOfDomain) {
  const auto points = region_grid(Family::AZW1, RegionBounds{0, 4, 0, 1, 4, 2});
  ASSERT_EQ(points.size(), 15u);
  EXPECT_EQ(points.front().alpha, Rational(0));
  EXPECT_EQ(points.back().alpha, Rational(4));
  EXPECT_EQ(points.back().beta, Rational(1));
  for (const RegionPoint& p : points) EXPECT_EQ(p.inside, region_check(Family::AZW1, p.alpha, p.beta));

  const auto skipped = region_grid(Family::AZW3, RegionBounds{2, 4, 0, 1, 2, 3});
  EXPECT_EQ(skipped.size(), 8u);

  const std::string csv = region_grid_csv(points);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "alpha,beta,label");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 15);
  EXPECT_NE(csv.find("2,0,in"), std::string::npos);
  EXPECT_NE(csv.find("2,1/2,out"), std::string::npos);
}

TEST(FamilyPoints, AgreementAndContradiction) {
  const FamilyPointCheck ok = check_family_point(Family::AZW1, 2, 0, 12);
  EXPECT_TRUE(ok.claims_tp);
  EXPECT_EQ(ok.window.verdict, TPVerdict::WindowTP);
  EXPECT_FALSE(ok.contradicts());

  const FamilyPointCheck bad = check_family_point(Family::AZW3, 3, Rational(2, 3), 12);
  EXPECT_TRUE(bad.claims_tp);
  EXPECT_EQ(bad.window.verdict, TPVerdict::NotTP);
  EXPECT_TRUE(bad.contradicts());

  const FamilyPointCheck outside = check_family_point(Family::AZW3, 3, 2, 12);
  EXPECT_TRUE(outside.claims_not_tp);
  EXPECT_EQ(outside.window.verdict, TPVerdict::NotTP);
  EXPECT_FALSE(outside.contradicts());
}

}  // namespace
}  // namespace riordan

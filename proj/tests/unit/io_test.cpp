#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "generators.hpp"
#include "riordan/error.hpp"
#include "riordan/io.hpp"

namespace riordan {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::OutOfRange;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("riordan_io_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

TEST(Json, Rational) {
  EXPECT_EQ(json(Rational(3, 4)), json("3/4"));
  EXPECT_EQ(json(Rational(-2)), json("-2"));
  EXPECT_EQ(json(5).get<Rational>(), Rational(5));
  EXPECT_EQ(json("-7/14").get<Rational>(), Rational(-1, 2));
  EXPECT_EQ(code_of([] { json(1.5).get<Rational>(); }), ErrorCode::ParseError);
}

TEST(Json, SeriesRoundTrip) {
  testing::Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const Series s = rng.series(static_cast<int>(rng.integer(0, 8)), rng.rational(5, 3));
    const json j = s;
    EXPECT_EQ(j.at("order"), s.order());
    EXPECT_EQ(j.get<Series>(), s);
  }
  EXPECT_EQ(code_of([] { json{{"order", 3}, {"coeffs", {"1", "2"}}}.get<Series>(); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { json{{"coeffs", json::array()}}.get<Series>(); }), ErrorCode::ParseError);
}

TEST(Json, MatrixRoundTrip) {
  const MatrixWindow m = MatrixWindow::from_rows({{1, Rational(-1, 2)}, {3, 0}, {0, 7}});
  const json j = m;
  EXPECT_EQ(j.at("rows"), 3);
  EXPECT_EQ(j.at("cols"), 2);
  EXPECT_EQ(j.get<MatrixWindow>(), m);
  json ragged = j;
  ragged["entries"][1] = json::array({"1"});
  EXPECT_EQ(code_of([&] { ragged.get<MatrixWindow>(); }), ErrorCode::ParseError);
}

TEST(Json, SequenceTypesRoundTrip) {
  const TridiagonalProduction p{1, 2, Rational(1, 4), 1, 1, 1, 1, Rational(1, 2)};
  const json jp = p;
  EXPECT_EQ(jp.at("a2"), "1/4");
  EXPECT_EQ(jp.get<TridiagonalProduction>(), p);

  const AZWTriple azw = p.to_azw(4);
  const json ja = azw;
  EXPECT_EQ(ja.at("z0"), "1");
  EXPECT_EQ(ja.at("w0"), "1");
  EXPECT_EQ(ja.get<AZWTriple>(), azw);
}

TEST(Json, TPReportSchema) {
  TPReport r;
  r.verdict = TPVerdict::NotTP;
  r.checked_order = 3;
  r.minors_checked = 42;
  r.witness = MinorWitness{{1, 2, 3}, {0, 1, 2}, Rational(-1)};
  const json j = r;
  for (const char* key : {"verdict", "checked_order", "strategy", "minors_checked", "witness", "note"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j.at("verdict"), "NotTP");
  EXPECT_EQ(j.at("witness").at("value"), "-1");
  const TPReport back = j.get<TPReport>();
  EXPECT_EQ(back.verdict, r.verdict);
  EXPECT_EQ(back.checked_order, 3);
  EXPECT_EQ(back.minors_checked, 42u);
  EXPECT_EQ(back.witness, r.witness);

  TPReport pass;
  pass.checked_order = 4;
  pass.strategy = MinorStrategy::Jacobi;
  const json jp = pass;
  EXPECT_TRUE(jp.at("witness").is_null());
  EXPECT_EQ(jp.at("strategy"), "jacobi");
  EXPECT_EQ(jp.get<TPReport>().strategy, MinorStrategy::Jacobi);
  EXPECT_FALSE(jp.get<TPReport>().witness);
}

TEST(Csv, RoundTrip) {
  const MatrixWindow m = MatrixWindow::from_rows({{1, 0, 0}, {Rational(1, 3), 2, 0}, {-4, 5, 6}});
  const std::string csv = matrix_to_csv(m);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "1,0,0");
  EXPECT_EQ(matrix_from_csv(csv), m);
  EXPECT_EQ(code_of([] { matrix_from_csv("1,2\n3\n"); }), ErrorCode::ParseError);
}

TEST(Text, ParseErrorsCarryOffsets) {
  try {
    parse_json_text("{\"a\": [1, 2,, 3]}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    ASSERT_TRUE(e.offset());
    EXPECT_GT(*e.offset(), 0u);
  }
}

TEST(Files, MatrixFromJsonOrCsv) {
  const MatrixWindow m = MatrixWindow::from_rows({{1, 0}, {Rational(2, 3), 1}});
  EXPECT_EQ(read_matrix_file(temp_file("m.json", json(m).dump())), m);
  EXPECT_EQ(read_matrix_file(temp_file("m.csv", matrix_to_csv(m))), m);
  EXPECT_EQ(code_of([] { read_matrix_file("/nonexistent/riordan/matrix.csv"); }), ErrorCode::ParseError);
}

}  // namespace
}  // namespace riordan

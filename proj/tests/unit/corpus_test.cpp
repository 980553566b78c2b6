#include <gtest/gtest.h>

#include <algorithm>
#include <string>

#include "riordan/corpus.hpp"
#include "riordan/error.hpp"
#include "riordan/io.hpp"

namespace riordan {
namespace {

const ExampleReport& find(const CorpusReport& r, const std::string& id) {
  const auto it = std::find_if(r.examples.begin(), r.examples.end(), [&](const auto& e) { return e.id == id; });
  if (it == r.examples.end()) throw std::runtime_error("missing " + id);
  return *it;
}

TEST(Corpus, LoadsEveryExample) {
  const auto examples = load_corpus();
  EXPECT_EQ(examples.size(), 10u);
  for (const PublishedExample& ex : examples) {
    EXPECT_FALSE(ex.id.empty());
    EXPECT_GT(ex.expected.rows(), 0u);
    EXPECT_TRUE(ex.closed_form || ex.family) << ex.id;
  }
}

TEST(Corpus, RunPassesWithFlags) {
  const CorpusReport report = run_corpus(load_corpus());
  EXPECT_TRUE(report.passed()) << corpus_report_text(report);
  EXPECT_EQ(find(report, "pf-d-not-sufficient").status, CheckStatus::Flagged);
  EXPECT_EQ(find(report, "tp-array-non-tp-production").status, CheckStatus::Flagged);
  EXPECT_EQ(find(report, "azw3-3-0").status, CheckStatus::Flagged);
  EXPECT_EQ(find(report, "azw1-2-0").status, CheckStatus::Pass);
  const std::string text = corpus_report_text(report);
  EXPECT_EQ(text.substr(text.rfind("corpus")), "corpus passed\n");
}

TEST(Corpus, SelectsById) {
  const CorpusReport report = run_corpus(load_corpus(), {"azw1-2-0", "no-such-example"});
  ASSERT_EQ(report.examples.size(), 2u);
  EXPECT_EQ(report.examples[1].status, CheckStatus::Fail);
  EXPECT_FALSE(report.passed());
}

TEST(Corpus, DetectsTamperedEntry) {
  json j = parse_json_text(read_text_file(default_corpus_path()));
  for (json& ex : j.at("examples")) {
    if (ex.at("id") == "azw1-2-0") ex.at("printed_rows")[3][1] = "5";
  }
  const CorpusReport report = run_corpus(parse_corpus(j), {"azw1-2-0"});
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report.examples[0].status, CheckStatus::Fail);
}

TEST(Corpus, ReportJson) {
  const json j = corpus_report_json(run_corpus(load_corpus(), {"pf-d-not-sufficient"}));
  EXPECT_EQ(j.at("passed"), true);
  const json& ex = j.at("examples").at(0);
  EXPECT_EQ(ex.at("id"), "pf-d-not-sufficient");
  EXPECT_EQ(ex.at("status"), "flagged");
  EXPECT_EQ(ex.at("checks").at(0).at("detail"), "(4,1) printed blank, derived 1");
}

TEST(Corpus, BlankCellNeedsFlag) {
  json j = parse_json_text(read_text_file(default_corpus_path()));
  for (json& ex : j.at("examples")) {
    if (ex.at("id") == "azw1-2-0") ex.at("printed_rows")[4][1] = nullptr;
  }
  try {
    parse_corpus(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}

TEST(Corpus, MalformedRecord) {
  try {
    parse_corpus(json{{"format", 1}, {"examples", json::array({json{{"id", "x"}}})}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}

}  // namespace
}  // namespace riordan

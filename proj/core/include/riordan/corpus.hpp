#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "riordan/matrix.hpp"
#include "riordan/rational.hpp"
#include "riordan/sequences.hpp"
#include "riordan/tp.hpp"

namespace riordan {

/// A printed entry that disagrees with an independent computation. The
/// corpus keeps both values; the built window must equal `derived`.
using CellIndex = std::array<std::size_t, 2>;

struct EntryFlag {
  std::size_t row = 0;
  std::size_t col = 0;
  std::optional<Rational> printed;  // nullopt when the printed cell is blank
  Rational derived;
  std::string oracle;
  std::string note;
};

struct ClosedFormSource {
  std::string d, g, f;
};

/// Tridiagonal production data; the window is rebuilt by recover_from_tridiagonal.
struct FamilySource {
  std::string label;
  TridiagonalProduction production;
  Rational d0;
  /// Entries where the family's array differs from the printed matrix.
  std::vector<EntryFlag> mismatches;
  std::string note;
  /// Expected tp_check verdict on the recovered window, when given.
  std::optional<int> tp_order;
  TPVerdict tp_verdict = TPVerdict::WindowTP;
};

struct AZWClosedForms {
  std::string A, Z, W;
  int order = 5;
};

struct ProductionExpectation {
  MatrixWindow window{0, 0};
  TPVerdict verdict = TPVerdict::NotTP;
};

struct PublishedExample {
  std::string id;
  std::string title;
  std::string notes;
  std::optional<ClosedFormSource> closed_form;
  std::optional<FamilySource> family;
  MatrixWindow expected{0, 0};  // printed entries
  std::vector<CellIndex> blanks;  // printed cells left blank
  std::vector<EntryFlag> flags;
  int tp_order = 4;
  TPVerdict tp_verdict = TPVerdict::WindowTP;
  std::optional<MinorWitness> witness;
  std::optional<ProductionExpectation> production;
  std::optional<AZWClosedForms> azw;
};

enum class CheckStatus { Pass, Flagged, Fail };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct ExampleReport {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::vector<CheckResult> checks;
};

struct CorpusReport {
  std::vector<ExampleReport> examples;
  /// True when no check failed; flagged discrepancies do not count as failures.
  bool passed() const;
};

std::string_view check_status_name(CheckStatus s);

/// $RIORDAN_CORPUS, else the data file in the source tree, else the installed copy.
std::string default_corpus_path();

std::vector<PublishedExample> parse_corpus(const nlohmann::json& j);
std::vector<PublishedExample> load_corpus(const std::string& path);
std::vector<PublishedExample> load_corpus();

/// Runs every example (or only `ids`, in corpus order; unknown ids are failures).
CorpusReport run_corpus(const std::vector<PublishedExample>& examples, const std::vector<std::string>& ids = {});

nlohmann::json corpus_report_json(const CorpusReport& report);
std::string corpus_report_text(const CorpusReport& report);

}  // namespace riordan

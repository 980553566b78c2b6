#include "riordan/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "riordan/arrays.hpp"
#include "riordan/error.hpp"
#include "riordan/gf_expr.hpp"
#include "riordan/io.hpp"

#ifndef RIORDAN_CORPUS_SOURCE
#define RIORDAN_CORPUS_SOURCE ""
#endif
#ifndef RIORDAN_CORPUS_INSTALLED
#define RIORDAN_CORPUS_INSTALLED ""
#endif

namespace riordan {

namespace {

const json& need(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::ParseError, std::string("corpus record lacks '") + key + "'");
  return *it;
}

std::string text_or_empty(const json& j, const char* key) {
  const auto it = j.find(key);
  return it == j.end() ? std::string() : it->get<std::string>();
}

// Blank printed cells (null) read as 0 and are reported through `blanks`.
MatrixWindow ragged_window(const json& rows_json, std::size_t cols, std::vector<CellIndex>* blanks = nullptr) {
  std::vector<std::vector<Rational>> rows;
  for (const json& row : rows_json) {
    std::vector<Rational> r;
    for (const json& v : row) {
      if (v.is_null()) {
        if (!blanks) throw Error(ErrorCode::ParseError, "blank cells are only allowed in the example window");
        blanks->push_back({rows.size(), r.size()});
        r.emplace_back(0);
      } else {
        r.push_back(v.get<Rational>());
      }
    }
    rows.push_back(std::move(r));
  }
  MatrixWindow padded = MatrixWindow::from_rows(rows);
  if (padded.cols() > cols) throw Error(ErrorCode::ParseError, "printed row longer than 'cols'");
  MatrixWindow out(padded.rows(), cols);
  for (std::size_t i = 0; i < padded.rows(); ++i) {
    for (std::size_t k = 0; k < padded.cols(); ++k) out(i, k) = padded(i, k);
  }
  return out;
}

std::vector<EntryFlag> parse_flags(const json& j) {
  std::vector<EntryFlag> flags;
  for (const json& f : j) {
    EntryFlag flag;
    flag.row = need(f, "row").get<std::size_t>();
    flag.col = need(f, "col").get<std::size_t>();
    const json& printed = need(f, "printed");
    if (!printed.is_null()) flag.printed = printed.get<Rational>();
    flag.derived = need(f, "derived").get<Rational>();
    flag.oracle = text_or_empty(f, "oracle");
    flag.note = text_or_empty(f, "note");
    flags.push_back(std::move(flag));
  }
  return flags;
}

TPVerdict parse_verdict(const json& j) {
  const std::string v = j.get<std::string>();
  if (v == "WindowTP") return TPVerdict::WindowTP;
  if (v == "NotTP") return TPVerdict::NotTP;
  throw Error(ErrorCode::ParseError, "unknown verdict '" + v + "'");
}

std::string entry_text(std::size_t i, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(k) + ")";
}

std::string printed_text(const EntryFlag& f) { return f.printed ? f.printed->to_string() : "blank"; }

// Every entry must equal the expected one, except flagged entries, which must
// equal their derived value.
CheckResult compare_window(std::string name, const MatrixWindow& built, const MatrixWindow& expected,
                           const std::vector<EntryFlag>& flags) {
  CheckResult r{std::move(name), CheckStatus::Pass, {}};
  if (built.rows() != expected.rows() || built.cols() != expected.cols()) {
    r.status = CheckStatus::Fail;
    r.detail = "shape differs";
    return r;
  }
  std::string flagged;
  for (std::size_t i = 0; i < built.rows(); ++i) {
    for (std::size_t k = 0; k < built.cols(); ++k) {
      const auto flag = std::find_if(flags.begin(), flags.end(),
                                     [&](const EntryFlag& f) { return f.row == i && f.col == k; });
      const Rational& want = flag != flags.end() ? flag->derived : expected(i, k);
      if (built(i, k) != want) {
        r.status = CheckStatus::Fail;
        r.detail = "first mismatch at " + entry_text(i, k) + ": expected " + want.to_string() + ", built " +
                   built(i, k).to_string();
        return r;
      }
      if (flag != flags.end()) {
        if (!flagged.empty()) flagged += "; ";
        flagged += entry_text(i, k) + " printed " + printed_text(*flag) + ", derived " + flag->derived.to_string();
      }
    }
  }
  if (!flagged.empty()) {
    r.status = CheckStatus::Flagged;
    r.detail = flagged;
  } else {
    r.detail = "all " + std::to_string(built.rows() * built.cols()) + " entries match";
  }
  return r;
}

CheckResult boolean_check(std::string name, bool ok, std::string detail) {
  return CheckResult{std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

std::string witness_text(const MinorWitness& w) {
  std::ostringstream os;
  os << "rows {";
  for (std::size_t i = 0; i < w.rows.size(); ++i) os << (i ? "," : "") << w.rows[i];
  os << "} cols {";
  for (std::size_t i = 0; i < w.cols.size(); ++i) os << (i ? "," : "") << w.cols[i];
  os << "} value " << w.value;
  return os.str();
}

AlmostRiordanSpec closed_form_spec(const ClosedFormSource& src, int order) {
  return AlmostRiordanSpec{gf_series(src.d, order), gf_series(src.g, order), gf_series(src.f, order)};
}

template <typename F>
void guarded(ExampleReport& report, const std::string& name, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report.checks.push_back(CheckResult{name, CheckStatus::Fail, std::string("error: ") + e.what()});
  }
}

ExampleReport run_example(const PublishedExample& ex) {
  ExampleReport report;
  report.id = ex.id;
  const std::size_t rows = ex.expected.rows();
  const std::size_t cols = ex.expected.cols();
  const int n = static_cast<int>(rows) - 1;
  std::optional<MatrixWindow> window;
  std::optional<MatrixWindow> family_window;

  if (ex.closed_form) {
    guarded(report, "closed-form window", [&] {
      const AlmostRiordanSpec spec = closed_form_spec(*ex.closed_form, n);
      window = build_almost_relaxed(spec, rows, cols);
      report.checks.push_back(compare_window("closed-form window", *window, ex.expected, ex.flags));
    });
    guarded(report, "closed-form production identity", [&] {
      const AlmostRiordanSpec spec = closed_form_spec(*ex.closed_form, n + 1);
      const AZWTriple azw = azw_from_almost(spec, n);
      const bool ok = check_production_identity(spec, azw, rows - 1);
      report.checks.push_back(boolean_check("closed-form production identity", ok,
                                            ok ? "M J equals M with its first row deleted" : "identity fails"));
    });
  }

  if (ex.family) {
    const FamilySource& fam = *ex.family;
    guarded(report, "family window", [&] {
      const AlmostRiordanSpec spec = recover_from_tridiagonal(fam.production, fam.d0, n);
      const MatrixWindow built = build_almost_relaxed(spec, rows, cols);
      if (!window) window = built;
      family_window = built;
      std::vector<EntryFlag> flags = ex.flags;
      flags.insert(flags.end(), fam.mismatches.begin(), fam.mismatches.end());
      CheckResult r = compare_window("family window " + fam.label, built, ex.expected, flags);
      if (!fam.note.empty() && r.status == CheckStatus::Flagged) r.detail += " (" + fam.note + ")";
      report.checks.push_back(std::move(r));
    });
    guarded(report, "family production identity", [&] {
      const AlmostRiordanSpec spec = recover_from_tridiagonal(fam.production, fam.d0, n + 1);
      const bool ok = check_production_identity(spec, fam.production.to_azw(n + 1), rows - 1);
      report.checks.push_back(boolean_check("family production identity", ok,
                                            ok ? "recovered array reproduces its tridiagonal J" : "identity fails"));
    });
  }

  if (window) {
    guarded(report, "tp check", [&] {
      const TPReport tp = tp_check(*window, ex.tp_order, MinorStrategy::All);
      bool ok = tp.verdict == ex.tp_verdict;
      std::string detail = std::string(verdict_name(tp.verdict)) + " at order " + std::to_string(ex.tp_order) +
                           " (" + std::to_string(tp.minors_checked) + " minors)";
      if (tp.witness) detail += ", witness " + witness_text(*tp.witness);
      if (ex.witness) ok = ok && tp.witness && *tp.witness == *ex.witness;
      report.checks.push_back(boolean_check("tp check", ok, detail));
    });
  }

  if (family_window && ex.family->tp_order) {
    guarded(report, "family tp check", [&] {
      const TPReport tp = tp_check(*family_window, *ex.family->tp_order, MinorStrategy::All);
      std::string detail = std::string(verdict_name(tp.verdict)) + " at order " +
                           std::to_string(*ex.family->tp_order);
      if (tp.witness) detail += ", witness " + witness_text(*tp.witness);
      report.checks.push_back(boolean_check("family tp check", tp.verdict == ex.family->tp_verdict, detail));
    });
  }

  if (ex.production && ex.closed_form) {
    guarded(report, "production window", [&] {
      const std::size_t jr = ex.production->window.rows();
      const std::size_t jc = ex.production->window.cols();
      const AlmostRiordanSpec spec = closed_form_spec(*ex.closed_form, static_cast<int>(jr) + 1);
      const MatrixWindow from_azw = production_from_azw(azw_from_almost(spec, static_cast<int>(jr)), jr, jc);
      report.checks.push_back(compare_window("production window", from_azw, ex.production->window, {}));
      if (window && window->rows() == jr + 1 && window->cols() == jc) {
        report.checks.push_back(
            compare_window("extracted production window", extract_production(*window), ex.production->window, {}));
      }
      const std::size_t sq = std::min(jr, jc);
      const TPReport jt = jacobi_tp_check(ex.production->window.block(0, 0, sq, sq), static_cast<int>(sq));
      std::string detail = std::string(verdict_name(jt.verdict));
      if (jt.witness) detail += ", witness " + witness_text(*jt.witness);
      report.checks.push_back(boolean_check("production tp check", jt.verdict == ex.production->verdict, detail));
    });
  }

  if (ex.azw && ex.closed_form) {
    guarded(report, "A/Z/W expansions", [&] {
      const int order = ex.azw->order;
      const AZWTriple azw = azw_from_almost(closed_form_spec(*ex.closed_form, order + 1), order);
      const bool a = azw.A == gf_series(ex.azw->A, order);
      const bool z = azw.Z == gf_series(ex.azw->Z, order);
      const bool w = azw.W == gf_series(ex.azw->W, order);
      std::string detail = "A = " + azw.A.to_string();
      if (!z) detail += "; Z differs: " + azw.Z.to_string();
      if (!w) detail += "; W differs: " + azw.W.to_string();
      report.checks.push_back(boolean_check("A/Z/W expansions", a && z && w, detail));
    });
  }

  for (const CheckResult& c : report.checks) report.status = std::max(report.status, c.status);
  return report;
}

}  // namespace

bool CorpusReport::passed() const {
  return std::none_of(examples.begin(), examples.end(),
                      [](const ExampleReport& e) { return e.status == CheckStatus::Fail; });
}

std::string_view check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Flagged:
      return "flagged";
    case CheckStatus::Fail:
      return "fail";
  }
  return "fail";
}

std::string default_corpus_path() {
  if (const char* env = std::getenv("RIORDAN_CORPUS"); env != nullptr && *env != '\0') return env;
  const std::string source = RIORDAN_CORPUS_SOURCE;
  if (!source.empty() && std::filesystem::exists(source)) return source;
  return RIORDAN_CORPUS_INSTALLED;
}

// A flag's printed value must be the printed cell; a blank cell needs a flag.
void check_flags_against_print(const PublishedExample& ex) {
  for (const EntryFlag& f : ex.flags) {
    const bool blank = std::find(ex.blanks.begin(), ex.blanks.end(), CellIndex{f.row, f.col}) != ex.blanks.end();
    if (f.row >= ex.expected.rows() || f.col >= ex.expected.cols() || blank == f.printed.has_value() ||
        (f.printed && *f.printed != ex.expected(f.row, f.col))) {
      throw Error(ErrorCode::ParseError, ex.id + ": flag at " + entry_text(f.row, f.col) + " disagrees with the print");
    }
  }
  for (const CellIndex& b : ex.blanks) {
    const bool flagged = std::any_of(ex.flags.begin(), ex.flags.end(),
                                     [&](const EntryFlag& f) { return f.row == b[0] && f.col == b[1]; });
    if (!flagged) throw Error(ErrorCode::ParseError, ex.id + ": blank cell " + entry_text(b[0], b[1]) + " lacks a flag");
  }
}

std::vector<PublishedExample> parse_corpus(const json& j) {
  std::vector<PublishedExample> out;
  try {
    for (const json& rec : need(j, "examples")) {
      PublishedExample ex;
      ex.id = need(rec, "id").get<std::string>();
      ex.title = text_or_empty(rec, "title");
      ex.notes = text_or_empty(rec, "notes");
      if (const auto it = rec.find("closed_form"); it != rec.end()) {
        ex.closed_form = ClosedFormSource{need(*it, "d").get<std::string>(), need(*it, "g").get<std::string>(),
                                          need(*it, "f").get<std::string>()};
      }
      if (const auto it = rec.find("family"); it != rec.end()) {
        FamilySource fam;
        fam.label = text_or_empty(*it, "label");
        fam.production = need(*it, "production").get<TridiagonalProduction>();
        fam.d0 = need(*it, "d0").get<Rational>();
        if (const auto m = it->find("mismatches"); m != it->end()) fam.mismatches = parse_flags(*m);
        fam.note = text_or_empty(*it, "note");
        if (const auto tp = it->find("tp"); tp != it->end()) {
          fam.tp_order = need(*tp, "order").get<int>();
          fam.tp_verdict = parse_verdict(need(*tp, "verdict"));
        }
        ex.family = std::move(fam);
      }
      ex.expected = ragged_window(need(rec, "printed_rows"), need(rec, "cols").get<std::size_t>(), &ex.blanks);
      if (const auto it = rec.find("flags"); it != rec.end()) ex.flags = parse_flags(*it);
      check_flags_against_print(ex);
      const json& tp = need(rec, "tp");
      ex.tp_order = need(tp, "order").get<int>();
      ex.tp_verdict = parse_verdict(need(tp, "verdict"));
      if (const auto w = tp.find("witness"); w != tp.end() && !w->is_null()) {
        ex.witness = MinorWitness{need(*w, "rows").get<std::vector<std::size_t>>(),
                                  need(*w, "cols").get<std::vector<std::size_t>>(), need(*w, "value").get<Rational>()};
      }
      if (const auto it = rec.find("production"); it != rec.end()) {
        ex.production = ProductionExpectation{
            ragged_window(need(*it, "printed_rows"), need(*it, "cols").get<std::size_t>()),
            parse_verdict(need(*it, "verdict"))};
      }
      if (const auto it = rec.find("azw"); it != rec.end()) {
        ex.azw = AZWClosedForms{need(*it, "A").get<std::string>(), need(*it, "Z").get<std::string>(),
                                need(*it, "W").get<std::string>(), need(*it, "order").get<int>()};
      }
      out.push_back(std::move(ex));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed corpus: ") + e.what());
  }
  return out;
}

std::vector<PublishedExample> load_corpus(const std::string& path) {
  return parse_corpus(parse_json_text(read_text_file(path)));
}

std::vector<PublishedExample> load_corpus() { return load_corpus(default_corpus_path()); }

CorpusReport run_corpus(const std::vector<PublishedExample>& examples, const std::vector<std::string>& ids) {
  CorpusReport report;
  for (const PublishedExample& ex : examples) {
    if (ids.empty() || std::find(ids.begin(), ids.end(), ex.id) != ids.end()) {
      report.examples.push_back(run_example(ex));
    }
  }
  for (const std::string& id : ids) {
    const bool known = std::any_of(examples.begin(), examples.end(),
                                   [&](const PublishedExample& ex) { return ex.id == id; });
    if (!known) {
      report.examples.push_back(
          ExampleReport{id, CheckStatus::Fail, {CheckResult{"lookup", CheckStatus::Fail, "unknown example id"}}});
    }
  }
  return report;
}

json corpus_report_json(const CorpusReport& report) {
  json examples = json::array();
  for (const ExampleReport& ex : report.examples) {
    json checks = json::array();
    for (const CheckResult& c : ex.checks) {
      checks.push_back(json{{"name", c.name}, {"status", std::string(check_status_name(c.status))}, {"detail", c.detail}});
    }
    examples.push_back(json{{"id", ex.id}, {"status", std::string(check_status_name(ex.status))}, {"checks", checks}});
  }
  return json{{"passed", report.passed()}, {"examples", examples}};
}

std::string corpus_report_text(const CorpusReport& report) {
  std::ostringstream os;
  for (const ExampleReport& ex : report.examples) {
    os << ex.id << ": " << check_status_name(ex.status) << '\n';
    for (const CheckResult& c : ex.checks) {
      os << "  [" << check_status_name(c.status) << "] " << c.name << ": " << c.detail << '\n';
    }
  }
  os << (report.passed() ? "corpus passed" : "corpus FAILED") << '\n';
  return os.str();
}

}  // namespace riordan

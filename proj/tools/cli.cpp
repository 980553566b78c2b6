#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "riordan/riordan.hpp"

namespace riordan::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "pretty";
  std::string out_path;
  int decimal = -1;

  std::size_t rows = 6;
  std::optional<std::size_t> cols;
  int order = -1;

  std::string d, g, f;
  std::string matrix;
  std::string tridiagonal;
  std::string family, alpha, beta;

  std::string kind = "almost";
  std::string left, right;
  std::optional<int> max_order;
  std::string strategy = "all";
  std::string d0 = "1";

  std::string a0, a1, a2;
  std::optional<int> n;
  bool find_negative = false;
  std::optional<int> limit;

  std::string p;
  std::size_t window = 6;

  bool all = false;
  std::vector<std::string> ids;
  std::string corpus;

  bool grid = false;
  std::string alpha_range, beta_range;
  int steps = 20;
};

struct Output {
  json data;
  std::string pretty;
  std::optional<std::string> csv;
  int code = kOk;
};

std::uint64_t minor_cap() {
  const char* env = std::getenv("RIORDAN_TP_MAX_MINORS");
  if (env == nullptr || *env == '\0') return 2'000'000;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw UsageError("RIORDAN_TP_MAX_MINORS must be a nonnegative integer");
  }
}

Rational rational_flag(const std::string& text, const char* name) {
  if (text.empty()) throw UsageError(std::string("--") + name + " is required");
  return Rational::parse(text);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string series_line(const Series& s, int decimal) {
  std::string line = s.to_string();
  if (decimal >= 0) {
    line += "\n    ~";
    for (int k = 0; k <= s.order(); ++k) line += ' ' + s[k].to_decimal(decimal);
  }
  return line;
}

Output matrix_output(const MatrixWindow& m, const Options& o) {
  Output out;
  out.data = m;
  if (o.decimal >= 0) {
    json dec = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_decimal(o.decimal));
      dec.push_back(std::move(row));
    }
    out.data["decimal"] = std::move(dec);
  }
  out.pretty = format_pretty(m, o.decimal);
  out.csv = matrix_to_csv(m);
  return out;
}

Output report_output(const TPReport& r) {
  Output out;
  out.data = r;
  std::ostringstream os;
  os << "verdict: " << verdict_name(r.verdict) << " (checked order " << r.checked_order << ", "
     << r.minors_checked << " minors, strategy " << strategy_name(r.strategy) << ")\n";
  if (r.witness) {
    os << "witness: rows {";
    for (std::size_t i = 0; i < r.witness->rows.size(); ++i) os << (i ? "," : "") << r.witness->rows[i];
    os << "} cols {";
    for (std::size_t i = 0; i < r.witness->cols.size(); ++i) os << (i ? "," : "") << r.witness->cols[i];
    os << "} value " << r.witness->value << '\n';
  } else {
    os << "note: " << TPReport::kWindowNote << '\n';
  }
  out.pretty = os.str();
  return out;
}

std::size_t cols_of(const Options& o) { return o.cols.value_or(o.rows); }

AlmostRiordanSpec almost_from_flags(const Options& o, int order) {
  if (o.d.empty() || o.g.empty() || o.f.empty()) throw UsageError("--d, --g and --f are required");
  return AlmostRiordanSpec{gf_series(o.d, order), gf_series(o.g, order), gf_series(o.f, order)};
}

TridiagonalProduction production_from_flags(const Options& o) {
  if (!o.tridiagonal.empty()) {
    const std::vector<std::string> parts = split(o.tridiagonal, ',');
    if (parts.size() != 8) throw UsageError("--tridiagonal takes a0,a1,a2,z0,z1,z2,w0,w1");
    std::vector<Rational> v;
    for (const std::string& s : parts) v.push_back(Rational::parse(s));
    return TridiagonalProduction{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
  }
  if (!o.family.empty()) {
    return azw_family(parse_family(o.family), rational_flag(o.alpha, "alpha"), rational_flag(o.beta, "beta"));
  }
  throw UsageError("give --tridiagonal or --family with --alpha and --beta");
}

json spec_json(const AlmostRiordanSpec& s) { return json{{"d", s.d}, {"g", s.g}, {"f", s.f}}; }

std::string spec_text(const AlmostRiordanSpec& s, int decimal) {
  return "d = " + series_line(s.d, decimal) + "\ng = " + series_line(s.g, decimal) + "\nf = " +
         series_line(s.f, decimal) + "\n";
}

Output cmd_build(const Options& o) {
  const int order = std::max(static_cast<int>(o.rows) - 1, o.order);
  if (o.g.empty() || o.f.empty()) throw UsageError("--g and --f are required");
  if (o.d.empty()) {
    return matrix_output(build_riordan(RiordanSpec{gf_series(o.g, order), gf_series(o.f, order)}, o.rows, cols_of(o)), o);
  }
  return matrix_output(build_almost(almost_from_flags(o, order), o.rows, cols_of(o)), o);
}

Output cmd_build_quasi(const Options& o) {
  const int order = std::max(static_cast<int>(o.rows) - 1, o.order);
  if (o.g.empty() || o.f.empty()) throw UsageError("--g and --f are required");
  return matrix_output(build_quasi(QuasiRiordanSpec{gf_series(o.g, order), gf_series(o.f, order)}, o.rows, cols_of(o)), o);
}

Output cmd_mult(const Options& o) {
  const int order = o.order >= 0 ? o.order : 8;
  const std::vector<std::string> l = split(o.left, ';');
  const std::vector<std::string> r = split(o.right, ';');
  Output out;
  if (o.kind == "almost") {
    if (l.size() != 3 || r.size() != 3) throw UsageError("almost factors are written \"d;g;f\"");
    const AlmostRiordanSpec x{gf_series(l[0], order), gf_series(l[1], order), gf_series(l[2], order)};
    const AlmostRiordanSpec y{gf_series(r[0], order), gf_series(r[1], order), gf_series(r[2], order)};
    const AlmostRiordanSpec p = mult_almost(x, y);
    out.data = spec_json(p);
    out.pretty = spec_text(p, o.decimal);
  } else if (o.kind == "quasi") {
    if (l.size() != 2 || r.size() != 2) throw UsageError("quasi factors are written \"g;f\"");
    const QuasiRiordanSpec x{gf_series(l[0], order), gf_series(l[1], order)};
    const QuasiRiordanSpec y{gf_series(r[0], order), gf_series(r[1], order)};
    const QuasiRiordanSpec p = mult_quasi(x, y);
    out.data = json{{"g", p.g}, {"f", p.f}};
    out.pretty = "g = " + series_line(p.g, o.decimal) + "\nf = " + series_line(p.f, o.decimal) + "\n";
  } else {
    throw UsageError("--kind must be almost or quasi");
  }
  return out;
}

Output azw_output(const AZWTriple& azw, const Options& o) {
  Output out;
  out.data = azw;
  out.pretty = "A = " + series_line(azw.A, o.decimal) + "\nZ = " + series_line(azw.Z, o.decimal) +
               "\nW = " + series_line(azw.W, o.decimal) + "\nz0 = " + azw.z0().to_string() +
               "\nw0 = " + azw.w0().to_string() + "\n";
  return out;
}

Output cmd_azw(const Options& o) {
  const int order = o.order >= 0 ? o.order : 6;
  if (o.kind == "quasi") {
    if (o.g.empty() || o.f.empty()) throw UsageError("--g and --f are required");
    return azw_output(azw_from_quasi(QuasiRiordanSpec{gf_series(o.g, order + 1), gf_series(o.f, order + 1)}, order), o);
  }
  if (o.kind != "almost") throw UsageError("--kind must be almost or quasi");
  return azw_output(azw_from_almost(almost_from_flags(o, order + 1), order), o);
}

Output cmd_production(const Options& o) {
  const int need = static_cast<int>(o.rows);
  if (!o.tridiagonal.empty() || !o.family.empty()) {
    return matrix_output(production_from_azw(production_from_flags(o).to_azw(need), o.rows, cols_of(o)), o);
  }
  const AZWTriple azw = azw_from_almost(almost_from_flags(o, need + 1), need);
  return matrix_output(production_from_azw(azw, o.rows, cols_of(o)), o);
}

MatrixWindow matrix_from_flags(const Options& o) {
  if (!o.matrix.empty()) return read_matrix_file(o.matrix);
  const int order = std::max(static_cast<int>(o.rows) - 1, o.order);
  if (!o.d.empty()) return build_almost(almost_from_flags(o, order), o.rows, cols_of(o));
  if (!o.g.empty() && !o.f.empty()) {
    return build_riordan(RiordanSpec{gf_series(o.g, order), gf_series(o.f, order)}, o.rows, cols_of(o));
  }
  throw UsageError("give --matrix FILE or generating functions --g, --f (and --d)");
}

Output cmd_extract(const Options& o) { return matrix_output(extract_production(matrix_from_flags(o)), o); }

Output cmd_recover(const Options& o) {
  const int order = std::max(o.order >= 0 ? o.order : 8, static_cast<int>(o.rows) - 1);
  const AlmostRiordanSpec spec = recover_from_tridiagonal(production_from_flags(o), Rational::parse(o.d0), order);
  const MatrixWindow m = build_almost_relaxed(spec, o.rows, cols_of(o));
  Output out;
  out.data = spec_json(spec);
  out.data["window"] = m;
  out.pretty = spec_text(spec, o.decimal) + format_pretty(m, o.decimal);
  return out;
}

Output cmd_tp_check(const Options& o, std::ostream& err) {
  const MatrixWindow m = matrix_from_flags(o);
  const int bound = static_cast<int>(std::min(m.rows(), m.cols()));
  const MinorStrategy strategy = parse_strategy(o.strategy);
  if (strategy == MinorStrategy::Jacobi) return report_output(jacobi_tp_check(m, o.max_order.value_or(bound)));
  const int k = o.max_order.value_or(std::min(6, bound));
  if (k < 1 || k > bound) throw UsageError("--max-order must lie in 1.." + std::to_string(bound));
  const std::uint64_t count = count_minors(m.rows(), m.cols(), k, strategy);
  err << "enumerating up to " << count << " minors (order <= " << k << ", strategy " << strategy_name(strategy)
      << ")\n";
  return report_output(tp_check(m, k, strategy, minor_cap()));
}

Output cmd_jacobi(const Options& o) {
  if (!o.matrix.empty()) {
    const MatrixWindow m = read_matrix_file(o.matrix);
    return report_output(jacobi_tp_check(m, o.n.value_or(static_cast<int>(m.rows()))));
  }
  const int n = o.n.value_or(12);
  if (n < 1) throw UsageError("--n must be positive");
  return report_output(jacobi_tp_check(tridiagonal_window(production_from_flags(o), static_cast<std::size_t>(n)), n));
}

Output cmd_det_t(const Options& o) {
  const Rational a0 = rational_flag(o.a0, "a0");
  const Rational a1 = rational_flag(o.a1, "a1");
  const Rational a2 = rational_flag(o.a2, "a2");
  Output out;
  if (o.find_negative) {
    const int n = find_negative_T(a0, a1, a2, o.limit);
    out.data = json{{"first_negative", n}, {"value", det_T_recurrence(a0, a1, a2, n)}};
    out.pretty = "first negative det T_n at n = " + std::to_string(n) + " (value " +
                 det_T_recurrence(a0, a1, a2, n).to_string() + ")\n";
    return out;
  }
  const int n = o.n.value_or(6);
  json values = json::array();
  std::ostringstream os;
  bool agree = true;
  for (int k = 1; k <= n; ++k) {
    const Rational r = det_T_recurrence(a0, a1, a2, k);
    agree = agree && r == det_T_closed(a0, a1, a2, k);
    values.push_back(r);
    os << "det T_" << k << " = " << r;
    if (o.decimal >= 0 && !r.is_integer()) os << " (~" << r.to_decimal(o.decimal) << ")";
    os << '\n';
  }
  os << "closed form " << (agree ? "agrees" : "DISAGREES") << " with the recurrence\n";
  out.data = json{{"det_T", values}, {"closed_form_agrees", agree}, {"discriminant", a1 * a1 - 4 * a0 * a2}};
  out.pretty = os.str();
  return out;
}

Output cmd_det_j(const Options& o) {
  const TridiagonalProduction p = production_from_flags(o);
  const int n = o.n.value_or(6);
  json values = json::array();
  std::ostringstream os;
  for (int k = 1; k <= n; ++k) {
    const Rational v = det_J(p, k);
    values.push_back(v);
    os << "det J_" << k << " = " << v << '\n';
  }
  Output out;
  out.data = json{{"det_J", values}};
  out.pretty = os.str();
  return out;
}

Output cmd_thm34(const Options& o) {
  const TridiagonalProduction p = production_from_flags(o);
  const Rational disc = p.a1 * p.a1 - 4 * p.a0 * p.a2;
  Output out;
  out.data = json{{"production", p},
                  {"discriminant", disc},
                  {"thm34", std::string(theorem_verdict_name(thm34_check(p)))},
                  {"one_root", std::string(condition_verdict_name(one_root_check(p)))}};
  out.pretty = "a1^2 - 4 a0 a2 = " + disc.to_string() + "\nthree-parameter criterion: " +
               std::string(theorem_verdict_name(thm34_check(p))) + "\ndouble-root criterion: " +
               std::string(condition_verdict_name(one_root_check(p))) + "\n";
  return out;
}

std::pair<Rational, Rational> range_flag(const std::string& text, const char* name) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.size() != 2) throw UsageError(std::string("--") + name + " takes lo:hi");
  return {Rational::parse(parts[0]), Rational::parse(parts[1])};
}

Output cmd_region(const Options& o) {
  if (o.family.empty()) throw UsageError("--family is required");
  const Family family = parse_family(o.family);
  Output out;
  if (o.grid) {
    const auto [alo, ahi] = range_flag(o.alpha_range, "alpha-range");
    const auto [blo, bhi] = range_flag(o.beta_range, "beta-range");
    const std::vector<RegionPoint> pts = region_grid(family, RegionBounds{alo, ahi, blo, bhi, o.steps, o.steps});
    json arr = json::array();
    for (const RegionPoint& p : pts) arr.push_back(json{{"alpha", p.alpha}, {"beta", p.beta}, {"inside", p.inside}});
    out.data = json{{"family", std::string(family_name(family))}, {"points", arr}};
    out.pretty = region_grid_csv(pts);
    out.csv = out.pretty;
    return out;
  }
  const Rational alpha = rational_flag(o.alpha, "alpha");
  const Rational beta = rational_flag(o.beta, "beta");
  const bool inside = region_check(family, alpha, beta);
  out.data = json{{"family", std::string(family_name(family))}, {"alpha", alpha}, {"beta", beta}, {"inside", inside}};
  out.pretty = std::string(family_name(family)) + "(" + alpha.to_string() + "," + beta.to_string() + "): " +
               (inside ? "inside" : "outside") + " the feasible region\n";
  return out;
}

Output cmd_pf(const Options& o) {
  if (o.p.empty()) throw UsageError("--p is required");
  const int order = std::max(static_cast<int>(o.window) - 1, std::max(o.order, 2));
  const Series s = gf_series(o.p, order);
  Output out;
  std::ostringstream os;
  json poly = nullptr;
  try {
    const bool pf = pf_polynomial_check(s);
    poly = pf;
    os << "polynomial test: " << (pf ? "PF" : "not PF") << '\n';
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegreeTooHigh) throw;
    os << "polynomial test: not applicable (degree above 2)\n";
  }
  const int k = o.max_order.value_or(std::min<int>(4, static_cast<int>(o.window)));
  const TPReport report = pf_window_check(s, o.window, k);
  os << "Toeplitz window " << o.window << "x" << o.window << ": " << report_output(report).pretty;
  out.data = json{{"polynomial_pf", poly}, {"window", report}};
  out.pretty = os.str();
  return out;
}

Output cmd_verify(const Options& o) {
  if (!o.all && o.ids.empty()) throw UsageError("give --all or one or more --id");
  const std::vector<PublishedExample> examples = o.corpus.empty() ? load_corpus() : load_corpus(o.corpus);
  const CorpusReport report = run_corpus(examples, o.all ? std::vector<std::string>{} : o.ids);
  Output out;
  out.data = corpus_report_json(report);
  out.pretty = corpus_report_text(report);
  out.code = report.passed() ? kOk : kVerificationFailure;
  return out;
}

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::SyntaxError || code == ErrorCode::ParseError ? kUsageError : kEvaluationError;
}

void emit_error(std::ostream& out, std::ostream& err, const std::string& format, const std::string& code,
                const std::string& message, std::optional<std::size_t> offset, int exit_code) {
  if (format == "json") {
    json j{{"error", {{"code", code}, {"message", message}}}, {"exit_code", exit_code}};
    if (offset) j["error"]["offset"] = *offset;
    out << j.dump(2) << '\n';
  } else {
    err << "error [" << code << "]: " << message;
    if (offset) err << " (at byte " << *offset << ")";
    err << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact almost-Riordan arrays, production matrices and total-positivity checks", "riordan"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"pretty", "json", "csv"}));
  app.add_option("--out", o.out_path, "Write the result to FILE");
  app.add_option("--decimal", o.decimal, "Add rounded decimals with N digits (display only)");

  auto spec_flags = [&](CLI::App* sub, bool with_d) {
    if (with_d) sub->add_option("--d", o.d, "Column 0 generating function");
    sub->add_option("--g", o.g, "Generating function g");
    sub->add_option("--f", o.f, "Generating function f");
  };
  auto window_flags = [&](CLI::App* sub) {
    sub->add_option("--rows", o.rows, "Window rows");
    sub->add_option("--cols", o.cols, "Window columns (default: rows)");
    sub->add_option("--order", o.order, "Series truncation order");
  };
  auto production_flags = [&](CLI::App* sub) {
    sub->add_option("--tridiagonal", o.tridiagonal, "a0,a1,a2,z0,z1,z2,w0,w1");
    sub->add_option("--family", o.family, "AZW1..AZW4");
    sub->add_option("--alpha", o.alpha, "Family parameter alpha");
    sub->add_option("--beta", o.beta, "Family parameter beta");
  };

  CLI::App* build = app.add_subcommand("build", "Window of (d|g,f), or (g,f) without --d");
  spec_flags(build, true);
  window_flags(build);
  CLI::App* build_quasi = app.add_subcommand("build-quasi", "Window of [g,f]");
  spec_flags(build_quasi, false);
  window_flags(build_quasi);
  CLI::App* mult = app.add_subcommand("mult", "Spec-level product of two arrays");
  mult->add_option("--kind", o.kind, "almost or quasi");
  mult->add_option("--left", o.left, "\"d;g;f\" or \"g;f\"")->required();
  mult->add_option("--right", o.right, "\"d;g;f\" or \"g;f\"")->required();
  mult->add_option("--order", o.order, "Series truncation order");
  CLI::App* azw = app.add_subcommand("azw", "A, Z and W sequences");
  spec_flags(azw, true);
  azw->add_option("--kind", o.kind, "almost, or quasi for [g,f]");
  azw->add_option("--order", o.order, "Truncation order of A, Z, W");
  CLI::App* production = app.add_subcommand("production", "Production matrix window");
  spec_flags(production, true);
  window_flags(production);
  production_flags(production);
  CLI::App* extract = app.add_subcommand("extract-production", "Production matrix from a window");
  extract->add_option("--matrix", o.matrix, "Matrix file (JSON or CSV)");
  spec_flags(extract, true);
  window_flags(extract);
  CLI::App* recover = app.add_subcommand("recover", "(d|g,f) from tridiagonal production data");
  production_flags(recover);
  recover->add_option("--d0", o.d0, "d(0)");
  window_flags(recover);
  CLI::App* tp = app.add_subcommand("tp-check", "Enumerate minors of a window");
  tp->add_option("--matrix", o.matrix, "Matrix file (JSON or CSV)");
  spec_flags(tp, true);
  window_flags(tp);
  tp->add_option("--max-order", o.max_order, "Largest minor order (default min(6, size))");
  tp->add_option("--strategy", o.strategy, "all, contiguous_rows or jacobi");
  CLI::App* jacobi = app.add_subcommand("jacobi-check", "Contiguous principal minors of a tridiagonal J");
  jacobi->add_option("--matrix", o.matrix, "Matrix file (JSON or CSV)");
  production_flags(jacobi);
  jacobi->add_option("--n", o.n, "Window size");
  CLI::App* det_t = app.add_subcommand("det-t", "det T_n of the Toeplitz tridiagonal matrix");
  det_t->add_option("--a0", o.a0)->required();
  det_t->add_option("--a1", o.a1)->required();
  det_t->add_option("--a2", o.a2)->required();
  det_t->add_option("--n", o.n, "Largest n");
  det_t->add_flag("--find-negative", o.find_negative, "Smallest n with det T_n < 0");
  det_t->add_option("--limit", o.limit, "Search limit for --find-negative");
  CLI::App* det_j = app.add_subcommand("det-j", "Leading principal minors of J");
  production_flags(det_j);
  det_j->add_option("--n", o.n, "Largest n");
  CLI::App* thm = app.add_subcommand("thm34", "Closed-form TP criteria for tridiagonal J");
  production_flags(thm);
  CLI::App* region = app.add_subcommand("region", "Feasible-region predicate");
  region->add_option("--family", o.family, "AZW1..AZW4")->required();
  region->add_option("--alpha", o.alpha);
  region->add_option("--beta", o.beta);
  region->add_flag("--grid", o.grid, "Emit a labeled grid");
  region->add_option("--alpha-range", o.alpha_range, "lo:hi");
  region->add_option("--beta-range", o.beta_range, "lo:hi");
  region->add_option("--steps", o.steps, "Grid intervals per axis");
  CLI::App* pf = app.add_subcommand("pf-check", "Polya frequency tests");
  pf->add_option("--p", o.p, "Series expression")->required();
  pf->add_option("--window", o.window, "Toeplitz window size");
  pf->add_option("--max-order", o.max_order, "Largest minor order");
  pf->add_option("--order", o.order, "Series truncation order");
  CLI::App* verify = app.add_subcommand("verify-paper", "Run the published-example corpus");
  verify->add_flag("--all", o.all, "Every example");
  verify->add_option("--id", o.ids, "Example id (repeatable)");
  verify->add_option("--corpus", o.corpus, "Corpus file");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit_error(out, err, o.format, "UsageError", e.what(), std::nullopt, kUsageError);
    return kUsageError;
  }

  try {
    Output result;
    if (build->parsed()) result = cmd_build(o);
    else if (build_quasi->parsed()) result = cmd_build_quasi(o);
    else if (mult->parsed()) result = cmd_mult(o);
    else if (azw->parsed()) result = cmd_azw(o);
    else if (production->parsed()) result = cmd_production(o);
    else if (extract->parsed()) result = cmd_extract(o);
    else if (recover->parsed()) result = cmd_recover(o);
    else if (tp->parsed()) result = cmd_tp_check(o, err);
    else if (jacobi->parsed()) result = cmd_jacobi(o);
    else if (det_t->parsed()) result = cmd_det_t(o);
    else if (det_j->parsed()) result = cmd_det_j(o);
    else if (thm->parsed()) result = cmd_thm34(o);
    else if (region->parsed()) result = cmd_region(o);
    else if (pf->parsed()) result = cmd_pf(o);
    else result = cmd_verify(o);

    std::string text;
    if (o.format == "json") {
      text = result.data.dump(2) + "\n";
    } else if (o.format == "csv") {
      if (!result.csv) throw UsageError("csv output is only available for matrix and grid results");
      text = *result.csv;
    } else {
      text = result.pretty;
    }
    if (o.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out_path, std::ios::binary);
      if (!file) throw UsageError("cannot write '" + o.out_path + "'");
      file << text;
    }
    return result.code;
  } catch (const UsageError& e) {
    emit_error(out, err, o.format, "UsageError", e.what(), std::nullopt, kUsageError);
    return kUsageError;
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    emit_error(out, err, o.format, std::string(error_code_name(e.code())), e.what(), e.offset(), code);
    return code;
  } catch (const json::exception& e) {
    emit_error(out, err, o.format, "ParseError", e.what(), std::nullopt, kUsageError);
    return kUsageError;
  }
}

}  // namespace riordan::cli

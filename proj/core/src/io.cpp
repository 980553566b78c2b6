#include "riordan/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "riordan/error.hpp"

namespace riordan {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, std::string("expected an object with key '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::ParseError, std::string("missing key '") + key + "'");
  return *it;
}

std::size_t size_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw Error(ErrorCode::ParseError, std::string("'") + key + "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::size_t> index_list(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "index list must be an array");
  std::vector<std::size_t> out;
  for (const json& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      throw Error(ErrorCode::ParseError, "indices must be nonnegative integers");
    }
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

void to_json(json& j, const Rational& r) { j = r.to_string(); }

void from_json(const json& j, Rational& r) {
  if (j.is_string()) {
    r = Rational::parse(j.get<std::string>());
  } else if (j.is_number_integer()) {
    r = Rational(j.get<long>());
  } else {
    throw Error(ErrorCode::ParseError, "rational must be a fraction string or an integer");
  }
}

void to_json(json& j, const Series& s) {
  json coeffs = json::array();
  for (const Rational& c : s.coeffs()) coeffs.push_back(c.to_string());
  j = json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

void from_json(const json& j, Series& s) {
  const json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array() || coeffs.empty()) throw Error(ErrorCode::ParseError, "'coeffs' must be a non-empty array");
  std::vector<Rational> values;
  for (const json& c : coeffs) values.push_back(c.get<Rational>());
  if (j.contains("order") && j.at("order").get<long long>() != static_cast<long long>(values.size()) - 1) {
    throw Error(ErrorCode::ParseError, "'order' disagrees with the number of coefficients");
  }
  s = Series(std::move(values));
}

void to_json(json& j, const MatrixWindow& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
    entries.push_back(std::move(row));
  }
  j = json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

void from_json(const json& j, MatrixWindow& m) {
  const std::size_t rows = size_field(j, "rows");
  const std::size_t cols = size_field(j, "cols");
  const json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows) {
    throw Error(ErrorCode::ParseError, "'entries' must hold exactly 'rows' rows");
  }
  MatrixWindow out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.size() != cols) {
      throw Error(ErrorCode::ParseError, "row " + std::to_string(i) + " must hold exactly 'cols' entries");
    }
    for (std::size_t k = 0; k < cols; ++k) out(i, k) = row[k].get<Rational>();
  }
  m = std::move(out);
}

void to_json(json& j, const AZWTriple& azw) {
  j = json{{"A", azw.A}, {"Z", azw.Z}, {"W", azw.W}, {"z0", azw.z0()}, {"w0", azw.w0()}, {"order", azw.order()}};
}

void from_json(const json& j, AZWTriple& azw) {
  azw.A = field(j, "A").get<Series>();
  azw.Z = field(j, "Z").get<Series>();
  azw.W = field(j, "W").get<Series>();
}

void to_json(json& j, const TridiagonalProduction& p) {
  j = json{{"a0", p.a0}, {"a1", p.a1}, {"a2", p.a2}, {"z0", p.z0},
           {"z1", p.z1}, {"z2", p.z2}, {"w0", p.w0}, {"w1", p.w1}};
}

void from_json(const json& j, TridiagonalProduction& p) {
  p.a0 = field(j, "a0").get<Rational>();
  p.a1 = field(j, "a1").get<Rational>();
  p.a2 = field(j, "a2").get<Rational>();
  p.z0 = field(j, "z0").get<Rational>();
  p.z1 = field(j, "z1").get<Rational>();
  p.z2 = field(j, "z2").get<Rational>();
  p.w0 = field(j, "w0").get<Rational>();
  p.w1 = field(j, "w1").get<Rational>();
}

void to_json(json& j, const TPReport& r) {
  j = json{{"verdict", std::string(verdict_name(r.verdict))},
           {"checked_order", r.checked_order},
           {"strategy", std::string(strategy_name(r.strategy))},
           {"minors_checked", r.minors_checked},
           {"witness", nullptr},
           {"note", std::string(TPReport::kWindowNote)}};
  if (r.witness) {
    j["witness"] = json{{"rows", r.witness->rows}, {"cols", r.witness->cols}, {"value", r.witness->value}};
  }
}

void from_json(const json& j, TPReport& r) {
  const std::string verdict = field(j, "verdict").get<std::string>();
  if (verdict == "WindowTP") {
    r.verdict = TPVerdict::WindowTP;
  } else if (verdict == "NotTP") {
    r.verdict = TPVerdict::NotTP;
  } else {
    throw Error(ErrorCode::ParseError, "unknown verdict '" + verdict + "'");
  }
  r.checked_order = field(j, "checked_order").get<int>();
  const std::string strategy = field(j, "strategy").get<std::string>();
  r.strategy = parse_strategy(strategy);
  r.minors_checked = field(j, "minors_checked").get<std::uint64_t>();
  const json& w = field(j, "witness");
  if (w.is_null()) {
    r.witness.reset();
  } else {
    r.witness = MinorWitness{index_list(field(w, "rows")), index_list(field(w, "cols")), field(w, "value").get<Rational>()};
  }
}

std::string matrix_to_csv(const MatrixWindow& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (k > 0) out += ',';
      out += m(i, k).to_string();
    }
    out += '\n';
  }
  return out;
}

MatrixWindow matrix_from_csv(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    if (!line.empty()) {
      std::vector<Rational> row;
      std::size_t cell_start = 0;
      while (true) {
        const auto comma = line.find(',', cell_start);
        const std::string_view cell =
            trim(line.substr(cell_start, comma == std::string_view::npos ? std::string_view::npos : comma - cell_start));
        row.push_back(Rational::parse(cell));
        if (comma == std::string_view::npos) break;
        cell_start = comma + 1;
      }
      if (!rows.empty() && row.size() != rows.front().size()) {
        throw Error(ErrorCode::ParseError, "CSV rows differ in length");
      }
      rows.push_back(std::move(row));
    }
    start = end + 1;
  }
  if (rows.empty()) return MatrixWindow(0, 0);
  return MatrixWindow::from_rows(rows);
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what(), e.byte);
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MatrixWindow read_matrix_file(const std::string& path) {
  const std::string text = read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json_text(text).get<MatrixWindow>();
  return matrix_from_csv(text);
}

}  // namespace riordan

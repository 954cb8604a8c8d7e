// Copyright 2026 The pmeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pmeq/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pmeq/errors.hpp"

namespace pmeq {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error(ErrorCode::kParse, (line > 0 ? "line " + std::to_string(line) + ": " : "") + msg);
}

bool is_integer(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

bool is_unsigned(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](unsigned char c) { return std::isdigit(c); });
}

mpz_class to_mpz(const std::string& s) {
  return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

// Whitespace-separated tokens; a bracketed group is one token with its inner
// whitespace removed.
std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : line) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (depth > 0) {
        cur += ',';
        continue;
      }
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line with comments stripped; false at end of input.
  bool next(std::string& line) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
      line = raw;
      return true;
    }
    return false;
  }

  std::string require(const std::string& what) {
    std::string line;
    if (!next(line)) fail(number_, "unexpected end of input, expected " + what);
    return line;
  }

  int number() const { return number_; }

 private:
  std::istream& in_;
  int number_ = 0;
};

std::size_t parse_count(const std::string& token, int line, const std::string& what) {
  if (!is_unsigned(token)) fail(line, "expected " + what + ", got '" + token + "'");
  mpz_class v(token, 10);
  if (v > 4096) fail(line, what + " too large");
  return v.get_ui();
}

std::vector<Element> parse_row(const Field& f, const std::vector<std::string>& tokens,
                               std::size_t n, int line) {
  if (tokens.size() != n) {
    fail(line, "expected " + std::to_string(n) + " entries, got " +
                   std::to_string(tokens.size()));
  }
  std::vector<Element> out;
  for (const auto& t : tokens) {
    try {
      out.push_back(parse_element(f, t));
    } catch (const Error& e) {
      fail(line, e.message());
    }
  }
  return out;
}

std::string read_all(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Field parse_field_header(const std::string& line) {
  auto tokens = tokenize(line);
  if (tokens.size() < 2 || tokens[0] != "field") {
    throw Error(ErrorCode::kInvalidField, "expected a field header, got '" + line + "'");
  }
  if (tokens[1] == "rational" && tokens.size() == 2) return Field::rationals();
  if (tokens[1] != "gf" || tokens.size() < 3 || tokens.size() > 4) {
    throw Error(ErrorCode::kInvalidField, "unknown field '" + line + "'");
  }
  const std::string& size = tokens[2];
  const auto caret = size.find('^');
  const std::string p_text = size.substr(0, caret);
  if (!is_unsigned(p_text) || p_text.size() > 10) {
    throw Error(ErrorCode::kInvalidField, "bad characteristic '" + p_text + "'");
  }
  const std::uint64_t p = std::stoull(p_text);
  if (caret == std::string::npos) {
    if (tokens.size() != 3) throw Error(ErrorCode::kInvalidField, "trailing text in header");
    return Field::prime(p);
  }
  const std::string k_text = size.substr(caret + 1);
  if (!is_unsigned(k_text) || k_text.size() > 3 || std::stoi(k_text) < 1) {
    throw Error(ErrorCode::kInvalidField, "bad degree '" + k_text + "'");
  }
  const int k = std::stoi(k_text);
  if (tokens.size() == 3) {
    if (k == 1) return Field::prime(p);
    Field::prime(p);  // validates p
    return Field::extension(p, gfp::smallest_irreducible(p, k));
  }
  const std::string& list = tokens[3];
  if (list.size() < 2 || list.front() != '[' || list.back() != ']') {
    throw Error(ErrorCode::kInvalidField, "modulus must be a bracketed list");
  }
  std::vector<std::uint64_t> modulus;
  std::string inner = list.substr(1, list.size() - 2);
  std::replace(inner.begin(), inner.end(), ',', ' ');
  std::istringstream coeffs(inner);
  std::string c;
  while (coeffs >> c) {
    if (!is_unsigned(c) || c.size() > 10) {
      throw Error(ErrorCode::kInvalidField, "bad modulus coefficient '" + c + "'");
    }
    modulus.push_back(std::stoull(c));
  }
  if (modulus.size() != static_cast<std::size_t>(k) + 1) {
    throw Error(ErrorCode::kInvalidField, "modulus needs k+1 coefficients");
  }
  return Field::extension(p, std::move(modulus));
}

Element parse_element(const Field& field, const std::string& token) {
  if (token.empty()) throw Error(ErrorCode::kParse, "empty entry");
  if (token.front() == '[') {
    if (field.kind() != FieldKind::kExtension || token.back() != ']') {
      throw Error(ErrorCode::kParse, "unexpected entry '" + token + "'");
    }
    std::string inner = token.substr(1, token.size() - 2);
    std::replace(inner.begin(), inner.end(), ',', ' ');
    std::istringstream in(inner);
    std::vector<std::uint64_t> coeffs;
    const mpz_class p(static_cast<unsigned long>(field.characteristic()));
    std::string c;
    while (in >> c) {
      if (!is_integer(c)) throw Error(ErrorCode::kParse, "bad coefficient '" + c + "'");
      mpz_class v = to_mpz(c) % p;
      if (v < 0) v += p;
      coeffs.push_back(v.get_ui());
    }
    if (coeffs.size() > static_cast<std::size_t>(field.degree())) {
      throw Error(ErrorCode::kParse, "too many coefficients in '" + token + "'");
    }
    return field.from_coefficients(coeffs);
  }
  const auto slash = token.find('/');
  const std::string num = token.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : token.substr(slash + 1);
  if (!is_integer(num) || !is_unsigned(den)) {
    throw Error(ErrorCode::kParse, "bad entry '" + token + "'");
  }
  mpz_class d(den, 10);
  if (d == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + token + "'");
  mpq_class value(to_mpz(num), d);
  value.canonicalize();
  try {
    return field.from_rational(value);
  } catch (const Error&) {
    throw Error(ErrorCode::kParse, "'" + token + "' is undefined in this field");
  }
}

MatrixFile parse_matrix(std::istream& in) {
  LineReader reader(in);
  const std::string header = reader.require("field header");
  Field f = parse_field_header(header);
  const auto size_tokens = tokenize(reader.require("matrix size"));
  const int size_line = reader.number();
  const std::size_t n = parse_count(size_tokens[0], size_line, "matrix size");
  MatrixFile out;
  std::vector<Label> labels;
  if (size_tokens.size() > 1) {
    if (size_tokens[1] != "labels" || size_tokens.size() != n + 2) {
      fail(size_line, "expected 'labels' followed by " + std::to_string(n) + " names");
    }
    std::vector<std::string> names(size_tokens.begin() + 2, size_tokens.end());
    if (std::set<std::string>(names.begin(), names.end()).size() != n) {
      fail(size_line, "duplicate label");
    }
    const bool numeric = std::all_of(names.begin(), names.end(), [](const std::string& s) {
      return is_integer(s) && s.size() < 10;
    });
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(numeric ? std::stoi(names[i]) : static_cast<Label>(i + 1));
    }
    if (!numeric) out.label_names = std::move(names);
  }
  std::vector<Element> entries;
  for (std::size_t r = 0; r < n; ++r) {
    auto tokens = tokenize(reader.require("matrix row"));
    auto row = parse_row(f, tokens, n, reader.number());
    entries.insert(entries.end(), row.begin(), row.end());
  }
  std::string extra;
  if (reader.next(extra)) fail(reader.number(), "unexpected trailing content");
  out.matrix = Matrix(f, n, n, std::move(entries), labels, labels);
  return out;
}

MatrixFile read_matrix_file(const std::string& path) {
  std::istringstream in(read_all(path));
  return parse_matrix(in);
}

std::string format_labels(const IndexSet& s, const std::vector<Label>& labels,
                          const std::vector<std::string>& names) {
  if (names.empty()) return format_set(s);
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    auto it = std::find(labels.begin(), labels.end(), s[i]);
    out += it == labels.end() ? std::to_string(s[i])
                              : names[static_cast<std::size_t>(it - labels.begin())];
  }
  return out + "}";
}

std::string format_matrix(const Matrix& m, const std::vector<std::string>& label_names) {
  std::ostringstream out;
  out << m.field().header() << "\n" << m.rows();
  bool default_labels = true;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    default_labels &= m.labels()[i] == static_cast<Label>(i + 1);
  }
  if (!label_names.empty()) {
    out << " labels";
    for (const auto& name : label_names) out << ' ' << name;
  } else if (!default_labels) {
    out << " labels";
    for (Label l : m.labels()) out << ' ' << l;
  }
  out << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out << (c ? " " : "") << m(r, c).to_string();
    }
    out << "\n";
  }
  return out.str();
}

RankOnePencil parse_pencil(std::istream& in) {
  LineReader reader(in);
  Field f = parse_field_header(reader.require("field header"));
  auto tokens = tokenize(reader.require("dimension"));
  const std::size_t n = parse_count(tokens[0], reader.number(), "dimension");
  std::size_t m = 0;
  if (tokens.size() == 2) {
    m = parse_count(tokens[1], reader.number(), "term count");
  } else if (tokens.size() == 1) {
    auto m_tokens = tokenize(reader.require("term count"));
    if (m_tokens.size() != 1) fail(reader.number(), "expected the term count");
    m = parse_count(m_tokens[0], reader.number(), "term count");
  } else {
    fail(reader.number(), "expected 'n' or 'n m'");
  }
  RankOnePencil p;
  p.field = f;
  p.n = n;
  std::vector<Element> entries;
  for (std::size_t r = 0; r < n; ++r) {
    auto row_tokens = tokenize(reader.require("A0 row"));
    auto row = parse_row(f, row_tokens, n, reader.number());
    entries.insert(entries.end(), row.begin(), row.end());
  }
  p.a0 = Matrix(f, n, n, std::move(entries));
  for (std::size_t j = 0; j < m; ++j) {
    auto t = tokenize(reader.require("term " + std::to_string(j + 1)));
    const int line = reader.number();
    if (t.size() == 1 && t[0] == "matrix:") {
      std::vector<Element> rows;
      for (std::size_t r = 0; r < n; ++r) {
        auto row_tokens = tokenize(reader.require("term row"));
        auto row = parse_row(f, row_tokens, n, reader.number());
        rows.insert(rows.end(), row.begin(), row.end());
      }
      try {
        auto [u, v] = rank_one_decompose(Matrix(f, n, n, std::move(rows)));
        p.terms.push_back({std::move(u), std::move(v)});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kRankTooHigh) throw;
        throw Error(ErrorCode::kRankTooHigh, "line " + std::to_string(line) + ": term " +
                                                 std::to_string(j + 1) + " has rank > 1");
      }
      continue;
    }
    if (t.size() != 2 * n + 2 || t[0] != "u:" || t[n + 1] != "v:") {
      fail(line, "expected 'u: <" + std::to_string(n) + " entries> v: <" +
                     std::to_string(n) + " entries>' or 'matrix:'");
    }
    RankOneTerm term;
    term.u = parse_row(f, {t.begin() + 1, t.begin() + static_cast<long>(n) + 1}, n, line);
    term.v = parse_row(f, {t.begin() + static_cast<long>(n) + 2, t.end()}, n, line);
    p.terms.push_back(std::move(term));
  }
  std::string extra;
  if (reader.next(extra)) fail(reader.number(), "unexpected trailing content");
  return p;
}

RankOnePencil read_pencil_file(const std::string& path) {
  std::istringstream in(read_all(path));
  return parse_pencil(in);
}

std::string format_pencil(const RankOnePencil& p) {
  std::ostringstream out;
  out << p.field.header() << "\n" << p.n << " " << p.m() << "\n";
  for (std::size_t r = 0; r < p.n; ++r) {
    for (std::size_t c = 0; c < p.n; ++c) out << (c ? " " : "") << p.a0(r, c).to_string();
    out << "\n";
  }
  for (const auto& term : p.terms) {
    out << "u:";
    for (const auto& e : term.u) out << ' ' << e.to_string();
    out << " v:";
    for (const auto& e : term.v) out << ' ' << e.to_string();
    out << "\n";
  }
  return out.str();
}

namespace {

Json elements_to_json(const std::vector<Element>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

std::vector<Element> elements_from_json(const Field& f, const Json& j) {
  std::vector<Element> out;
  for (const auto& x : j) out.push_back(parse_element(f, x.get<std::string>()));
  return out;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
  Json j;
  j["format"] = "pmeq-certificate";
  j["version"] = 1;
  j["field"] = cert.field.header();
  j["labels"] = cert.labels;
  j["blocks"] = Json::array();
  for (const auto& block : cert.blocks) {
    Json b;
    b["labels"] = block.labels;
    b["cut_sequence"] = Json::array();
    for (const auto& x : block.cut_sequence) b["cut_sequence"].push_back(x);
    b["witness"] = {{"labels", block.witness.labels},
                    {"d", elements_to_json(block.witness.d)},
                    {"transposed", block.witness.transposed}};
    j["blocks"].push_back(std::move(b));
  }
  if (cert.preprocessing_shift) {
    const auto& s = *cert.preprocessing_shift;
    j["preprocessing_shift"] = {{"field", s.field.header()},
                                {"labels", s.labels},
                                {"d", elements_to_json(s.d)}};
  } else {
    j["preprocessing_shift"] = nullptr;
  }
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  try {
    Json j = Json::parse(text);
    if (j.at("format") != "pmeq-certificate" || j.at("version") != 1) {
      throw Error(ErrorCode::kParse, "not a pmeq certificate");
    }
    Certificate cert;
    cert.field = parse_field_header(j.at("field").get<std::string>());
    cert.labels = j.at("labels").get<std::vector<Label>>();
    for (const auto& b : j.at("blocks")) {
      CertificateBlock block;
      block.labels = b.at("labels").get<IndexSet>();
      block.cut_sequence = b.at("cut_sequence").get<CutSequence>();
      const auto& w = b.at("witness");
      block.witness.labels = w.at("labels").get<std::vector<Label>>();
      block.witness.d = elements_from_json(cert.field, w.at("d"));
      block.witness.transposed = w.at("transposed").get<bool>();
      cert.blocks.push_back(std::move(block));
    }
    if (j.contains("preprocessing_shift") && !j["preprocessing_shift"].is_null()) {
      const auto& s = j["preprocessing_shift"];
      DiagonalShift shift;
      shift.field = parse_field_header(s.at("field").get<std::string>());
      shift.labels = s.at("labels").get<std::vector<Label>>();
      shift.d = elements_from_json(shift.field, s.at("d"));
      cert.preprocessing_shift = std::move(shift);
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("certificate: ") + e.what());
  }
}

Certificate read_certificate_file(const std::string& path) {
  return certificate_from_json(read_all(path));
}

}  // namespace pmeq

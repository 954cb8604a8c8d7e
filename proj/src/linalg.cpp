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

#include "pmeq/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace pmeq {

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool set_contains(const IndexSet& a, Label x) {
  return std::binary_search(a.begin(), a.end(), x);
}

std::string format_set(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

namespace {

std::vector<Label> default_labels(std::size_t n) {
  std::vector<Label> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Label>(i + 1);
  return out;
}

void check_distinct(const std::vector<Label>& labels) {
  std::vector<Label> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate labels");
  }
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, field.zero()),
      row_labels_(default_labels(rows)),
      col_labels_(default_labels(cols)) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols,
               std::vector<Element> entries, std::vector<Label> row_labels,
               std::vector<Label> col_labels)
    : field_(field),
      rows_(rows),
      cols_(cols),
      entries_(std::move(entries)),
      row_labels_(row_labels.empty() ? default_labels(rows)
                                     : std::move(row_labels)),
      col_labels_(col_labels.empty() ? default_labels(cols)
                                     : std::move(col_labels)) {
  if (entries_.size() != rows * cols || row_labels_.size() != rows ||
      col_labels_.size() != cols) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix shape");
  }
  for (const auto& e : entries_) {
    if (e.field() != field_) {
      throw Error(ErrorCode::kFieldMismatch, "matrix entry field");
    }
  }
  check_distinct(row_labels_);
  check_distinct(col_labels_);
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_ints(Field field, const std::vector<std::vector<long>>& rows,
                         std::vector<Label> labels) {
  const std::size_t n = rows.size();
  const std::size_t m = n ? rows[0].size() : 0;
  std::vector<Element> entries;
  entries.reserve(n * m);
  for (const auto& row : rows) {
    if (row.size() != m) throw Error(ErrorCode::kDimensionMismatch, "ragged rows");
    for (long v : row) entries.push_back(field.from_int(v));
  }
  std::vector<Label> col_labels = n == m ? labels : std::vector<Label>{};
  if (n != m) labels.clear();
  return Matrix(field, n, m, std::move(entries), std::move(labels),
                std::move(col_labels));
}

const Element& Matrix::at(Label row, Label col) const {
  return (*this)(row_position(row), col_position(col));
}

std::size_t Matrix::row_position(Label label) const {
  auto it = std::find(row_labels_.begin(), row_labels_.end(), label);
  if (it == row_labels_.end()) {
    throw Error(ErrorCode::kUnknownLabel, std::to_string(label));
  }
  return static_cast<std::size_t>(it - row_labels_.begin());
}

std::size_t Matrix::col_position(Label label) const {
  auto it = std::find(col_labels_.begin(), col_labels_.end(), label);
  if (it == col_labels_.end()) {
    throw Error(ErrorCode::kUnknownLabel, std::to_string(label));
  }
  return static_cast<std::size_t>(it - col_labels_.begin());
}

Matrix Matrix::transpose() const {
  std::vector<Element> out;
  out.reserve(entries_.size());
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  }
  return Matrix(field_, cols_, rows_, std::move(out), col_labels_, row_labels_);
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& row_pos,
                         const std::vector<std::size_t>& col_pos) const {
  std::vector<Element> out;
  out.reserve(row_pos.size() * col_pos.size());
  std::vector<Label> rl, cl;
  for (auto i : row_pos) rl.push_back(row_labels_.at(i));
  for (auto j : col_pos) cl.push_back(col_labels_.at(j));
  for (auto i : row_pos) {
    for (auto j : col_pos) out.push_back((*this)(i, j));
  }
  // Empty label lists would be replaced by defaults; only empty when size 0.
  return Matrix(field_, row_pos.size(), col_pos.size(), std::move(out),
                std::move(rl), std::move(cl));
}

Matrix Matrix::block(const IndexSet& rows, const IndexSet& cols) const {
  std::vector<std::size_t> rp, cp;
  for (Label l : rows) rp.push_back(row_position(l));
  for (Label l : cols) cp.push_back(col_position(l));
  return submatrix(rp, cp);
}

Matrix Matrix::relabeled(std::vector<Label> row_labels,
                         std::vector<Label> col_labels) const {
  return Matrix(field_, rows_, cols_, entries_, std::move(row_labels),
                std::move(col_labels));
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Element& e) { return e.is_zero(); });
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix sum");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) {
    out.entries_[i] += b.entries_[i];
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix difference");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) {
    out.entries_[i] -= b.entries_[i];
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix product");
  }
  if (a.field_ != b.field_) throw Error(ErrorCode::kFieldMismatch, "matrix product");
  Matrix out(a.field_, a.rows_, b.cols_);
  out.row_labels_ = a.row_labels_;
  out.col_labels_ = b.col_labels_;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Element& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.row_labels_ == b.row_labels_ && a.col_labels_ == b.col_labels_ &&
         a.entries_ == b.entries_;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ' ';
      out << (*this)(i, j).to_string();
    }
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

// In-place elimination on a row-major copy. Returns the rank and the
// determinant contribution (product of pivots with swap sign).
struct Elimination {
  std::size_t rank = 0;
  bool swapped_odd = false;
};

Elimination eliminate(std::vector<Element>& m, std::size_t rows,
                      std::size_t cols, Element* det) {
  Elimination out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv * cols + c].is_zero()) ++piv;
    if (piv == rows) {
      if (det) *det = det->field().zero();
      continue;
    }
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) {
        std::swap(m[piv * cols + j], m[r * cols + j]);
      }
      out.swapped_odd = !out.swapped_odd;
    }
    const Element inv = m[r * cols + c].inverse();
    if (det) *det *= m[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i * cols + c].is_zero()) continue;
      const Element f = m[i * cols + c] * inv;
      for (std::size_t j = c; j < cols; ++j) {
        if (!m[r * cols + j].is_zero()) m[i * cols + j] -= f * m[r * cols + j];
      }
    }
    ++r;
  }
  out.rank = r;
  return out;
}

}  // namespace

Element determinant(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::kNotSquare, "determinant");
  const std::size_t n = a.rows();
  std::vector<Element> m = a.entries();
  Element det = a.field().one();
  Elimination e = eliminate(m, n, n, &det);
  if (e.rank < n) return a.field().zero();
  return e.swapped_odd ? -det : det;
}

std::size_t rank(const Matrix& m) {
  std::vector<Element> copy = m.entries();
  return eliminate(copy, m.rows(), m.cols(), nullptr).rank;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::kNotSquare, "inverse");
  const std::size_t n = a.rows();
  const std::size_t w = 2 * n;
  std::vector<Element> m;
  m.reserve(n * w);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.push_back(a(i, j));
    for (std::size_t j = 0; j < n; ++j) {
      m.push_back(i == j ? a.field().one() : a.field().zero());
    }
  }
  // Gauss-Jordan.
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv * w + c].is_zero()) ++piv;
    if (piv == n) throw Error(ErrorCode::kDivisionByZero, "singular matrix");
    if (piv != c) {
      for (std::size_t j = 0; j < w; ++j) std::swap(m[piv * w + j], m[c * w + j]);
    }
    const Element inv = m[c * w + c].inverse();
    for (std::size_t j = 0; j < w; ++j) m[c * w + j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i * w + c].is_zero()) continue;
      const Element f = m[i * w + c];
      for (std::size_t j = 0; j < w; ++j) {
        if (!m[c * w + j].is_zero()) m[i * w + j] -= f * m[c * w + j];
      }
    }
  }
  std::vector<Element> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.push_back(m[i * w + n + j]);
  }
  // Rows of A^-1 are indexed by A's columns and vice versa.
  return Matrix(a.field(), n, n, std::move(out), a.col_labels(), a.row_labels());
}

Matrix adjugate(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::kNotSquare, "adjugate");
  const std::size_t n = a.rows();
  if (n == 1) return Matrix::identity(a.field(), 1).relabeled(a.labels(), a.labels());
  const Element det = determinant(a);
  if (!det.is_zero()) {
    Matrix inv = inverse(a);
    std::vector<Element> out = inv.entries();
    for (auto& e : out) e *= det;
    return Matrix(a.field(), n, n, std::move(out), a.col_labels(), a.row_labels());
  }
  Matrix out(a.field(), n, n);
  out = out.relabeled(a.col_labels(), a.row_labels());
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rows.clear();
      cols.clear();
      for (std::size_t r = 0; r < n; ++r) {
        if (r != j) rows.push_back(r);
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (c != i) cols.push_back(c);
      }
      Element minor = determinant(a.submatrix(rows, cols));
      out(i, j) = (i + j) % 2 ? -minor : minor;
    }
  }
  return out;
}

Matrix principal_submatrix(const Matrix& a, const IndexSet& s) {
  return a.block(s, s);
}

// ---------------------------------------------------------------------------

UnivariatePoly::UnivariatePoly(Field field, std::vector<Element> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.field() != field_) throw Error(ErrorCode::kFieldMismatch, "polynomial");
  }
  trim();
}

UnivariatePoly UnivariatePoly::variable(Field field) {
  return UnivariatePoly(field, {field.zero(), field.one()});
}

UnivariatePoly UnivariatePoly::constant(const Element& c) {
  return UnivariatePoly(c.field(), {c});
}

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Element UnivariatePoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : field_.zero();
}

Element UnivariatePoly::evaluate(const Element& x) const {
  Element acc = field_.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
  std::vector<Element> out(std::max(a.coeffs_.size(), b.coeffs_.size()),
                           a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return UnivariatePoly(a.field_, std::move(out));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) {
  std::vector<Element> out(std::max(a.coeffs_.size(), b.coeffs_.size()),
                           a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return UnivariatePoly(a.field_, std::move(out));
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (a.is_zero() || b.is_zero()) return UnivariatePoly(a.field_);
  std::vector<Element> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                           a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return UnivariatePoly(a.field_, std::move(out));
}

bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::string UnivariatePoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[i].to_string() + ")";
    if (i == 1) out += "*y";
    if (i > 1) out += "*y^" + std::to_string(i);
  }
  return out;
}

Matrix PolyMatrix::evaluate(const Element& y) const {
  std::vector<Element> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.evaluate(y));
  return Matrix(field, n, n, std::move(out));
}

UnivariatePoly poly_matrix_determinant(const PolyMatrix& m, int degree_bound) {
  if (degree_bound < 0) degree_bound = 0;
  const auto count = static_cast<std::size_t>(degree_bound) + 1;
  std::vector<Element> xs = enumerate_points(m.field, count);
  std::vector<std::pair<Element, Element>> samples;
  samples.reserve(count);
  for (auto& x : xs) {
    Element d = determinant(m.evaluate(x));
    samples.emplace_back(std::move(x), std::move(d));
  }
  return lagrange_interpolate(samples);
}

UnivariatePoly lagrange_interpolate(
    const std::vector<std::pair<Element, Element>>& points) {
  if (points.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no interpolation points");
  }
  const Field field = points[0].first.field();
  const std::size_t k = points.size();
  // master(y) = prod (y - x_j), low-to-high.
  std::vector<Element> master{field.one()};
  for (const auto& pt : points) {
    std::vector<Element> next(master.size() + 1, field.zero());
    for (std::size_t i = 0; i < master.size(); ++i) {
      next[i + 1] += master[i];
      next[i] -= master[i] * pt.first;
    }
    master = std::move(next);
  }
  std::vector<Element> result(k, field.zero());
  std::vector<Element> quotient(k, field.zero());
  for (std::size_t i = 0; i < k; ++i) {
    const Element& xi = points[i].first;
    Element denom = field.one();
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      Element diff = xi - points[j].first;
      if (diff.is_zero()) {
        throw Error(ErrorCode::kDuplicatePoint, xi.to_string());
      }
      denom *= diff;
    }
    if (points[i].second.is_zero()) continue;
    // master / (y - xi) by synthetic division.
    Element carry = field.zero();
    for (std::size_t d = k; d-- > 0;) {
      carry = master[d + 1] + carry * xi;
      quotient[d] = carry;
    }
    const Element w = points[i].second / denom;
    for (std::size_t d = 0; d < k; ++d) result[d] += w * quotient[d];
  }
  return UnivariatePoly(field, std::move(result));
}

}  // namespace pmeq

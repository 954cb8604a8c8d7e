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

// Dense exact matrices over a Field, with labelled rows and columns.

#ifndef PMEQ_LINALG_HPP_
#define PMEQ_LINALG_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "pmeq/field.hpp"

namespace pmeq {

// Row/column labels. Defaults to 1..n.
using Label = int;
// Sorted, duplicate-free set of labels.
using IndexSet = std::vector<Label>;

// Sorted union / difference / membership helpers for IndexSet.
IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_difference(const IndexSet& a, const IndexSet& b);
bool set_contains(const IndexSet& a, Label x);
std::string format_set(const IndexSet& s);

class Matrix {
 public:
  // Zero matrix with labels 1..rows and 1..cols.
  Matrix(Field field, std::size_t rows, std::size_t cols);
  // Row-major entries. Empty label vectors mean 1..n. Square matrices must
  // use the same labels for rows and columns.
  Matrix(Field field, std::size_t rows, std::size_t cols,
         std::vector<Element> entries, std::vector<Label> row_labels = {},
         std::vector<Label> col_labels = {});

  static Matrix identity(Field field, std::size_t n);
  // Convenience constructor from small integers (tests, examples).
  static Matrix from_ints(Field field,
                          const std::vector<std::vector<long>>& rows,
                          std::vector<Label> labels = {});

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<Label>& row_labels() const { return row_labels_; }
  const std::vector<Label>& col_labels() const { return col_labels_; }
  // Row labels, which for a square matrix are its index set.
  const std::vector<Label>& labels() const { return row_labels_; }

  const Element& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Element& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  // Entry addressed by labels; UnknownLabel when absent.
  const Element& at(Label row, Label col) const;

  // Position of a label among the rows; UnknownLabel when absent.
  std::size_t row_position(Label label) const;
  std::size_t col_position(Label label) const;

  Matrix transpose() const;
  // Submatrix by positions, labels carried along.
  Matrix submatrix(const std::vector<std::size_t>& row_pos,
                   const std::vector<std::size_t>& col_pos) const;
  // Submatrix by labels (rows S, columns T), in the given label order.
  Matrix block(const IndexSet& rows, const IndexSet& cols) const;
  // Same entries, new labels.
  Matrix relabeled(std::vector<Label> row_labels,
                   std::vector<Label> col_labels) const;

  bool is_zero() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  // Entries and labels equal.
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  const std::vector<Element>& entries() const { return entries_; }
  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
  std::vector<Label> row_labels_;
  std::vector<Label> col_labels_;
};

// Gaussian elimination, first nonzero pivot in column order. det of a 0x0
// matrix is 1. NotSquare for rectangular input.
Element determinant(const Matrix& a);
std::size_t rank(const Matrix& m);
// Inverse; DivisionByZero when singular.
Matrix inverse(const Matrix& a);
// adj(A)[i,j] = (-1)^(i+j) det(A minus row j and column i). For n = 1 the
// result is [1].
Matrix adjugate(const Matrix& a);
// A[S]; UnknownLabel when S is not a subset of A's labels.
Matrix principal_submatrix(const Matrix& a, const IndexSet& s);

class UnivariatePoly {
 public:
  explicit UnivariatePoly(Field field) : field_(field) {}
  UnivariatePoly(Field field, std::vector<Element> coeffs);

  // The polynomial y, and constant c.
  static UnivariatePoly variable(Field field);
  static UnivariatePoly constant(const Element& c);

  Field field() const { return field_; }
  // Low-to-high, trimmed: empty for the zero polynomial.
  const std::vector<Element>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Element coefficient(std::size_t i) const;
  Element evaluate(const Element& x) const;

  friend UnivariatePoly operator+(const UnivariatePoly& a,
                                  const UnivariatePoly& b);
  friend UnivariatePoly operator-(const UnivariatePoly& a,
                                  const UnivariatePoly& b);
  friend UnivariatePoly operator*(const UnivariatePoly& a,
                                  const UnivariatePoly& b);
  friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b);

  std::string to_string() const;

 private:
  void trim();
  Field field_;
  std::vector<Element> coeffs_;
};

// Square matrix of polynomials, row-major.
struct PolyMatrix {
  Field field;
  std::size_t n = 0;
  std::vector<UnivariatePoly> entries;

  const UnivariatePoly& operator()(std::size_t i, std::size_t j) const {
    return entries[i * n + j];
  }
  Matrix evaluate(const Element& y) const;
};

// det(M) by evaluation at degree_bound + 1 enumerated points and Lagrange
// interpolation. FieldTooSmall when the field lacks that many points.
UnivariatePoly poly_matrix_determinant(const PolyMatrix& m, int degree_bound);

// Unique polynomial of degree < points.size() through the points.
// DuplicatePoint when two x-coordinates coincide.
UnivariatePoly lagrange_interpolate(
    const std::vector<std::pair<Element, Element>>& points);

}  // namespace pmeq

#endif  // PMEQ_LINALG_HPP_

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

// Identity testing for det(A0 + sum_j y_j u_j v_j^T) by reduction to
// principal minor equivalence.

#ifndef PMEQ_PIT_HPP_
#define PMEQ_PIT_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "pmeq/linalg.hpp"

namespace pmeq {

using Vector = std::vector<Element>;

struct RankOneTerm {
  Vector u;
  Vector v;
};

// det(A0 + y_1 u_1 v_1^T + ... + y_m u_m v_m^T) over one field.
struct RankOnePencil {
  Field field = Field::rationals();
  std::size_t n = 0;
  Matrix a0{Field::rationals(), 0, 0};
  std::vector<RankOneTerm> terms;

  std::size_t m() const { return terms.size(); }

  // DimensionMismatch or FieldMismatch when the parts disagree.
  void validate() const;
  // A0 + sum y_j u_j v_j^T at the given point.
  Matrix evaluate(const std::vector<Element>& y) const;
  // n x m matrices whose j-th columns are u_j and v_j.
  Matrix u_matrix() const;
  Matrix v_matrix() const;

  // Splits each term with rank_one_decompose; RankTooHigh names the term
  // index (1-based).
  static RankOnePencil from_matrices(const Matrix& a0, const std::vector<Matrix>& terms);
};

// A = u v^T with u the first nonzero column of A; zero vectors for A = 0.
// RankTooHigh if rank(A) > 1.
std::pair<Vector, Vector> rank_one_decompose(const Matrix& a);

// The columns of `representation` over the field; labels are 1..cols.
class LinearMatroid {
 public:
  explicit LinearMatroid(Matrix representation);

  std::size_t ground_size() const { return rep_.cols(); }
  std::size_t rank() const;
  bool is_independent(const IndexSet& elements) const;

 private:
  Matrix rep_;
};

// T (1-based, sorted) with |T| = n and both U[:, T] and V[:, T] nonsingular,
// found by shortest augmenting paths in the exchange graph. nullopt if no
// common base exists. DimensionMismatch unless U, V are both n x m.
std::optional<IndexSet> matroid_intersection_common_base(const Matrix& u,
                                                         const Matrix& v);

// The pair of m x m matrices [[0, V1^T], [-U1, 0]] and [[0, V2^T], [-U2, 0]]
// built from the hat blocks of two homogeneous pencils, as produced inside
// pit_homogeneous. Exposed for inspection; nullopt when the comparison is
// settled without a PME instance.
struct PitReduction {
  bool decided = false;  // true: `equal` is final, no matrices
  bool equal = false;
  std::optional<Matrix> a;
  std::optional<Matrix> b;
};
PitReduction reduce_homogeneous(const Matrix& u1, const Matrix& v1, const Matrix& u2,
                                const Matrix& v2);

// Both pencils must have A0 = 0 (InvalidArgument otherwise).
bool pit_homogeneous(const RankOnePencil& p1, const RankOnePencil& p2);

// Any A0. Expands det(C_i) along its first m rows, with
//   C_i = [[I_m, Y, 0], [0, I_m, V_i^T], [U_i, 0, A0_i]],
// so the coefficient of y_T is +-det(W_i[:, phi(T)]) for the
// (m+n) x (2m+n) matrix W_i = [[0, I_m, V_i^T], [U_i, 0, A0_i]]. With the
// fixed F = [[I_m, I_m, 0], [0, 0, I_n]], det(F[:, T']) is +-1 exactly on
// the image of phi and 0 elsewhere, so the comparison is the homogeneous one
// on (W_1, F) versus (W_2, F) and yields two (2m+n) x (2m+n) PME matrices.
bool pit_general(const RankOnePencil& p1, const RankOnePencil& p2);

// pit_homogeneous when both A0 vanish, else pit_general.
bool pit_check(const RankOnePencil& p1, const RankOnePencil& p2);

// The two (m+n) x (2m+n) matrices (W, F) used by pit_general.
std::pair<Matrix, Matrix> general_to_homogeneous(const RankOnePencil& p);

// Evaluates both determinants on {0,1}^m; both polynomials are multilinear
// so this decides equality. TooLarge for m > 12.
bool brute_force_pit(const RankOnePencil& p1, const RankOnePencil& p2);

}  // namespace pmeq

#endif  // PMEQ_PIT_HPP_

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

// Cuts of square matrices and the cut-transpose operation.
//
// X is a cut of A when 2 <= |X| <= n-2 and both A[X, X^c] and A[X^c, X]
// have rank at most one. For such X, write A[X, X^c] = p q^T and
// A[X^c, X] = u v^T where q is the first nonzero row and u the first nonzero
// column; the cut-transpose tw(A, X) is
//
//   [ A[X]     p u^T    ]
//   [ q v^T    A[X^c]^T ]
//
// which has the same principal minors as A and satisfies tw(tw(A,X),X) = A.

#ifndef PMEQ_CUTS_HPP_
#define PMEQ_CUTS_HPP_

#include <optional>
#include <vector>

#include "pmeq/linalg.hpp"

namespace pmeq {

using CutSequence = std::vector<IndexSet>;

// Complement of X within A's labels (sorted).
IndexSet complement(const Matrix& a, const IndexSet& x);

// False for n < 4 or |X| outside [2, n-2]. UnknownLabel for foreign labels.
bool is_cut(const Matrix& a, const IndexSet& x);

struct RankOneFactors {
  std::vector<Element> p;  // indexed by X (sorted)
  std::vector<Element> q;  // indexed by X^c
  std::vector<Element> u;  // indexed by X^c
  std::vector<Element> v;  // indexed by X
};

// NotACut when X is not a cut; ZeroBlock when an off-diagonal block is zero.
RankOneFactors rank_one_factors(const Matrix& a, const IndexSet& x);

// NotACut, ZeroBlock as above. Labels are preserved.
Matrix cut_transpose(const Matrix& a, const IndexSet& x);

// rank(A[X, X^c]) + rank(A[X^c, X]).
int cut_function_g(const Matrix& a, const IndexSet& x);

enum class CutBackend {
  kAuto,          // exhaustive for n <= 22, minimum-norm-point above
  kExhaustive,
  kMinNormPoint,
};

inline constexpr std::size_t kExhaustiveCutLimit = 22;

// A minimum-size (hence inclusion-minimal) cut, or nullopt when A has none.
// Quadruples T = ({t1,t2},{t3,t4}) with t1<t2, t3<t4 are scanned in
// lexicographic order; the result is the minimizer of
// g'_T(X) = (n+1) g(X + {t1,t2}) + |X| over X avoiding T for the first T
// attaining the global minimum. Both backends return the same cut.
// NotIrreducible for reducible A; InvalidArgument for n < 4.
std::optional<IndexSet> minimal_cut(const Matrix& a,
                                    CutBackend backend = CutBackend::kAuto);

// First cut in (size, lexicographic) order using plain rank computations.
// TooLarge for n > 22.
std::optional<IndexSet> brute_force_min_cut(const Matrix& a);

// Every cut of A in (size, lexicographic) order. TooLarge for n > 22.
std::vector<IndexSet> all_cuts(const Matrix& a);

}  // namespace pmeq

#endif  // PMEQ_CUTS_HPP_

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

// Reducibility (strongly connected components of the support digraph) and
// diagonal similarity / equivalence with explicit witnesses.

#ifndef PMEQ_STRUCTURE_HPP_
#define PMEQ_STRUCTURE_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "pmeq/linalg.hpp"

namespace pmeq {

// SCC vertex sets in a topological order of the condensation: for blocks
// i < j, A[T_j, T_i] = 0. Each block is sorted.
struct BlockDecomposition {
  std::vector<IndexSet> blocks;
};

BlockDecomposition irreducible_blocks(const Matrix& a);

// True when the block structure has a single block (n >= 1).
bool is_irreducible(const Matrix& a);

struct BlockPairing {
  bool compatible = false;
  // Common blocks in A's order (when compatible).
  std::vector<IndexSet> blocks;
};

// Compares the SCC partitions of A and B as set families.
BlockPairing partition_compatible(const Matrix& a, const Matrix& b);

// B = D A D^-1, or B = D A^T D^-1 when `transposed`.
struct DiagonalWitness {
  std::vector<Label> labels;
  std::vector<Element> d;
  bool transposed = false;
};

// D A D^-1 (or D A^T D^-1); labels of A and the witness must agree.
Matrix apply_witness(const Matrix& a, const DiagonalWitness& w);

// Invertible diagonal D with B = D A D^-1, or nullopt. Each connected
// component of the support graph is anchored at its smallest label (D = 1)
// and propagated along a BFS tree. LabelMismatch when labels differ.
std::optional<DiagonalWitness> diag_similar(const Matrix& a, const Matrix& b);

// diag_similar(A, B), then diag_similar against B^T.
std::optional<DiagonalWitness> diag_equivalent(const Matrix& a,
                                               const Matrix& b);

}  // namespace pmeq

#endif  // PMEQ_STRUCTURE_HPP_

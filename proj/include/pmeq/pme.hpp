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

// Principal minor equivalence: preprocessing shifts, the cut-sequence search,
// the top-level decision procedure, certificates and brute-force oracles.

#ifndef PMEQ_PME_HPP_
#define PMEQ_PME_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pmeq/cuts.hpp"
#include "pmeq/linalg.hpp"
#include "pmeq/structure.hpp"

namespace pmeq {

// A diagonal matrix as a map label -> entry.
struct DiagonalShift {
  Field field = Field::rationals();
  std::vector<Label> labels;
  std::vector<Element> d;
};

// Constant shift a*I with det(A + aI) != 0, a the first such enumerated
// point. FieldTooSmall when fewer than n+1 points exist.
DiagonalShift nonsingular_shift(const Matrix& a);

// Shift D with adj(A + D)[i, j] != 0: zero on a shortest path i -> j in the
// support digraph (excluding i) and a common value y elsewhere, y the first
// enumerated point that works. NotIrreducible when no path exists.
DiagonalShift adjugate_entry_shift(const Matrix& a, Label i, Label j);

struct ShiftOptions {
  // Try a few pseudo-random candidate points before the deterministic scan.
  bool randomized = false;
  std::uint64_t seed = 0x5eed;
};

struct ShiftResult {
  DiagonalShift shift;
  Matrix a_adj;  // adj(A + D)
  Matrix b_adj;  // adj(B + D)
  std::size_t candidate_index = 0;  // index of the accepted point
};

// Diagonal D such that A + D and B + D are nonsingular and every entry of
// both adjugates is nonzero. The 2n^2+2 single-purpose shifts are combined by
// interpolation through the first 2n^2+2 enumerated points and the first
// working point among the first d+1 is taken, d = (2n^3+n)(2n^2+2).
// FieldTooSmall when the field has fewer than d+1 elements.
ShiftResult combine_shifts(const Matrix& a, const Matrix& b,
                           const ShiftOptions& options = {});

// Minimal cut of size two. A and B have nonzero off-diagonal entries, S
// (size 2) is a cut of A but not of B. Returns X with tw(B, X) having S as a
// cut, or nullopt.
std::optional<IndexSet> min_cut_size_two(const Matrix& a, const Matrix& b,
                                         const IndexSet& s);

struct SequenceSearch {
  bool found = false;
  CutSequence sequence;
  std::optional<DiagonalWitness> witness;  // apply(A, sequence) ~ B
  std::string reason;                      // set when !found
};

// Cut-sequence search on matrices whose off-diagonal entries are all nonzero
// (InvalidArgument otherwise).
SequenceSearch finding_cut_sequence(const Matrix& a, const Matrix& b);

struct CertificateBlock {
  IndexSet labels;
  CutSequence cut_sequence;
  DiagonalWitness witness;
};

struct Certificate {
  Field field = Field::rationals();
  std::vector<Label> labels;
  std::vector<CertificateBlock> blocks;
  // The D used for preprocessing, possibly over an extension field; for audit
  // only, the verifier ignores it.
  std::optional<DiagonalShift> preprocessing_shift;
};

struct Verdict {
  bool equivalent = false;
  std::optional<Certificate> certificate;
  std::optional<IndexSet> refuting_subset;
  std::string reason;
};

struct PmeOptions {
  bool randomized_shift = false;
};

// Decides whether A and B have equal corresponding principal minors.
// NotSquare, LabelMismatch, FieldMismatch on malformed input.
Verdict pme_check(const Matrix& a, const Matrix& b, const PmeOptions& options = {});

// Replays a certificate against A and B. Never throws; `why` receives the
// first failed check.
bool verify_certificate(const Matrix& a, const Matrix& b, const Certificate& cert,
                        std::string* why = nullptr);

// Left-to-right cut-transposes. NotACut naming the failing index.
Matrix apply_cut_sequence(const Matrix& a, const CutSequence& seq);

struct OracleResult {
  bool equal = false;
  std::optional<IndexSet> refuting_subset;
};

// Compares all 2^n principal minors in (size, lexicographic) order.
// TooLarge for n > 14.
OracleResult brute_force_pme(const Matrix& a, const Matrix& b);

// Compares, for every subset S, the total weight of directed Hamiltonian
// cycles of the support digraph on S. TooLarge for n > 8.
bool cycle_weight_oracle(const Matrix& a, const Matrix& b);

}  // namespace pmeq

#endif  // PMEQ_PME_HPP_

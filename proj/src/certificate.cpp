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

// Independent replay of a certificate.

#include <algorithm>

#include "pmeq/pme.hpp"

namespace pmeq {

namespace {

bool fail(std::string* why, const std::string& message) {
  if (why) *why = message;
  return false;
}

std::vector<IndexSet> normalized(std::vector<IndexSet> family) {
  for (auto& s : family) std::sort(s.begin(), s.end());
  std::sort(family.begin(), family.end());
  return family;
}

}  // namespace

bool verify_certificate(const Matrix& a, const Matrix& b, const Certificate& cert,
                        std::string* why) {
  try {
    if (!a.is_square() || !b.is_square()) return fail(why, "matrices must be square");
    if (a.labels() != b.labels()) return fail(why, "matrices have different labels");
    if (a.field() != b.field() || cert.field != a.field()) {
      return fail(why, "field does not match the matrices");
    }
    if (!cert.labels.empty() && cert.labels != a.labels()) {
      return fail(why, "certificate labels do not match the matrices");
    }

    std::vector<IndexSet> claimed;
    for (const auto& block : cert.blocks) claimed.push_back(block.labels);
    const auto family = normalized(claimed);
    if (family != normalized(irreducible_blocks(a).blocks)) {
      return fail(why, "blocks are not the components of A");
    }
    if (family != normalized(irreducible_blocks(b).blocks)) {
      return fail(why, "blocks are not the components of B");
    }

    for (std::size_t k = 0; k < cert.blocks.size(); ++k) {
      const auto& block = cert.blocks[k];
      const std::string where = "block " + format_set(block.labels) + ": ";
      if (!std::is_sorted(block.labels.begin(), block.labels.end())) {
        return fail(why, where + "labels are not sorted");
      }
      if (block.cut_sequence.size() >= 2 * block.labels.size()) {
        return fail(why, where + "sequence has " +
                             std::to_string(block.cut_sequence.size()) +
                             " entries, at least twice the block size");
      }
      Matrix m = principal_submatrix(a, block.labels);
      for (std::size_t i = 0; i < block.cut_sequence.size(); ++i) {
        const IndexSet& x = block.cut_sequence[i];
        bool in_block = std::is_sorted(x.begin(), x.end()) &&
                        std::adjacent_find(x.begin(), x.end()) == x.end() &&
                        std::includes(block.labels.begin(), block.labels.end(),
                                      x.begin(), x.end());
        if (!in_block || !is_cut(m, x)) {
          return fail(why, where + "entry " + std::to_string(i) + " " +
                               format_set(x) + " is not a cut");
        }
        m = cut_transpose(m, x);
      }
      const DiagonalWitness& w = block.witness;
      if (w.labels != m.labels() || w.d.size() != w.labels.size()) {
        return fail(why, where + "witness labels do not match");
      }
      for (const auto& e : w.d) {
        if (e.field() != a.field() || e.is_zero()) {
          return fail(why, where + "witness is not an invertible diagonal");
        }
      }
      if (apply_witness(m, w) != principal_submatrix(b, block.labels)) {
        return fail(why, where + "final matrix is not related to B by the witness");
      }
    }
  } catch (const std::exception& e) {
    return fail(why, e.what());
  }
  if (why) why->clear();
  return true;
}

}  // namespace pmeq

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

#include "pmeq/pme.hpp"

#include <algorithm>
#include <stdexcept>

namespace pmeq {

namespace {

void require_nonzero_off_diagonal(const Matrix& m, const char* what) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j && m(i, j).is_zero()) {
        throw Error(ErrorCode::kInvalidArgument,
                    std::string(what) + " has a zero off-diagonal entry");
      }
    }
  }
}

IndexSet sorted(std::vector<Label> v) {
  std::sort(v.begin(), v.end());
  return v;
}

struct Search {
  bool found = false;
  CutSequence sequence;
  std::string reason;
};

Search no(std::string reason) { return Search{false, {}, std::move(reason)}; }

Search find_sequence(const Matrix& a, const Matrix& b) {
  const IndexSet labels = sorted(a.labels());
  std::optional<IndexSet> s;
  if (labels.size() >= 4) s = minimal_cut(a);
  if (!s) {
    if (diag_equivalent(a, b)) return Search{true, {}, {}};
    return no("no cut in " + format_set(labels) +
              " and the matrices are not diagonally equivalent");
  }

  Matrix b_tilde = b;
  std::optional<IndexSet> x;
  if (!is_cut(b, *s)) {
    if (s->size() >= 3) {
      return no("minimal cut " + format_set(*s) + " of A is not a cut of B");
    }
    x = min_cut_size_two(a, b, *s);
    if (!x) {
      return no("no cut-transpose of B makes " + format_set(*s) + " a cut");
    }
    b_tilde = cut_transpose(b, *x);
  }

  const Label pivot = s->front();
  const IndexSet s_bar = set_difference(labels, *s);
  const IndexSet sub = set_union(s_bar, {pivot});
  Search inner = find_sequence(principal_submatrix(a, sub),
                               principal_submatrix(b_tilde, sub));
  if (!inner.found) return inner;

  Matrix running = a;
  CutSequence lifted;
  for (const IndexSet& xi : inner.sequence) {
    IndexSet big = set_contains(xi, pivot) ? set_union(xi, *s) : xi;
    if (!is_cut(running, big)) {
      return no("lifted set " + format_set(big) + " is not a cut");
    }
    running = cut_transpose(running, big);
    lifted.push_back(std::move(big));
  }

  if (diag_equivalent(running, b_tilde)) {
    // sequence as lifted
  } else if (is_cut(running, s_bar) &&
             diag_equivalent(cut_transpose(running, s_bar), b_tilde)) {
    lifted.push_back(s_bar);
  } else {
    return no("lifted sequence does not reach B on " + format_set(labels));
  }
  if (x) lifted.push_back(*x);
  return Search{true, std::move(lifted), {}};
}

// First subset of `labels` in (size, lexicographic) order with differing
// principal minors; sizes 1..|labels|.
std::optional<IndexSet> first_refuting_subset(const Matrix& a, const Matrix& b,
                                              const IndexSet& labels) {
  const std::size_t n = labels.size();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      IndexSet s;
      for (auto i : idx) s.push_back(labels[i]);
      if (determinant(principal_submatrix(a, s)) !=
          determinant(principal_submatrix(b, s))) {
        return s;
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

Matrix embed(const Matrix& m, const FieldEmbedding& phi) {
  std::vector<Element> out;
  out.reserve(m.entries().size());
  for (const auto& e : m.entries()) out.push_back(phi(e));
  return Matrix(phi.target(), m.rows(), m.cols(), std::move(out), m.row_labels(),
                m.col_labels());
}

}  // namespace

std::optional<IndexSet> min_cut_size_two(const Matrix& a, const Matrix& b,
                                         const IndexSet& s) {
  if (s.size() != 2) throw Error(ErrorCode::kInvalidArgument, "|S| must be 2");
  const IndexSet labels = sorted(a.labels());
  IndexSet p;
  for (Label t : set_difference(labels, s)) {
    const IndexSet st = set_union(s, {t});
    const Matrix as = principal_submatrix(a, st);
    const Matrix bs = principal_submatrix(b, st);
    if (diag_similar(as, bs)) {
      p.push_back(t);
    } else if (!diag_similar(as, bs.transpose())) {
      return std::nullopt;
    }
  }
  IndexSet x = set_union(p, {s.front()});
  if (!is_cut(b, x)) return std::nullopt;
  return x;
}

SequenceSearch finding_cut_sequence(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square()) {
    throw Error(ErrorCode::kNotSquare, "finding_cut_sequence");
  }
  if (a.labels() != b.labels()) {
    throw Error(ErrorCode::kLabelMismatch, "finding_cut_sequence");
  }
  require_nonzero_off_diagonal(a, "A");
  require_nonzero_off_diagonal(b, "B");
  Search s = find_sequence(a, b);
  SequenceSearch out;
  if (!s.found) {
    out.reason = s.reason;
    return out;
  }
  out.witness = diag_equivalent(apply_cut_sequence(a, s.sequence), b);
  if (!out.witness) {
    throw std::logic_error("cut sequence does not relate the matrices");
  }
  out.found = true;
  out.sequence = std::move(s.sequence);
  return out;
}

Matrix apply_cut_sequence(const Matrix& a, const CutSequence& seq) {
  Matrix m = a;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!is_cut(m, seq[i])) {
      throw Error(ErrorCode::kNotACut, "entry " + std::to_string(i) + " " +
                                           format_set(seq[i]) + " is not a cut");
    }
    m = cut_transpose(m, seq[i]);
  }
  return m;
}

Verdict pme_check(const Matrix& a, const Matrix& b, const PmeOptions& options) {
  if (!a.is_square() || !b.is_square()) throw Error(ErrorCode::kNotSquare, "pme_check");
  if (a.labels() != b.labels()) throw Error(ErrorCode::kLabelMismatch, "pme_check");
  if (a.field() != b.field()) throw Error(ErrorCode::kFieldMismatch, "pme_check");

  Verdict v;
  const IndexSet labels = sorted(a.labels());
  for (Label l : labels) {
    if (a.at(l, l) != b.at(l, l)) {
      v.refuting_subset = IndexSet{l};
      v.reason = "diagonal entries differ at " + std::to_string(l);
      return v;
    }
  }
  BlockPairing pairing = partition_compatible(a, b);
  if (!pairing.compatible) {
    v.reason = "strongly connected components differ";
    return v;
  }

  std::size_t largest = 0;
  for (const auto& t : pairing.blocks) largest = std::max(largest, t.size());
  Field work = a.field();
  if (largest >= 4) {
    mpz_class n(static_cast<unsigned long>(largest));
    mpz_class threshold = 10 * n * n * n * n * n;
    work = enlarge_field(a.field(), threshold);
  }
  const FieldEmbedding phi(a.field(), work);

  Certificate cert;
  cert.field = a.field();
  cert.labels = a.labels();
  DiagonalShift audit;
  audit.field = work;

  for (const IndexSet& t : pairing.blocks) {
    const Matrix at = principal_submatrix(a, t);
    const Matrix bt = principal_submatrix(b, t);
    CertificateBlock block;
    block.labels = t;
    if (t.size() <= 3) {
      // Size 1 is settled by the diagonal check; 2 and 3 by diagonal
      // equivalence.
      auto w = diag_equivalent(at, bt);
      if (!w) {
        v.refuting_subset = first_refuting_subset(a, b, t);
        v.reason = "block " + format_set(t) + " is not diagonally equivalent";
        return v;
      }
      block.witness = *w;
      cert.blocks.push_back(std::move(block));
      continue;
    }
    ShiftOptions shift_options;
    shift_options.randomized = options.randomized_shift;
    ShiftResult shift = combine_shifts(embed(at, phi), embed(bt, phi), shift_options);
    for (std::size_t i = 0; i < t.size(); ++i) {
      audit.labels.push_back(shift.shift.labels[i]);
      audit.d.push_back(shift.shift.d[i]);
    }
    SequenceSearch found = finding_cut_sequence(shift.a_adj, shift.b_adj);
    if (!found.found) {
      v.reason = "block " + format_set(t) + ": " + found.reason;
      return v;
    }
    // The sequence transfers verbatim to the original block.
    auto w = diag_equivalent(apply_cut_sequence(at, found.sequence), bt);
    if (!w) throw std::logic_error("cut sequence does not transfer to the input");
    block.cut_sequence = std::move(found.sequence);
    block.witness = *w;
    cert.blocks.push_back(std::move(block));
  }
  if (!audit.labels.empty()) cert.preprocessing_shift = std::move(audit);
  v.equivalent = true;
  v.certificate = std::move(cert);
  v.reason = "equivalent";
  return v;
}

OracleResult brute_force_pme(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square()) throw Error(ErrorCode::kNotSquare, "brute_force_pme");
  if (a.labels() != b.labels()) throw Error(ErrorCode::kLabelMismatch, "brute_force_pme");
  if (a.field() != b.field()) throw Error(ErrorCode::kFieldMismatch, "brute_force_pme");
  if (a.rows() > 14) throw Error(ErrorCode::kTooLarge, "brute_force_pme needs n <= 14");
  OracleResult r;
  r.refuting_subset = first_refuting_subset(a, b, sorted(a.labels()));
  r.equal = !r.refuting_subset;
  return r;
}

namespace {

// Sum over directed Hamiltonian cycles on the given positions.
Element hamiltonian_cycle_weight(const Matrix& m, const std::vector<std::size_t>& s) {
  const Field f = m.field();
  if (s.size() == 1) return m(s[0], s[0]);
  Element total = f.zero();
  std::vector<std::size_t> rest(s.begin() + 1, s.end());
  do {
    Element w = m(s[0], rest[0]);
    for (std::size_t k = 0; k + 1 < rest.size() && !w.is_zero(); ++k) {
      w *= m(rest[k], rest[k + 1]);
    }
    if (!w.is_zero()) w *= m(rest.back(), s[0]);
    total += w;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return total;
}

}  // namespace

bool cycle_weight_oracle(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square()) throw Error(ErrorCode::kNotSquare, "cycle_weight_oracle");
  if (a.labels() != b.labels()) throw Error(ErrorCode::kLabelMismatch, "cycle_weight_oracle");
  const std::size_t n = a.rows();
  if (n > 8) throw Error(ErrorCode::kTooLarge, "cycle_weight_oracle needs n <= 8");
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    if (hamiltonian_cycle_weight(a, s) != hamiltonian_cycle_weight(b, s)) return false;
  }
  return true;
}

}  // namespace pmeq

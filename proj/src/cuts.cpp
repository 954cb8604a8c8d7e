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

#include "pmeq/cuts.hpp"

#include <algorithm>
#include <map>

#include "pmeq/min_norm_point.hpp"
#include "pmeq/structure.hpp"

namespace pmeq {

namespace {

void check_set(const Matrix& a, const IndexSet& x) {
  if (!std::is_sorted(x.begin(), x.end()) ||
      std::adjacent_find(x.begin(), x.end()) != x.end()) {
    throw Error(ErrorCode::kInvalidArgument, "index set must be sorted and distinct");
  }
  for (Label l : x) a.row_position(l);
}

std::vector<std::size_t> positions(const Matrix& a, const IndexSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.size());
  for (Label l : s) out.push_back(a.row_position(l));
  return out;
}

// rank(A[rows, cols]) <= 1 via 2x2 minors against the first nonzero entry.
bool rank_at_most_one(const Matrix& a, const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols) {
  std::size_t r0 = 0, c0 = 0;
  bool found = false;
  for (std::size_t r : rows) {
    for (std::size_t c : cols) {
      if (!a(r, c).is_zero()) {
        r0 = r;
        c0 = c;
        found = true;
        break;
      }
    }
    if (found) break;
  }
  if (!found) return true;
  const Element& pivot = a(r0, c0);
  for (std::size_t r : rows) {
    if (r == r0) continue;
    const Element& rc0 = a(r, c0);
    for (std::size_t c : cols) {
      if (c == c0) continue;
      if (a(r, c) * pivot != rc0 * a(r0, c)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> complement_positions(std::size_t n,
                                              const std::vector<std::size_t>& s) {
  std::vector<bool> in(n, false);
  for (auto i : s) in[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in[i]) out.push_back(i);
  }
  return out;
}

bool is_cut_positions(const Matrix& a, const std::vector<std::size_t>& x) {
  const std::size_t n = a.rows();
  if (n < 4 || x.size() < 2 || x.size() + 2 > n) return false;
  auto xc = complement_positions(n, x);
  return rank_at_most_one(a, x, xc) && rank_at_most_one(a, xc, x);
}

std::vector<Label> sorted_labels(const Matrix& a) {
  std::vector<Label> l = a.labels();
  std::sort(l.begin(), l.end());
  return l;
}

// Calls visit(subset) for each k-subset of `items` in lexicographic order
// until it returns true.
template <typename Visit>
bool for_each_subset(const std::vector<Label>& items, std::size_t k, Visit visit) {
  const std::size_t n = items.size();
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  IndexSet subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = items[idx[i]];
    if (visit(subset)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct Quadruple {
  Label t1, t2, t3, t4;
};

// Quadruples in lexicographic order of (t1, t2, t3, t4); t1<t2, t3<t4.
std::vector<Quadruple> quadruples(const std::vector<Label>& labels) {
  std::vector<Quadruple> out;
  const std::size_t n = labels.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        for (std::size_t d = c + 1; d < n; ++d) {
          if (d == a || d == b) continue;
          out.push_back({labels[a], labels[b], labels[c], labels[d]});
        }
      }
  return out;
}

std::optional<IndexSet> minimal_cut_exhaustive(const Matrix& a) {
  const std::vector<Label> labels = sorted_labels(a);
  const std::size_t n = labels.size();
  // All cuts of the minimum size. Minimum cuts have size <= n/2 since the
  // complement of a cut is a cut.
  std::vector<IndexSet> minimum;
  for (std::size_t k = 2; k <= n / 2 && minimum.empty(); ++k) {
    for_each_subset(labels, k, [&](const IndexSet& x) {
      if (is_cut_positions(a, positions(a, x))) minimum.push_back(x);
      return false;
    });
  }
  if (minimum.empty()) return std::nullopt;
  // The first quadruple whose g'_T minimum equals the global one has a
  // minimum cut containing t1, t2 and avoiding t3, t4, and it is unique.
  for (const auto& t : quadruples(labels)) {
    for (const auto& x : minimum) {
      if (set_contains(x, t.t1) && set_contains(x, t.t2) &&
          !set_contains(x, t.t3) && !set_contains(x, t.t4)) {
        return x;
      }
    }
  }
  return std::nullopt;  // unreachable: every minimum cut has a quadruple
}

std::optional<IndexSet> minimal_cut_mnp(const Matrix& a) {
  const std::vector<Label> labels = sorted_labels(a);
  const std::size_t n = labels.size();
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[i] = a.row_position(labels[i]);

  std::map<std::vector<bool>, int> memo;
  auto g = [&](const std::vector<bool>& in) {
    auto it = memo.find(in);
    if (it != memo.end()) return it->second;
    std::vector<std::size_t> x, xc;
    for (std::size_t i = 0; i < n; ++i) (in[i] ? x : xc).push_back(pos[i]);
    const int value = static_cast<int>(rank(a.submatrix(x, xc)) +
                                       rank(a.submatrix(xc, x)));
    memo.emplace(in, value);
    return value;
  };

  std::optional<IndexSet> best;
  long best_value = 0;
  std::map<Label, std::size_t> index_of;
  for (std::size_t i = 0; i < n; ++i) index_of[labels[i]] = i;

  for (const auto& t : quadruples(labels)) {
    std::vector<std::size_t> ground;  // indices into `labels`
    for (std::size_t i = 0; i < n; ++i) {
      const Label l = labels[i];
      if (l != t.t1 && l != t.t2 && l != t.t3 && l != t.t4) ground.push_back(i);
    }
    const std::size_t i1 = index_of[t.t1], i2 = index_of[t.t2];
    auto lift = [&](const std::vector<bool>& sub) {
      std::vector<bool> in(n, false);
      in[i1] = in[i2] = true;
      for (std::size_t e = 0; e < ground.size(); ++e) {
        if (sub[e]) in[ground[e]] = true;
      }
      return in;
    };
    const long weight = static_cast<long>(n) + 1;
    SetFunction f = [&](const std::vector<bool>& sub) {
      long size = std::count(sub.begin(), sub.end(), true);
      return mpq_class(weight * g(lift(sub)) + size);
    };
    SfmResult r = minimize_submodular(static_cast<int>(ground.size()), f);
    const std::vector<bool> in = lift(r.minimizer);
    if (g(in) > 2) continue;
    const long value = r.value.get_num().get_si();
    if (best && value >= best_value) continue;
    IndexSet cut;
    for (std::size_t i = 0; i < n; ++i) {
      if (in[i]) cut.push_back(labels[i]);
    }
    best = cut;
    best_value = value;
    if (cut.size() == 2) break;  // no smaller cut exists
  }
  return best;
}

}  // namespace

IndexSet complement(const Matrix& a, const IndexSet& x) {
  return set_difference(sorted_labels(a), x);
}

bool is_cut(const Matrix& a, const IndexSet& x) {
  if (!a.is_square()) throw Error(ErrorCode::kNotSquare, "is_cut");
  check_set(a, x);
  return is_cut_positions(a, positions(a, x));
}

RankOneFactors rank_one_factors(const Matrix& a, const IndexSet& x) {
  if (!is_cut(a, x)) {
    throw Error(ErrorCode::kNotACut, format_set(x) + " is not a cut");
  }
  const auto xp = positions(a, x);
  const auto xcp = positions(a, complement(a, x));
  RankOneFactors f;

  // A[X, X^c] = p q^T with q its first nonzero row.
  std::optional<std::size_t> r0;
  for (std::size_t r = 0; r < xp.size() && !r0; ++r) {
    for (auto c : xcp) {
      if (!a(xp[r], c).is_zero()) {
        r0 = r;
        break;
      }
    }
  }
  if (!r0) throw Error(ErrorCode::kZeroBlock, "A[X, X^c] is zero");
  std::size_t c0 = 0;
  while (a(xp[*r0], xcp[c0]).is_zero()) ++c0;
  for (auto c : xcp) f.q.push_back(a(xp[*r0], c));
  for (auto r : xp) f.p.push_back(a(r, xcp[c0]) / f.q[c0]);

  // A[X^c, X] = u v^T with u its first nonzero column.
  std::optional<std::size_t> k0;
  for (std::size_t c = 0; c < xp.size() && !k0; ++c) {
    for (auto r : xcp) {
      if (!a(r, xp[c]).is_zero()) {
        k0 = c;
        break;
      }
    }
  }
  if (!k0) throw Error(ErrorCode::kZeroBlock, "A[X^c, X] is zero");
  std::size_t r1 = 0;
  while (a(xcp[r1], xp[*k0]).is_zero()) ++r1;
  for (auto r : xcp) f.u.push_back(a(r, xp[*k0]));
  for (auto c : xp) f.v.push_back(a(xcp[r1], c) / f.u[r1]);
  return f;
}

Matrix cut_transpose(const Matrix& a, const IndexSet& x) {
  const RankOneFactors f = rank_one_factors(a, x);
  const auto xp = positions(a, x);
  const auto xcp = positions(a, complement(a, x));
  Matrix out = a;
  for (std::size_t i = 0; i < xp.size(); ++i) {
    for (std::size_t j = 0; j < xcp.size(); ++j) {
      out(xp[i], xcp[j]) = f.p[i] * f.u[j];
      out(xcp[j], xp[i]) = f.q[j] * f.v[i];
    }
  }
  for (auto i : xcp) {
    for (auto j : xcp) out(i, j) = a(j, i);
  }
  return out;
}

int cut_function_g(const Matrix& a, const IndexSet& x) {
  check_set(a, x);
  const auto xp = positions(a, x);
  const auto xcp = positions(a, complement(a, x));
  return static_cast<int>(rank(a.submatrix(xp, xcp)) + rank(a.submatrix(xcp, xp)));
}

std::optional<IndexSet> minimal_cut(const Matrix& a, CutBackend backend) {
  if (!a.is_square()) throw Error(ErrorCode::kNotSquare, "minimal_cut");
  if (a.rows() < 4) {
    throw Error(ErrorCode::kInvalidArgument, "cuts need at least 4 indices");
  }
  if (!is_irreducible(a)) throw Error(ErrorCode::kNotIrreducible, "minimal_cut");
  if (backend == CutBackend::kAuto) {
    backend = a.rows() <= kExhaustiveCutLimit ? CutBackend::kExhaustive
                                              : CutBackend::kMinNormPoint;
  }
  return backend == CutBackend::kExhaustive ? minimal_cut_exhaustive(a)
                                            : minimal_cut_mnp(a);
}

namespace {

// Cuts in (size, lexicographic) order using plain rank computations.
std::vector<IndexSet> scan_cuts(const Matrix& a, bool first_only) {
  if (!a.is_square()) throw Error(ErrorCode::kNotSquare, "cut scan");
  const std::size_t n = a.rows();
  if (n > kExhaustiveCutLimit) {
    throw Error(ErrorCode::kTooLarge, "exhaustive cut search needs n <= 22");
  }
  std::vector<IndexSet> out;
  if (n < 4) return out;
  const std::vector<Label> labels = sorted_labels(a);
  for (std::size_t k = 2; k + 2 <= n; ++k) {
    const bool stop = for_each_subset(labels, k, [&](const IndexSet& x) {
      const auto xp = positions(a, x);
      const auto xcp = complement_positions(n, xp);
      if (rank(a.submatrix(xp, xcp)) <= 1 && rank(a.submatrix(xcp, xp)) <= 1) {
        out.push_back(x);
        return first_only;
      }
      return false;
    });
    if (stop) break;
  }
  return out;
}

}  // namespace

std::optional<IndexSet> brute_force_min_cut(const Matrix& a) {
  auto cuts = scan_cuts(a, true);
  if (cuts.empty()) return std::nullopt;
  return cuts.front();
}

std::vector<IndexSet> all_cuts(const Matrix& a) { return scan_cuts(a, false); }

}  // namespace pmeq

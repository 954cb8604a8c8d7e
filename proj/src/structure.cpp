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

#include "pmeq/structure.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace pmeq {

namespace {

void require_square_same_labels(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square()) {
    throw Error(ErrorCode::kNotSquare, "expected square matrices");
  }
  if (a.labels() != b.labels()) {
    throw Error(ErrorCode::kLabelMismatch, "matrices have different labels");
  }
}

// Tarjan's algorithm on positions; returns component id per vertex.
std::vector<int> tarjan(const Matrix& a, int* count) {
  const int n = static_cast<int>(a.rows());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0;
  int next_comp = 0;

  // Iterative DFS: frames of (vertex, next neighbour to visit).
  std::vector<std::pair<int, int>> frames;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, nb] = frames.back();
      bool descended = false;
      while (nb < n) {
        const int w = nb++;
        if (w == v || a(v, w).is_zero()) continue;
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      const int v_done = v;
      if (low[v_done] == index[v_done]) {
        while (true) {
          const int w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = next_comp;
          if (w == v_done) break;
        }
        ++next_comp;
      }
      frames.pop_back();
      if (!frames.empty()) {
        const int parent = frames.back().first;
        low[parent] = std::min(low[parent], low[v_done]);
      }
    }
  }
  *count = next_comp;
  return comp;
}

}  // namespace

BlockDecomposition irreducible_blocks(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::kNotSquare, "irreducible_blocks");
  const int n = static_cast<int>(a.rows());
  int count = 0;
  std::vector<int> comp = tarjan(a, &count);

  std::vector<IndexSet> members(count);
  for (int v = 0; v < n; ++v) members[comp[v]].push_back(a.labels()[v]);
  for (auto& m : members) std::sort(m.begin(), m.end());

  std::vector<std::set<int>> succ(count);
  std::vector<int> indegree(count, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || a(i, j).is_zero() || comp[i] == comp[j]) continue;
      if (succ[comp[i]].insert(comp[j]).second) ++indegree[comp[j]];
    }
  }
  // Kahn's algorithm; among available blocks, smallest contained label first.
  using Entry = std::pair<Label, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (int c = 0; c < count; ++c) {
    if (indegree[c] == 0) ready.push({members[c].front(), c});
  }
  BlockDecomposition out;
  while (!ready.empty()) {
    const int c = ready.top().second;
    ready.pop();
    out.blocks.push_back(members[c]);
    for (int d : succ[c]) {
      if (--indegree[d] == 0) ready.push({members[d].front(), d});
    }
  }
  return out;
}

bool is_irreducible(const Matrix& a) {
  return irreducible_blocks(a).blocks.size() == 1;
}

BlockPairing partition_compatible(const Matrix& a, const Matrix& b) {
  require_square_same_labels(a, b);
  BlockPairing out;
  auto pa = irreducible_blocks(a).blocks;
  auto pb = irreducible_blocks(b).blocks;
  auto sa = pa, sb = pb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return out;
  out.compatible = true;
  out.blocks = std::move(pa);
  return out;
}

Matrix apply_witness(const Matrix& a, const DiagonalWitness& w) {
  if (w.labels != a.labels()) {
    throw Error(ErrorCode::kLabelMismatch, "witness labels");
  }
  Matrix m = w.transposed ? a.transpose() : a;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || m(i, j).is_zero()) continue;
      m(i, j) = w.d[i] * m(i, j) / w.d[j];
    }
  }
  return m;
}

std::optional<DiagonalWitness> diag_similar(const Matrix& a, const Matrix& b) {
  require_square_same_labels(a, b);
  if (a.field() != b.field()) throw Error(ErrorCode::kFieldMismatch, "diag_similar");
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).is_zero() != b(i, j).is_zero()) return std::nullopt;
    }
    if (a(i, i) != b(i, i)) return std::nullopt;
  }

  // Positions ordered by label so components are anchored at the smallest.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a.labels()[x] < a.labels()[y];
  });

  std::vector<std::optional<Element>> d(n);
  for (std::size_t start : order) {
    if (d[start]) continue;
    d[start] = a.field().one();
    std::queue<std::size_t> queue;
    queue.push(start);
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop();
      for (std::size_t j : order) {
        if (j == i || d[j]) continue;
        // B[i,j] = D_i A[i,j] / D_j and B[j,i] = D_j A[j,i] / D_i.
        if (!a(i, j).is_zero()) {
          d[j] = *d[i] * a(i, j) / b(i, j);
        } else if (!a(j, i).is_zero()) {
          d[j] = *d[i] * b(j, i) / a(j, i);
        } else {
          continue;
        }
        queue.push(j);
      }
    }
  }

  DiagonalWitness w;
  w.labels = a.labels();
  for (auto& x : d) w.d.push_back(*x);
  if (apply_witness(a, w) != b) return std::nullopt;
  return w;
}

std::optional<DiagonalWitness> diag_equivalent(const Matrix& a,
                                               const Matrix& b) {
  if (auto w = diag_similar(a, b)) return w;
  // B^T = D A D^-1  <=>  B = D^-1 A^T D.
  auto w = diag_similar(a, b.transpose());
  if (!w) return std::nullopt;
  for (auto& x : w->d) x = x.inverse();
  w->transposed = true;
  return w;
}

}  // namespace pmeq

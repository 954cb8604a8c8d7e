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

#include <algorithm>
#include <deque>
#include <optional>

#include "pmeq/errors.hpp"
#include "pmeq/pit.hpp"

namespace pmeq {

LinearMatroid::LinearMatroid(Matrix representation) : rep_(std::move(representation)) {}

std::size_t LinearMatroid::rank() const { return pmeq::rank(rep_); }

bool LinearMatroid::is_independent(const IndexSet& elements) const {
  if (elements.empty()) return true;
  if (elements.size() > rep_.rows()) return false;
  std::vector<std::size_t> rows(rep_.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  std::vector<std::size_t> cols;
  for (Label e : elements) cols.push_back(static_cast<std::size_t>(e - 1));
  return pmeq::rank(rep_.submatrix(rows, cols)) == elements.size();
}

namespace {

IndexSet members(const std::vector<bool>& in) {
  IndexSet out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i]) out.push_back(static_cast<Label>(i + 1));
  }
  return out;
}

IndexSet exchange(const IndexSet& base, Label drop, Label add) {
  IndexSet out;
  for (Label e : base) {
    if (e != drop) out.push_back(e);
  }
  out.push_back(add);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<IndexSet> matroid_intersection_common_base(const Matrix& u,
                                                         const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "matroid representations differ in shape");
  }
  if (u.field() != v.field()) {
    throw Error(ErrorCode::kFieldMismatch, "matroid representations over different fields");
  }
  const std::size_t n = u.rows();
  const std::size_t m = u.cols();
  if (m < n) return std::nullopt;
  LinearMatroid m1(u), m2(v);
  std::vector<bool> in(m, false);
  std::size_t size = 0;

  while (size < n) {
    const IndexSet current = members(in);
    std::vector<bool> source(m, false), sink(m, false);
    for (std::size_t x = 0; x < m; ++x) {
      if (in[x]) continue;
      IndexSet grown = current;
      grown.push_back(static_cast<Label>(x + 1));
      std::sort(grown.begin(), grown.end());
      source[x] = m1.is_independent(grown);
      sink[x] = m2.is_independent(grown);
    }
    // Arcs y -> x when I - y + x is independent in M1, x -> y when it is
    // independent in M2 (y in I, x outside).
    std::vector<std::vector<std::size_t>> adj(m);
    for (std::size_t y = 0; y < m; ++y) {
      if (!in[y]) continue;
      for (std::size_t x = 0; x < m; ++x) {
        if (in[x]) continue;
        IndexSet swapped = exchange(current, static_cast<Label>(y + 1),
                                    static_cast<Label>(x + 1));
        if (m1.is_independent(swapped)) adj[y].push_back(x);
        if (m2.is_independent(swapped)) adj[x].push_back(y);
      }
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());

    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(m, kNone);
    std::vector<bool> seen(m, false);
    std::deque<std::size_t> queue;
    for (std::size_t x = 0; x < m; ++x) {
      if (source[x]) {
        seen[x] = true;
        queue.push_back(x);
      }
    }
    std::size_t end = kNone;
    while (!queue.empty() && end == kNone) {
      // Scan one BFS layer and keep the smallest sink in it.
      std::deque<std::size_t> next;
      std::size_t best = kNone;
      for (std::size_t node : queue) {
        if (sink[node] && !in[node] && (best == kNone || node < best)) best = node;
      }
      if (best != kNone) {
        end = best;
        break;
      }
      for (std::size_t node : queue) {
        for (std::size_t to : adj[node]) {
          if (seen[to]) continue;
          seen[to] = true;
          parent[to] = node;
          next.push_back(to);
        }
      }
      queue = std::move(next);
    }
    if (end == kNone) return std::nullopt;
    for (std::size_t node = end; node != kNone; node = parent[node]) {
      in[node] = !in[node];
    }
    ++size;
  }
  return members(in);
}

}  // namespace pmeq

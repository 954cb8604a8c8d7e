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

// Diagonal shifts making A + D, B + D nonsingular with all-nonzero adjugates.

#include <algorithm>
#include <queue>
#include <random>
#include <stdexcept>

#include "pmeq/pme.hpp"

namespace pmeq {

namespace {

Matrix add_diagonal(const Matrix& a, const std::vector<Element>& d) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) out(i, i) += d[i];
  return out;
}

DiagonalShift make_shift(const Matrix& a, std::vector<Element> d) {
  DiagonalShift s;
  s.field = a.field();
  s.labels = a.labels();
  s.d = std::move(d);
  return s;
}

// Shortest path from position i to position j in the support digraph, as
// positions (i first). Empty when unreachable.
std::vector<std::size_t> shortest_path(const Matrix& a, std::size_t i,
                                       std::size_t j) {
  const std::size_t n = a.rows();
  if (i == j) return {i};
  std::vector<std::size_t> parent(n, n);
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> queue;
  seen[i] = true;
  queue.push(i);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop();
    for (std::size_t w = 0; w < n; ++w) {
      if (w == v || seen[w] || a(v, w).is_zero()) continue;
      seen[w] = true;
      parent[w] = v;
      if (w == j) {
        std::vector<std::size_t> path{j};
        while (path.back() != i) path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push(w);
    }
  }
  return {};
}

// (-1)^(i+j) det(M with row j and column i removed), positions.
Element cofactor_entry(const Matrix& m, std::size_t i, std::size_t j) {
  std::vector<std::size_t> rows, cols;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r != j) rows.push_back(r);
    if (r != i) cols.push_back(r);
  }
  Element det = determinant(m.submatrix(rows, cols));
  return (i + j) % 2 ? -det : det;
}

bool all_nonzero(const Matrix& m) {
  return std::none_of(m.entries().begin(), m.entries().end(),
                      [](const Element& e) { return e.is_zero(); });
}

std::vector<Element> shift_for_entry(const Matrix& a, std::size_t i,
                                     std::size_t j) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> path = shortest_path(a, i, j);
  if (path.empty()) {
    throw Error(ErrorCode::kNotIrreducible,
                "no path between labels " + std::to_string(a.labels()[i]) +
                    " and " + std::to_string(a.labels()[j]));
  }
  std::vector<bool> on_path(n, false);
  for (std::size_t k = 1; k < path.size(); ++k) on_path[path[k]] = true;
  // adj(A + D')[i,j] has degree <= n-1 in y, so one of n points works.
  for (std::size_t k = 0; k < n; ++k) {
    const Element y = a.field().point(mpz_class(static_cast<unsigned long>(k)));
    std::vector<Element> d;
    for (std::size_t e = 0; e < n; ++e) d.push_back(on_path[e] ? a.field().zero() : y);
    if (!cofactor_entry(add_diagonal(a, d), i, j).is_zero()) return d;
  }
  throw std::logic_error("adjugate entry vanished at n points");
}

}  // namespace

DiagonalShift nonsingular_shift(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::kNotSquare, "nonsingular_shift");
  const std::size_t n = a.rows();
  const Field f = a.field();
  auto y = UnivariatePoly::variable(f);
  PolyMatrix m{f, n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto c = UnivariatePoly::constant(a(i, j));
      m.entries.push_back(i == j ? c + y : c);
    }
  }
  // det(A + yI) is monic of degree n: one of the first n+1 points works.
  UnivariatePoly det = poly_matrix_determinant(m, static_cast<int>(n));
  for (const Element& x : enumerate_points(f, n + 1)) {
    if (!det.evaluate(x).is_zero()) {
      return make_shift(a, std::vector<Element>(n, x));
    }
  }
  throw std::logic_error("monic determinant vanished at n+1 points");
}

DiagonalShift adjugate_entry_shift(const Matrix& a, Label i, Label j) {
  if (!a.is_square()) throw Error(ErrorCode::kNotSquare, "adjugate_entry_shift");
  if (!is_irreducible(a)) throw Error(ErrorCode::kNotIrreducible, "adjugate_entry_shift");
  return make_shift(a, shift_for_entry(a, a.row_position(i), a.col_position(j)));
}

ShiftResult combine_shifts(const Matrix& a, const Matrix& b,
                           const ShiftOptions& options) {
  if (!a.is_square() || !b.is_square()) {
    throw Error(ErrorCode::kNotSquare, "combine_shifts");
  }
  if (a.labels() != b.labels()) throw Error(ErrorCode::kLabelMismatch, "combine_shifts");
  if (a.field() != b.field()) throw Error(ErrorCode::kFieldMismatch, "combine_shifts");
  if (!is_irreducible(a) || !is_irreducible(b)) {
    throw Error(ErrorCode::kNotIrreducible, "combine_shifts");
  }
  const Field f = a.field();
  const std::size_t n = a.rows();
  const std::size_t nodes = 2 * n * n + 2;
  const mpz_class degree = mpz_class(static_cast<unsigned long>(2 * n * n * n + n)) *
                           mpz_class(static_cast<unsigned long>(nodes));
  if (!f.has_at_least(degree + 1)) {
    throw Error(ErrorCode::kFieldTooSmall,
                f.header() + " has fewer than " + mpz_class(degree + 1).get_str() +
                    " elements");
  }

  // Map k: 0 -> Type I for A, 1 -> Type I for B, then Type II for every
  // (i, j) of A, then of B. Built on demand.
  std::vector<std::optional<std::vector<Element>>> maps(nodes);
  auto map_at = [&](std::size_t k) -> const std::vector<Element>& {
    if (!maps[k]) {
      if (k == 0) {
        maps[k] = nonsingular_shift(a).d;
      } else if (k == 1) {
        maps[k] = nonsingular_shift(b).d;
      } else {
        const std::size_t r = (k - 2) % (n * n);
        const Matrix& m = k - 2 < n * n ? a : b;
        maps[k] = shift_for_entry(m, r / n, r % n);
      }
    }
    return *maps[k];
  };

  std::vector<UnivariatePoly> coordinate;  // P_i, built on demand
  auto shift_at = [&](const mpz_class& index) {
    if (index < static_cast<unsigned long>(nodes)) return map_at(index.get_ui());
    if (coordinate.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::pair<Element, Element>> pts;
        for (std::size_t k = 0; k < nodes; ++k) {
          pts.emplace_back(f.point(mpz_class(static_cast<unsigned long>(k))),
                           map_at(k)[i]);
        }
        coordinate.push_back(lagrange_interpolate(pts));
      }
    }
    const Element x = f.point(index);
    std::vector<Element> d;
    for (auto& p : coordinate) d.push_back(p.evaluate(x));
    return d;
  };

  auto attempt = [&](const mpz_class& index) -> std::optional<ShiftResult> {
    std::vector<Element> d = shift_at(index);
    Matrix ad = add_diagonal(a, d);
    Matrix bd = add_diagonal(b, d);
    if (determinant(ad).is_zero() || determinant(bd).is_zero()) return std::nullopt;
    Matrix a_adj = adjugate(ad);
    if (!all_nonzero(a_adj)) return std::nullopt;
    Matrix b_adj = adjugate(bd);
    if (!all_nonzero(b_adj)) return std::nullopt;
    return ShiftResult{make_shift(a, std::move(d)), std::move(a_adj),
                       std::move(b_adj),
                       static_cast<std::size_t>(index.get_ui())};
  };

  if (options.randomized) {
    std::mt19937_64 rng(options.seed);
    const mpz_class limit =
        f.cardinality() ? std::min(*f.cardinality(), mpz_class("1000000000000"))
                        : mpz_class("1000000000000");
    for (int t = 0; t < 20; ++t) {
      mpz_class index = mpz_class(std::to_string(rng())) % limit;
      if (auto r = attempt(index)) return *r;
    }
  }
  for (mpz_class index = 0; index <= degree; ++index) {
    if (auto r = attempt(index)) return *r;
  }
  throw std::logic_error("no admissible diagonal shift among the candidates");
}

}  // namespace pmeq

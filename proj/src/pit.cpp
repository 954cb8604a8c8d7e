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

#include "pmeq/pit.hpp"

#include <string>

#include "pmeq/errors.hpp"
#include "pmeq/pme.hpp"

namespace pmeq {

namespace {

void check_vector(const Vector& x, const Field& field, std::size_t n, std::size_t term) {
  if (x.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "term " + std::to_string(term) + " has a vector of length " +
                    std::to_string(x.size()) + ", expected " + std::to_string(n));
  }
  for (const Element& e : x) {
    if (e.field() != field) {
      throw Error(ErrorCode::kFieldMismatch, "term " + std::to_string(term));
    }
  }
}

void check_same_shape(const RankOnePencil& p1, const RankOnePencil& p2) {
  p1.validate();
  p2.validate();
  if (p1.field != p2.field) throw Error(ErrorCode::kFieldMismatch, "pencils");
  if (p1.n != p2.n || p1.m() != p2.m()) {
    throw Error(ErrorCode::kDimensionMismatch, "pencils differ in n or m");
  }
}

std::vector<std::size_t> iota(std::size_t count, std::size_t start = 0) {
  std::vector<std::size_t> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = start + i;
  return out;
}

}  // namespace

void RankOnePencil::validate() const {
  if (a0.rows() != n || a0.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "A0 must be n x n");
  }
  if (a0.field() != field) throw Error(ErrorCode::kFieldMismatch, "A0");
  for (std::size_t j = 0; j < terms.size(); ++j) {
    check_vector(terms[j].u, field, n, j + 1);
    check_vector(terms[j].v, field, n, j + 1);
  }
}

Matrix RankOnePencil::evaluate(const std::vector<Element>& y) const {
  if (y.size() != terms.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "point has wrong arity");
  }
  Matrix out = a0;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (y[j].is_zero()) continue;
    for (std::size_t r = 0; r < n; ++r) {
      if (terms[j].u[r].is_zero()) continue;
      const Element scaled = y[j] * terms[j].u[r];
      for (std::size_t c = 0; c < n; ++c) out(r, c) += scaled * terms[j].v[c];
    }
  }
  return out;
}

Matrix RankOnePencil::u_matrix() const {
  Matrix out(field, n, terms.size());
  for (std::size_t j = 0; j < terms.size(); ++j) {
    for (std::size_t r = 0; r < n; ++r) out(r, j) = terms[j].u[r];
  }
  return out;
}

Matrix RankOnePencil::v_matrix() const {
  Matrix out(field, n, terms.size());
  for (std::size_t j = 0; j < terms.size(); ++j) {
    for (std::size_t r = 0; r < n; ++r) out(r, j) = terms[j].v[r];
  }
  return out;
}

RankOnePencil RankOnePencil::from_matrices(const Matrix& a0,
                                           const std::vector<Matrix>& terms) {
  if (!a0.is_square()) throw Error(ErrorCode::kNotSquare, "A0");
  RankOnePencil p;
  p.field = a0.field();
  p.n = a0.rows();
  p.a0 = a0;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (terms[j].rows() != p.n || terms[j].cols() != p.n) {
      throw Error(ErrorCode::kDimensionMismatch, "term " + std::to_string(j + 1));
    }
    try {
      auto [u, v] = rank_one_decompose(terms[j]);
      p.terms.push_back({std::move(u), std::move(v)});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kRankTooHigh) throw;
      throw Error(ErrorCode::kRankTooHigh,
                  "term " + std::to_string(j + 1) + " has rank > 1");
    }
  }
  return p;
}

std::pair<Vector, Vector> rank_one_decompose(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::kNotSquare, "rank_one_decompose");
  const std::size_t n = a.rows();
  const Field f = a.field();
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      Vector u(n, f.zero()), v(n, f.zero());
      for (std::size_t i = 0; i < n; ++i) u[i] = a(i, c);
      const Element pivot_inv = a(r, c).inverse();
      for (std::size_t j = 0; j < n; ++j) v[j] = a(r, j) * pivot_inv;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (u[i] * v[j] != a(i, j)) {
            throw Error(ErrorCode::kRankTooHigh, "matrix has rank > 1");
          }
        }
      }
      return {u, v};
    }
  }
  return {Vector(n, f.zero()), Vector(n, f.zero())};
}

PitReduction reduce_homogeneous(const Matrix& u1, const Matrix& v1, const Matrix& u2,
                                const Matrix& v2) {
  const std::size_t n = u1.rows();
  const std::size_t m = u1.cols();
  for (const Matrix* x : {&v1, &u2, &v2}) {
    if (x->rows() != n || x->cols() != m) {
      throw Error(ErrorCode::kDimensionMismatch, "pencil factors differ in shape");
    }
    if (x->field() != u1.field()) throw Error(ErrorCode::kFieldMismatch, "pencil factors");
  }
  PitReduction out;
  const auto t1 = matroid_intersection_common_base(u1, v1);
  const auto t2 = matroid_intersection_common_base(u2, v2);
  if (!t1 || !t2) {
    // No common base means every coefficient vanishes.
    out.decided = true;
    out.equal = !t1 && !t2;
    return out;
  }

  // Relabel so the base comes first; the verdict does not depend on it.
  std::vector<std::size_t> order;
  std::vector<bool> in_base(m, false);
  for (Label t : *t1) {
    order.push_back(static_cast<std::size_t>(t - 1));
    in_base[static_cast<std::size_t>(t - 1)] = true;
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (!in_base[j]) order.push_back(j);
  }
  const auto rows = iota(n);
  const auto head = iota(n);
  const auto tail = iota(m - n, n);
  auto permuted = [&](const Matrix& x) { return x.submatrix(rows, order); };
  const Matrix pu1 = permuted(u1), pv1 = permuted(v1);
  const Matrix pu2 = permuted(u2), pv2 = permuted(v2);

  const Element d1 = determinant(pu1.submatrix(rows, head)) *
                     determinant(pv1.submatrix(rows, head));
  const Element d2 = determinant(pu2.submatrix(rows, head)) *
                     determinant(pv2.submatrix(rows, head));
  if (d1 != d2) {
    out.decided = true;
    out.equal = false;
    return out;
  }
  if (m == n) {
    out.decided = true;
    out.equal = true;
    return out;
  }

  auto hat = [&](const Matrix& x) {
    return (inverse(x.submatrix(rows, head)) * x).submatrix(rows, tail);
  };
  auto assemble = [&](const Matrix& uh, const Matrix& vh) {
    const std::size_t k = m - n;
    Matrix a(u1.field(), m, m);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < n; ++c) a(r, k + c) = vh(c, r);
    }
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < k; ++c) a(k + r, c) = -uh(r, c);
    }
    return a;
  };
  out.a = assemble(hat(pu1), hat(pv1));
  out.b = assemble(hat(pu2), hat(pv2));
  return out;
}

bool pit_homogeneous(const RankOnePencil& p1, const RankOnePencil& p2) {
  check_same_shape(p1, p2);
  if (!p1.a0.is_zero() || !p2.a0.is_zero()) {
    throw Error(ErrorCode::kInvalidArgument, "pit_homogeneous needs A0 = 0");
  }
  PitReduction r =
      reduce_homogeneous(p1.u_matrix(), p1.v_matrix(), p2.u_matrix(), p2.v_matrix());
  if (r.decided) return r.equal;
  return pme_check(*r.a, *r.b).equivalent;
}

std::pair<Matrix, Matrix> general_to_homogeneous(const RankOnePencil& p) {
  p.validate();
  const std::size_t n = p.n;
  const std::size_t m = p.m();
  const Field f = p.field;
  Matrix w(f, m + n, 2 * m + n);
  Matrix fixed(f, m + n, 2 * m + n);
  for (std::size_t i = 0; i < m; ++i) {
    w(i, m + i) = f.one();
    for (std::size_t c = 0; c < n; ++c) w(i, 2 * m + c) = p.terms[i].v[c];
    fixed(i, i) = f.one();
    fixed(i, m + i) = f.one();
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < m; ++j) w(m + r, j) = p.terms[j].u[r];
    for (std::size_t c = 0; c < n; ++c) w(m + r, 2 * m + c) = p.a0(r, c);
    fixed(m + r, 2 * m + r) = f.one();
  }
  return {w, fixed};
}

bool pit_general(const RankOnePencil& p1, const RankOnePencil& p2) {
  check_same_shape(p1, p2);
  auto [w1, f1] = general_to_homogeneous(p1);
  auto [w2, f2] = general_to_homogeneous(p2);
  PitReduction r = reduce_homogeneous(w1, f1, w2, f2);
  if (r.decided) return r.equal;
  return pme_check(*r.a, *r.b).equivalent;
}

bool pit_check(const RankOnePencil& p1, const RankOnePencil& p2) {
  check_same_shape(p1, p2);
  if (p1.a0.is_zero() && p2.a0.is_zero()) return pit_homogeneous(p1, p2);
  return pit_general(p1, p2);
}

bool brute_force_pit(const RankOnePencil& p1, const RankOnePencil& p2) {
  check_same_shape(p1, p2);
  const std::size_t m = p1.m();
  if (m > 12) throw Error(ErrorCode::kTooLarge, "brute_force_pit needs m <= 12");
  const Field f = p1.field;
  std::vector<Element> y(m, f.zero());
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    for (std::size_t j = 0; j < m; ++j) y[j] = (mask >> j) & 1 ? f.one() : f.zero();
    if (determinant(p1.evaluate(y)) != determinant(p2.evaluate(y))) return false;
  }
  return true;
}

}  // namespace pmeq

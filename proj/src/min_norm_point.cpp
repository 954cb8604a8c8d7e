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

#include "pmeq/min_norm_point.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pmeq {

namespace {

using Vec = std::vector<mpq_class>;

mpq_class dot(const Vec& a, const Vec& b) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Greedy vertex of the base polytope minimizing <w, q>.
Vec greedy_vertex(int m, const Vec& w, const SetFunction& f,
                  const mpq_class& f_empty) {
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return w[a] < w[b]; });
  Vec q(m);
  std::vector<bool> set(m, false);
  mpq_class prev = f_empty;
  for (int e : order) {
    set[e] = true;
    mpq_class cur = f(set);
    q[e] = cur - prev;
    prev = cur;
  }
  return q;
}

// Solves the dense system M z = rhs in place (M nonsingular).
Vec solve(std::vector<Vec> m, Vec rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m[piv][c]) == 0) ++piv;
    if (piv == n) throw std::logic_error("affinely dependent corral");
    std::swap(m[piv], m[c]);
    std::swap(rhs[piv], rhs[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(m[i][c]) == 0) continue;
      const mpq_class factor = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= factor * m[c][j];
      rhs[i] -= factor * rhs[c];
    }
  }
  Vec z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = rhs[i] / m[i][i];
  return z;
}

// Coefficients (summing to 1) of the minimum-norm point in the affine hull.
Vec affine_min_norm(const std::vector<Vec>& pts) {
  const std::size_t k = pts.size();
  std::vector<Vec> m(k + 1, Vec(k + 1));
  Vec rhs(k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= i; ++j) m[i][j] = m[j][i] = dot(pts[i], pts[j]);
    m[i][k] = 1;
    m[k][i] = 1;
  }
  m[k][k] = 0;
  rhs[k] = 1;
  Vec z = solve(std::move(m), std::move(rhs));
  z.pop_back();
  return z;
}

Vec combine(const std::vector<Vec>& pts, const Vec& coeff, int m) {
  Vec x(m);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (int e = 0; e < m; ++e) x[e] += coeff[i] * pts[i][e];
  }
  return x;
}

}  // namespace

SfmResult minimize_submodular(int m, const SetFunction& f) {
  SfmResult out;
  const mpq_class f_empty = f(std::vector<bool>(m, false));
  if (m == 0) {
    out.value = f_empty;
    return out;
  }

  std::vector<Vec> corral{greedy_vertex(m, Vec(m), f, f_empty)};
  Vec lambda{mpq_class(1)};
  Vec x = corral[0];

  while (true) {
    ++out.major_iterations;
    Vec q = greedy_vertex(m, x, f, f_empty);
    if (dot(x, x) <= dot(x, q)) break;
    if (std::find(corral.begin(), corral.end(), q) != corral.end()) break;
    corral.push_back(std::move(q));
    lambda.push_back(0);

    while (true) {
      Vec alpha = affine_min_norm(corral);
      bool interior = std::all_of(alpha.begin(), alpha.end(),
                                  [](const mpq_class& a) { return sgn(a) > 0; });
      if (interior) {
        lambda = std::move(alpha);
        x = combine(corral, lambda, m);
        break;
      }
      // Move from x towards the affine minimizer until a weight hits zero.
      mpq_class theta = 1;
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (sgn(alpha[i]) <= 0) {
          mpq_class t = lambda[i] / (lambda[i] - alpha[i]);
          if (t < theta) theta = t;
        }
      }
      for (std::size_t i = 0; i < lambda.size(); ++i) {
        lambda[i] = theta * alpha[i] + (1 - theta) * lambda[i];
      }
      std::vector<Vec> kept;
      Vec kept_lambda;
      for (std::size_t i = 0; i < corral.size(); ++i) {
        if (sgn(lambda[i]) > 0) {
          kept.push_back(std::move(corral[i]));
          kept_lambda.push_back(lambda[i]);
        }
      }
      corral = std::move(kept);
      lambda = std::move(kept_lambda);
      x = combine(corral, lambda, m);
    }
  }

  out.minimizer.assign(m, false);
  for (int e = 0; e < m; ++e) out.minimizer[e] = sgn(x[e]) < 0;
  out.value = f(out.minimizer);
  return out;
}

}  // namespace pmeq

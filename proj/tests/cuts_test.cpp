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

#include <gtest/gtest.h>

#include <random>

#include "pmeq/structure.hpp"
#include "test_util.hpp"

namespace pmeq {
namespace {

using namespace pmeq::testing;

TEST(Cuts, IntroExamples) {
  EXPECT_TRUE(is_cut(intro_a(), {1, 2}));
  EXPECT_FALSE(is_cut(intro_b(), {1, 2}));
  EXPECT_TRUE(is_cut(intro_b(), {1, 4}));
  EXPECT_FALSE(is_cut(intro_a(), {1}));
  EXPECT_FALSE(is_cut(intro_a(), {1, 2, 3, 4, 5}));
  EXPECT_FALSE(is_cut(Matrix::identity(Q(), 3), {1, 2}));
}

TEST(Cuts, ComplementSymmetry) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 4 + t % 5;
    Matrix a = t % 2 ? planted_cut_matrix(Q(), n, random_cut_set(n, rng), rng)
                     : rand_matrix(Field::prime(3), n, n, rng, 0.5);
    IndexSet x = random_cut_set(n, rng);
    EXPECT_EQ(is_cut(a, x), is_cut(a, complement(a, x)));
  }
}

TEST(Cuts, FactorsOfCyclicMatrix) {
  RankOneFactors f = rank_one_factors(intro_a(), {1, 2});
  std::vector<std::string> q, p;
  for (auto& e : f.q) q.push_back(e.to_string());
  for (auto& e : f.p) p.push_back(e.to_string());
  EXPECT_EQ(q, (std::vector<std::string>{"1", "0", "0", "0"}));
  EXPECT_EQ(p, (std::vector<std::string>{"0", "1"}));
}

TEST(Cuts, FactorsOfAllOnesBlocks) {
  Field f = Q();
  Matrix a(f, 4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) a(i, j) = f.one();
  }
  RankOneFactors r = rank_one_factors(a, {1, 2});
  for (auto* vec : {&r.p, &r.q, &r.u, &r.v}) {
    for (auto& e : *vec) EXPECT_TRUE(e.is_one());
  }
}

TEST(Cuts, FactorsReproduceBlock) {
  Matrix a = five_a();
  IndexSet x{1, 2};
  ASSERT_TRUE(is_cut(a, x));
  RankOneFactors f = rank_one_factors(a, x);
  IndexSet xc{3, 4, 5};
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < xc.size(); ++j) {
      EXPECT_EQ(f.p[i] * f.q[j], a.at(x[i], xc[j]));
      EXPECT_EQ(f.u[j] * f.v[i], a.at(xc[j], x[i]));
    }
  }
}

TEST(Cuts, ZeroBlockIsRejected) {
  Matrix a = Matrix::identity(Q(), 4);
  try {
    rank_one_factors(a, {1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroBlock);
  }
}

TEST(Cuts, TransposeOfIntroB) {
  EXPECT_EQ(cut_transpose(intro_b(), {1, 4}), intro_b_prime());
  EXPECT_TRUE(is_cut(intro_b_prime(), {1, 2}));
}

TEST(Cuts, TransposeOfDisplayedFourByFour) {
  Field f = Q();
  std::vector<Label> l{2, 3, 4, 5};
  Matrix b2 = principal_submatrix(five_b(), l);
  Matrix got = cut_transpose(b2, {2, 3});
  auto r = [&](long n, long d) { return f.from_rational(mpq_class(n, d)); };
  std::vector<Element> e{r(1, 1),  r(2, 1),  r(-1, 1), r(-1, 1),
                         r(-1, 1), r(2, 1),  r(-1, 2), r(-1, 2),
                         r(4, 1),  r(4, 1),  r(3, 1),  r(4, 1),
                         r(-2, 1), r(-2, 1), r(5, 1),  r(6, 1)};
  EXPECT_EQ(got, Matrix(f, 4, 4, e, l, l));
}

TEST(Cuts, TransposeIsInvolution) {
  std::mt19937_64 rng(59);
  for (Field f : {Q(), Field::prime(101)}) {
    for (int t = 0; t < 50; ++t) {
      const std::size_t n = 4 + t % 5;
      IndexSet x = random_cut_set(n, rng);
      Matrix a = planted_cut_matrix(f, n, x, rng);
      EXPECT_EQ(cut_transpose(cut_transpose(a, x), x), a);
    }
  }
}

TEST(Cuts, TransposeRequiresCut) {
  try {
    cut_transpose(intro_b(), {1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotACut);
  }
}

TEST(Cuts, TransposePreservesPrincipalMinors) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 12; ++t) {
    const std::size_t n = 4 + t % 5;  // up to 8
    IndexSet x = random_cut_set(n, rng);
    Matrix a = planted_cut_matrix(Q(), n, x, rng);
    EXPECT_EQ(all_principal_minors(cut_transpose(a, x)), all_principal_minors(a));
  }
}

TEST(Cuts, CutFunction) {
  std::mt19937_64 seed(67);
  Matrix a = planted_cut_matrix(Q(), 6, {2, 5}, seed);
  EXPECT_EQ(cut_function_g(a, {2, 5}), 2);
  EXPECT_EQ(cut_function_g(a, {}), 0);
  std::mt19937_64 rng(71);
  for (int t = 0; t < 30; ++t) {
    Matrix m = rand_matrix(Q(), 5, 5, rng, 0.3);
    IndexSet x = random_cut_set(5, rng);
    IndexSet xc = complement(m, x);
    const int expected = static_cast<int>(rank(m.block(x, xc)) + rank(m.block(xc, x)));
    EXPECT_EQ(cut_function_g(m, x), expected);
  }
}

TEST(Cuts, CutFunctionIsSubmodular) {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 200; ++t) {
    Matrix m = t % 2 ? rand_matrix(Field::prime(3), 6, 6, rng, 0.5)
                     : planted_cut_matrix(Q(), 6, random_cut_set(6, rng), rng);
    std::uniform_int_distribution<int> bit(0, 1);
    IndexSet x;
    std::vector<Label> rest;
    for (Label l = 1; l <= 6; ++l) (bit(rng) ? x : rest).push_back(l);
    if (rest.size() < 2) continue;
    std::shuffle(rest.begin(), rest.end(), rng);
    IndexSet xa = set_union(x, {rest[0]});
    IndexSet xb = set_union(x, {rest[1]});
    IndexSet xab = set_union(xa, {rest[1]});
    EXPECT_GE(cut_function_g(m, xa) + cut_function_g(m, xb),
              cut_function_g(m, x) + cut_function_g(m, xab));
  }
}

TEST(Cuts, MinimalCutOfIntroMatrix) {
  EXPECT_EQ(minimal_cut(intro_a()), (IndexSet{1, 2}));
  EXPECT_EQ(minimal_cut(intro_a(), CutBackend::kMinNormPoint), (IndexSet{1, 2}));
}

TEST(Cuts, DenseFourByFourHasNoCut) {
  std::mt19937_64 rng(79);
  int checked = 0;
  for (int t = 0; t < 30; ++t) {
    Matrix a = rand_matrix(Q(), 4, 4, rng);
    if (!is_irreducible(a) || brute_force_min_cut(a)) continue;
    ++checked;
    EXPECT_FALSE(minimal_cut(a).has_value());
    EXPECT_FALSE(minimal_cut(a, CutBackend::kMinNormPoint).has_value());
  }
  EXPECT_GT(checked, 10);
}

TEST(Cuts, MinimalCutPreconditions) {
  try {
    minimal_cut(Matrix::from_ints(Q(), {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  try {
    minimal_cut(Matrix::identity(Q(), 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotIrreducible);
  }
}

TEST(Cuts, BruteForceOnIntroB) {
  auto cuts = all_cuts(intro_b());
  EXPECT_NE(std::find(cuts.begin(), cuts.end(), IndexSet{1, 4}), cuts.end());
  EXPECT_EQ(brute_force_min_cut(intro_b()), cuts.front());
}

TEST(Cuts, DenseSixBySixHasNoCut) {
  std::mt19937_64 rng(83);
  Matrix a = rand_matrix(Q(), 6, 6, rng);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      if (a(i, j).is_zero()) a(i, j) = Q().from_int(7);
    }
  }
  EXPECT_FALSE(brute_force_min_cut(a).has_value());
  EXPECT_FALSE(minimal_cut(a).has_value());
}

// Existence, minimum size and inclusion-minimality against the oracle.
void expect_minimal_agrees(const Matrix& a, CutBackend backend) {
  auto got = minimal_cut(a, backend);
  auto oracle = brute_force_min_cut(a);
  ASSERT_EQ(got.has_value(), oracle.has_value());
  if (!got) return;
  EXPECT_TRUE(is_cut(a, *got));
  EXPECT_EQ(got->size(), oracle->size());
  for (const auto& c : all_cuts(a)) {
    if (c.size() >= got->size()) break;
    EXPECT_FALSE(std::includes(got->begin(), got->end(), c.begin(), c.end()));
  }
}

TEST(Cuts, MinimalCutAgreesWithBruteForce) {
  std::mt19937_64 rng(89);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 4 + t % 7;  // up to 10
    Field f = t % 2 ? Q() : Field::prime(101);
    Matrix a = planted_cut_matrix(f, n, random_cut_set(n, rng), rng);
    expect_minimal_agrees(a, CutBackend::kExhaustive);
    if (n <= 8) expect_minimal_agrees(a, CutBackend::kMinNormPoint);
  }
}

TEST(Cuts, BackendsReturnTheSameCut) {
  std::mt19937_64 rng(97);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 4 + t % 5;
    Matrix a = planted_cut_matrix(Q(), n, random_cut_set(n, rng), rng);
    // A second planted cut in some instances.
    if (t % 3 == 0) {
      IndexSet y = random_cut_set(n, rng);
      Matrix b = planted_cut_matrix(Q(), n, y, rng);
      if (is_cut(a, y) || !is_irreducible(b)) continue;
      a = b;
    }
    EXPECT_EQ(minimal_cut(a, CutBackend::kExhaustive),
              minimal_cut(a, CutBackend::kMinNormPoint));
  }
}

TEST(Cuts, AdjugateHasTheSameCuts) {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 4 + t % 4;  // up to 7
    Matrix a = planted_cut_matrix(Q(), n, random_cut_set(n, rng), rng);
    Matrix shifted = a;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) += rand_elem(Q(), rng);
    if (determinant(shifted).is_zero()) continue;
    EXPECT_EQ(all_cuts(a), all_cuts(adjugate(shifted)));
  }
}

TEST(Cuts, AdjugateCommutesWithTransposeUpToSimilarity) {
  std::mt19937_64 rng(103);
  int checked = 0;
  for (int t = 0; t < 60 && checked < 25; ++t) {
    const std::size_t n = 4 + t % 4;
    IndexSet x = random_cut_set(n, rng);
    Matrix a = planted_cut_matrix(Q(), n, x, rng);
    if (determinant(a).is_zero()) continue;
    Matrix adj = adjugate(a);
    if (!is_cut(adj, x) || !is_irreducible(adj)) continue;
    ++checked;
    EXPECT_TRUE(diag_similar(adjugate(cut_transpose(a, x)), cut_transpose(adj, x))
                    .has_value());
  }
  EXPECT_GE(checked, 20);
}

}  // namespace
}  // namespace pmeq

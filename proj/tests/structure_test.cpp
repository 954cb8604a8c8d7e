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

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace pmeq {
namespace {

using namespace pmeq::testing;

TEST(Structure, CyclicMatrixIsOneBlock) {
  auto blocks = irreducible_blocks(intro_a()).blocks;
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(blocks[0], (IndexSet{1, 2, 3, 4, 5, 6}));
}

TEST(Structure, UpperTriangularTwoByTwo) {
  auto blocks = irreducible_blocks(Matrix::from_ints(Q(), {{1, 1}, {0, 1}})).blocks;
  EXPECT_EQ(blocks, (std::vector<IndexSet>{{1}, {2}}));
  // Lower triangular: 2 -> 1 only, so {2} comes first.
  blocks = irreducible_blocks(Matrix::from_ints(Q(), {{1, 0}, {1, 1}})).blocks;
  EXPECT_EQ(blocks, (std::vector<IndexSet>{{2}, {1}}));
}

TEST(Structure, BlockUpperTriangularConstruction) {
  std::mt19937_64 rng(31);
  Field f = Q();
  for (int t = 0; t < 20; ++t) {
    Matrix m(f, 6, 6);
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) {
        const bool same = (i < 3) == (j < 3);
        if (same || (i < 3 && j >= 3)) m(i, j) = rand_nonzero(f, rng);
      }
    }
    auto blocks = irreducible_blocks(m).blocks;
    EXPECT_EQ(blocks, (std::vector<IndexSet>{{1, 2, 3}, {4, 5, 6}}));
    // Relabel so the lower-label block is the sink: order must follow edges.
    Matrix r = m.relabeled({4, 5, 6, 1, 2, 3}, {4, 5, 6, 1, 2, 3});
    blocks = irreducible_blocks(r).blocks;
    EXPECT_EQ(blocks, (std::vector<IndexSet>{{4, 5, 6}, {1, 2, 3}}));
  }
}

TEST(Structure, BlocksAreUpperTriangularOnRandomSparse) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 50; ++t) {
    Matrix m = rand_matrix(Q(), 7, 7, rng, 0.75);
    auto blocks = irreducible_blocks(m).blocks;
    std::size_t total = 0;
    for (auto& b : blocks) total += b.size();
    EXPECT_EQ(total, 7u);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      EXPECT_TRUE(is_irreducible(principal_submatrix(m, blocks[i])));
      for (std::size_t j = i + 1; j < blocks.size(); ++j) {
        EXPECT_TRUE(m.block(blocks[j], blocks[i]).is_zero());
      }
    }
  }
}

TEST(Structure, PartitionCompatibility) {
  Matrix a = intro_a();
  auto same = partition_compatible(a, a);
  EXPECT_TRUE(same.compatible);
  auto intro = partition_compatible(intro_a(), intro_b());
  EXPECT_TRUE(intro.compatible);
  EXPECT_EQ(intro.blocks.size(), 1u);

  Matrix x = Matrix::from_ints(Q(), {{1, 2, 0}, {3, 1, 0}, {0, 0, 1}});
  Matrix y = Matrix::from_ints(Q(), {{1, 0, 0}, {0, 1, 2}, {0, 3, 1}});
  EXPECT_EQ(irreducible_blocks(x).blocks.size(), 2u);
  EXPECT_EQ(irreducible_blocks(y).blocks.size(), 2u);
  EXPECT_FALSE(partition_compatible(x, y).compatible);
}

TEST(Structure, DiagSimilarRecoversConjugation) {
  std::mt19937_64 rng(41);
  for (Field f : {Q(), Field::prime(101)}) {
    for (int t = 0; t < 30; ++t) {
      Matrix a = rand_matrix(f, 5, 5, rng, 0.4);
      std::vector<Element> d;
      for (int i = 0; i < 5; ++i) d.push_back(rand_nonzero(f, rng));
      Matrix b = diag_conjugate(a, d);
      auto w = diag_similar(a, b);
      ASSERT_TRUE(w.has_value());
      EXPECT_FALSE(w->transposed);
      EXPECT_EQ(apply_witness(a, *w), b);
      for (auto& x : w->d) EXPECT_FALSE(x.is_zero());
    }
  }
}

TEST(Structure, DiagSimilarOnDisplayedFourByFour) {
  // tw(B2, {b,c}) and A2 of the 5x5 example, labels b..e = 2..5.
  Field f = Q();
  std::vector<Label> l{2, 3, 4, 5};
  Matrix a2 = Matrix::from_ints(
      f, {{1, -1, -1, -1}, {2, 2, 1, 1}, {4, -2, 3, 4}, {-2, 1, 5, 6}}, l);
  std::vector<Element> e;
  auto r = [&](long n, long d) { return f.from_rational(mpq_class(n, d)); };
  for (auto v : {r(1, 1), r(2, 1), r(-1, 1), r(-1, 1), r(-1, 1), r(2, 1), r(-1, 2),
                 r(-1, 2), r(4, 1), r(4, 1), r(3, 1), r(4, 1), r(-2, 1), r(-2, 1),
                 r(5, 1), r(6, 1)}) {
    e.push_back(v);
  }
  Matrix twisted(f, 4, 4, e, l, l);
  auto w = diag_similar(twisted, a2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(apply_witness(twisted, *w), a2);
  // The inverse direction is witnessed by diag(1, -1/2, 1, 1).
  auto back = diag_similar(a2, twisted);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(back->d[0].to_string(), "1");
  EXPECT_EQ(back->d[1].to_string(), "-1/2");
  EXPECT_EQ(back->d[2].to_string(), "1");
  EXPECT_EQ(back->d[3].to_string(), "1");
}

TEST(Structure, DiagSimilarRejectsDifferentPatterns) {
  EXPECT_FALSE(diag_similar(Matrix::identity(Q(), 2),
                            Matrix::from_ints(Q(), {{1, 1}, {0, 1}})).has_value());
}

TEST(Structure, DiagEquivalentUsesTranspose) {
  Matrix a1 = principal_submatrix(five_a(), {1, 2, 3});
  Matrix b1 = principal_submatrix(five_b(), {1, 2, 3});
  auto w = diag_equivalent(a1, b1);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->transposed);
  EXPECT_EQ(apply_witness(a1, *w), b1);

  auto self = diag_equivalent(a1, a1);
  ASSERT_TRUE(self.has_value());
  for (auto& x : self->d) EXPECT_TRUE(x.is_one());
}

// Exhaustive search over D with entries in GF(5)^*.
bool brute_force_diag_equivalent(const Matrix& a, const Matrix& b) {
  const Field f = a.field();
  const std::size_t n = a.rows();
  std::vector<int> idx(n, 1);
  while (true) {
    std::vector<Element> d;
    for (int v : idx) d.push_back(f.from_int(v));
    if (diag_conjugate(a, d) == b || diag_conjugate(a.transpose(), d) == b) {
      return true;
    }
    std::size_t i = 0;
    while (i < n && ++idx[i] == 5) idx[i++] = 1;
    if (i == n) return false;
  }
}

TEST(Structure, DiagEquivalentMatchesExhaustiveSearch) {
  std::mt19937_64 rng(43);
  Field f = Field::prime(5);
  int positives = 0;
  for (int t = 0; t < 200; ++t) {
    Matrix a = rand_matrix(f, 3, 3, rng, 0.2);
    Matrix b = rand_matrix(f, 3, 3, rng, 0.2);
    if (t % 2 == 0) {
      std::vector<Element> d;
      for (int i = 0; i < 3; ++i) d.push_back(rand_nonzero(f, rng));
      b = diag_conjugate(t % 4 == 0 ? a : a.transpose(), d);
    }
    const bool expected = brute_force_diag_equivalent(a, b);
    auto w = diag_equivalent(a, b);
    ASSERT_EQ(w.has_value(), expected);
    if (w) {
      ++positives;
      EXPECT_EQ(apply_witness(a, *w), b);
    }
  }
  EXPECT_GE(positives, 100);
}

TEST(Structure, DiagSimilarityIsAnEquivalenceRelation) {
  std::mt19937_64 rng(47);
  Field f = Q();
  for (int t = 0; t < 20; ++t) {
    Matrix a = rand_matrix(f, 4, 4, rng, 0.3);
    std::vector<Element> d1, d2;
    for (int i = 0; i < 4; ++i) {
      d1.push_back(rand_nonzero(f, rng));
      d2.push_back(rand_nonzero(f, rng));
    }
    Matrix b = diag_conjugate(a, d1);
    Matrix c = diag_conjugate(b, d2);
    EXPECT_TRUE(diag_similar(a, a).has_value());
    EXPECT_TRUE(diag_similar(b, a).has_value());
    EXPECT_TRUE(diag_similar(a, c).has_value());
  }
}

TEST(Structure, LabelMismatchIsAnError) {
  Matrix a = intro_a();
  Matrix b = a.relabeled({1, 2, 3, 4, 5, 7}, {1, 2, 3, 4, 5, 7});
  try {
    diag_similar(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLabelMismatch);
  }
}

}  // namespace
}  // namespace pmeq

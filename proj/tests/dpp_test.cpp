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

#include "pmeq/dpp.hpp"

#include <gtest/gtest.h>

#include <random>

#include "pmeq/errors.hpp"
#include "test_util.hpp"

namespace pmeq {
namespace {

using namespace pmeq::testing;

TEST(Dpp, SubsetProbability) {
  std::mt19937_64 rng(307);
  Kernel k(rand_matrix(Q(), 4, 4, rng));
  EXPECT_EQ(subset_probability(k, {}), Q().one());
  EXPECT_EQ(subset_probability(k, {1, 3}),
            k.k(0, 0) * k.k(2, 2) - k.k(0, 2) * k.k(2, 0));
  Matrix d = Matrix::from_ints(Q(), {{2, 0}, {0, 7}});
  EXPECT_EQ(subset_probability(Kernel(d), {2}), Q().from_int(7));
  EXPECT_THROW(subset_probability(k, {5}), Error);
  EXPECT_THROW(Kernel(Matrix(Q(), 2, 3)), Error);
}

TEST(Dpp, RationalKernelEntries) {
  Matrix m = Matrix::from_ints(Q(), {{1, 0}, {0, 1}});
  m(0, 0) = Q().from_rational(mpq_class(1, 2));
  m(0, 1) = Q().from_rational(mpq_class(1, 4));
  m(1, 0) = Q().from_rational(mpq_class(-1, 4));
  m(1, 1) = Q().from_rational(mpq_class(1, 3));
  EXPECT_EQ(subset_probability(Kernel(m), {1, 2}),
            Q().from_rational(mpq_class(1, 6) + mpq_class(1, 16)));
}

bool same_process(const Kernel& a, const Kernel& b) {
  const std::size_t n = a.k.rows();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    IndexSet j;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) j.push_back(static_cast<Label>(i + 1));
    }
    if (subset_probability(a, j) != subset_probability(b, j)) return false;
  }
  return true;
}

TEST(Dpp, DiagonalSimilarityAndPerturbation) {
  std::mt19937_64 rng(311);
  for (int t = 0; t < 8; ++t) {
    const std::size_t n = 2 + t % 5;
    Kernel k(rand_matrix(Q(), n, n, rng, 0.2));
    std::vector<Element> d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(rand_nonzero(Q(), rng));
    Kernel similar(diag_conjugate(k.k, d));
    Verdict yes = dpp_equivalent(k, similar);
    EXPECT_TRUE(yes.equivalent) << yes.reason;
    EXPECT_TRUE(same_process(k, similar));

    Matrix bumped = k.k;
    bumped(0, 0) += Q().one();
    Verdict no = dpp_equivalent(k, Kernel(bumped));
    EXPECT_FALSE(no.equivalent);
    EXPECT_EQ(no.refuting_subset, (IndexSet{1}));
  }
}

TEST(Dpp, PlantedCutTransposeKeepsTheProcess) {
  std::mt19937_64 rng(313);
  Kernel k(planted_cut_matrix(Q(), 6, {2, 4, 5}, rng));
  Kernel twisted(cut_transpose(k.k, {2, 4, 5}));
  EXPECT_TRUE(brute_force_pme(k.k, twisted.k).equal);
  Verdict v = dpp_equivalent(k, twisted);
  ASSERT_TRUE(v.equivalent) << v.reason;
  EXPECT_TRUE(verify_certificate(k.k, twisted.k, *v.certificate));
}

TEST(Dpp, VerdictMatchesSubsetProbabilities) {
  std::mt19937_64 rng(317);
  for (int t = 0; t < 12; ++t) {
    const std::size_t n = 4 + t % 3;
    Matrix a = quasi_separable(Q(), n, rng, 0.2);
    Matrix b = pme_partner(a, rng);
    if (t % 2) b = perturb(b, rng);
    EXPECT_EQ(dpp_equivalent(Kernel(a), Kernel(b)).equivalent,
              same_process(Kernel(a), Kernel(b)));
  }
}

}  // namespace
}  // namespace pmeq

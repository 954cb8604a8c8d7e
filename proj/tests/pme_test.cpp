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

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace pmeq {
namespace {

using namespace pmeq::testing;

Certificate hand_certificate() {
  Certificate cert;
  cert.field = Q();
  cert.labels = {1, 2, 3, 4, 5};
  CertificateBlock block;
  block.labels = {1, 2, 3, 4, 5};
  block.cut_sequence = {{1, 2, 3}, {3, 4, 5}};
  block.witness.labels = block.labels;
  block.witness.d.assign(5, Q().one());
  cert.blocks.push_back(block);
  return cert;
}

TEST(Pme, IntroPairIsEquivalent) {
  Verdict v = pme_check(intro_a(), intro_b());
  ASSERT_TRUE(v.equivalent) << v.reason;
  ASSERT_TRUE(v.certificate.has_value());
  std::string why;
  EXPECT_TRUE(verify_certificate(intro_a(), intro_b(), *v.certificate, &why)) << why;
  EXPECT_TRUE(brute_force_pme(intro_a(), intro_b()).equal);
  EXPECT_TRUE(cycle_weight_oracle(intro_a(), intro_b()));
}

TEST(Pme, DiagonalPerturbationIsRefutedBySingleton) {
  Matrix a = five_a();
  Matrix b = a;
  b(0, 0) += Q().one();
  Verdict v = pme_check(a, b);
  EXPECT_FALSE(v.equivalent);
  EXPECT_EQ(v.refuting_subset, (IndexSet{1}));
}

TEST(Pme, HandSequenceOnFiveByFive) {
  EXPECT_EQ(apply_cut_sequence(five_a(), {{1, 2, 3}}), five_mid());
  EXPECT_EQ(apply_cut_sequence(five_a(), {{1, 2, 3}, {3, 4, 5}}), five_b());
  std::string why;
  EXPECT_TRUE(verify_certificate(five_a(), five_b(), hand_certificate(), &why)) << why;
}

TEST(Pme, FiveByFiveProducedCertificateVerifies) {
  Verdict v = pme_check(five_a(), five_b());
  ASSERT_TRUE(v.equivalent) << v.reason;
  std::string why;
  EXPECT_TRUE(verify_certificate(five_a(), five_b(), *v.certificate, &why)) << why;
  EXPECT_LT(v.certificate->blocks[0].cut_sequence.size(), 10u);
}

TEST(Pme, ApplyCutSequenceBasics) {
  EXPECT_EQ(apply_cut_sequence(five_a(), {}), five_a());
  EXPECT_EQ(apply_cut_sequence(five_a(), {{1, 2, 3}, {1, 2, 3}}), five_a());
  try {
    apply_cut_sequence(intro_b(), {{1, 4}, {1, 4}, {1, 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotACut);
    EXPECT_NE(std::string(e.what()).find("entry 2"), std::string::npos);
  }
}

TEST(Pme, TamperedCertificatesAreRejected) {
  Certificate bad = hand_certificate();
  bad.blocks[0].cut_sequence[1] = {1, 4};
  EXPECT_FALSE(verify_certificate(five_a(), five_b(), bad));

  Certificate longer = hand_certificate();
  while (longer.blocks[0].cut_sequence.size() < 10) {
    longer.blocks[0].cut_sequence.insert(longer.blocks[0].cut_sequence.begin(),
                                         {{1, 2}, {1, 2}});
  }
  std::string why;
  EXPECT_EQ(longer.blocks[0].cut_sequence.size(), 10u);
  EXPECT_FALSE(verify_certificate(five_a(), five_b(), longer, &why));
  EXPECT_NE(why.find("twice"), std::string::npos);

  Certificate witness = hand_certificate();
  witness.blocks[0].witness.d[2] = Q().from_int(2);
  EXPECT_FALSE(verify_certificate(five_a(), five_b(), witness));

  Certificate zero = hand_certificate();
  zero.blocks[0].witness.d[0] = Q().zero();
  EXPECT_FALSE(verify_certificate(five_a(), five_b(), zero));

  Certificate split = hand_certificate();
  split.blocks[0].labels = {1, 2, 3};
  EXPECT_FALSE(verify_certificate(five_a(), five_b(), split));
}

TEST(Pme, NonsingularShift) {
  Field f = Q();
  DiagonalShift zero = nonsingular_shift(Matrix(f, 3, 3));
  EXPECT_EQ(zero.d[0], f.one());  // det = a^3 vanishes at 0
  Matrix minus_i = Matrix::identity(f, 3);
  for (std::size_t i = 0; i < 3; ++i) minus_i(i, i) = f.from_int(-1);
  // 0 gives det(-I) = -1 != 0.
  EXPECT_TRUE(nonsingular_shift(minus_i).d[0].is_zero());
  Matrix singular_at_one = minus_i;
  singular_at_one(0, 0) = f.zero();
  EXPECT_EQ(nonsingular_shift(singular_at_one).d[0], f.from_int(2));

  std::mt19937_64 rng(107);
  Field p = Field::prime(101);
  for (int t = 0; t < 10; ++t) {
    Matrix a = rand_matrix(p, 4, 4, rng, 0.5);
    DiagonalShift s = nonsingular_shift(a);
    Matrix shifted = a;
    for (std::size_t i = 0; i < 4; ++i) shifted(i, i) += s.d[i];
    EXPECT_FALSE(cofactor_det(shifted).is_zero());
  }
}

TEST(Pme, AdjugateEntryShift) {
  std::mt19937_64 rng(109);
  for (int t = 0; t < 10; ++t) {
    Matrix a = quasi_separable(Q(), 5, rng, 0.3);
    if (!is_irreducible(a)) continue;
    for (Label i = 1; i <= 5; ++i) {
      DiagonalShift s = adjugate_entry_shift(a, i, i);
      Matrix shifted = a;
      for (std::size_t k = 0; k < 5; ++k) shifted(k, k) += s.d[k];
      EXPECT_FALSE(adjugate(shifted)(i - 1, i - 1).is_zero());
    }
  }
  // Path 1 -> 2 -> 3 -> 4 on the cycle: zero at 2, 3, 4.
  DiagonalShift s = adjugate_entry_shift(intro_a(), 1, 4);
  for (std::size_t k : {1u, 2u, 3u}) EXPECT_TRUE(s.d[k].is_zero());
  Matrix shifted = intro_a();
  for (std::size_t k = 0; k < 6; ++k) shifted(k, k) += s.d[k];
  EXPECT_FALSE(adjugate(shifted)(0, 3).is_zero());

  Matrix ones = Matrix::from_ints(Q(), {{1, 1}, {1, 1}});
  DiagonalShift two = adjugate_entry_shift(ones, 1, 2);
  Matrix m = ones;
  m(0, 0) += two.d[0];
  m(1, 1) += two.d[1];
  EXPECT_EQ(adjugate(m)(0, 1), Q().from_int(-1));
}

TEST(Pme, CombineShiftsGivesNonzeroAdjugates) {
  std::mt19937_64 rng(113);
  for (int t = 0; t < 6; ++t) {
    const std::size_t n = 4 + t % 3;
    Matrix a = quasi_separable(Q(), n, rng, 0.3);
    if (!is_irreducible(a)) continue;
    Matrix b = pme_partner(a, rng);
    if (!is_irreducible(b)) continue;
    ShiftResult r = combine_shifts(a, b);
    for (const auto& e : r.a_adj.entries()) EXPECT_FALSE(e.is_zero());
    for (const auto& e : r.b_adj.entries()) EXPECT_FALSE(e.is_zero());
    EXPECT_EQ(all_cuts(a), all_cuts(r.a_adj));
    EXPECT_EQ(brute_force_pme(a, b).equal, brute_force_pme(r.a_adj, r.b_adj).equal);
  }
}

TEST(Pme, CombineShiftsOnSparseCycleNeedsInterpolation) {
  ShiftResult r = combine_shifts(intro_a(), intro_b());
  EXPECT_GE(r.candidate_index, 74u);
  for (const auto& e : r.a_adj.entries()) EXPECT_FALSE(e.is_zero());
}

TEST(Pme, CombineShiftsRejectsSmallFields) {
  try {
    combine_shifts(intro_a(Field::prime(101)), intro_b(Field::prime(101)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFieldTooSmall);
  }
}

TEST(Pme, MinCutSizeTwoOnPreprocessedIntroPair) {
  // The raw pair has zero off-diagonal entries; work on the adjugates.
  ShiftResult r = combine_shifts(intro_a(), intro_b());
  ASSERT_TRUE(is_cut(r.a_adj, {1, 2}));
  ASSERT_FALSE(is_cut(r.b_adj, {1, 2}));
  auto x = min_cut_size_two(r.a_adj, r.b_adj, {1, 2});
  ASSERT_TRUE(x.has_value());
  EXPECT_TRUE(is_cut(cut_transpose(r.b_adj, *x), {1, 2}));
}

TEST(Pme, MinCutSizeTwoRejectsDifferingMinor) {
  ShiftResult r = combine_shifts(intro_a(), intro_b());
  Matrix b = r.b_adj;
  b(0, 2) += Q().one();  // changes the minor on {1,2,3}
  if (b(0, 2).is_zero()) b(0, 2) += Q().one();
  EXPECT_FALSE(min_cut_size_two(r.a_adj, b, {1, 2}).has_value());
}

TEST(Pme, FindingCutSequenceTrivialCases) {
  std::mt19937_64 rng(127);
  Matrix a = planted_cut_matrix(Q(), 6, {1, 2, 3}, rng);
  SequenceSearch self = finding_cut_sequence(a, a);
  ASSERT_TRUE(self.found);
  EXPECT_TRUE(self.sequence.empty());
  for (auto& e : self.witness->d) EXPECT_TRUE(e.is_one());

  std::vector<Element> d;
  for (int i = 0; i < 6; ++i) d.push_back(rand_nonzero(Q(), rng));
  Matrix b = diag_conjugate(a, d);
  SequenceSearch conj = finding_cut_sequence(a, b);
  ASSERT_TRUE(conj.found);
  EXPECT_TRUE(conj.sequence.empty());
  EXPECT_EQ(apply_witness(a, *conj.witness), b);

  try {
    finding_cut_sequence(intro_a(), intro_b());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(Pme, FindingCutSequenceOnFiveByFive) {
  SequenceSearch s = finding_cut_sequence(five_a(), five_b());
  ASSERT_TRUE(s.found) << s.reason;
  EXPECT_LT(s.sequence.size(), 10u);
  EXPECT_EQ(apply_witness(apply_cut_sequence(five_a(), s.sequence), *s.witness),
            five_b());
}

void check_against_oracle(const Matrix& a, const Matrix& b) {
  OracleResult oracle = brute_force_pme(a, b);
  Verdict v = pme_check(a, b);
  ASSERT_EQ(v.equivalent, oracle.equal) << v.reason << "\nA=\n"
                                        << a.to_string() << "B=\n"
                                        << b.to_string();
  if (v.equivalent) {
    std::string why;
    EXPECT_TRUE(verify_certificate(a, b, *v.certificate, &why)) << why;
    for (const auto& block : v.certificate->blocks) {
      EXPECT_LT(block.cut_sequence.size(), 2 * block.labels.size());
    }
  } else if (v.refuting_subset) {
    EXPECT_NE(determinant(principal_submatrix(a, *v.refuting_subset)),
              determinant(principal_submatrix(b, *v.refuting_subset)));
  }
}

TEST(Pme, AgreesWithOracleOverRationals) {
  std::mt19937_64 rng(131);
  for (int t = 0; t < 24; ++t) {
    const std::size_t n = 4 + t % 4;
    Matrix a = quasi_separable(Q(), n, rng, t % 4 == 3 ? 0.4 : 0.0);
    Matrix b = pme_partner(a, rng);
    if (t % 2) b = perturb(b, rng);
    check_against_oracle(a, b);
  }
}

TEST(Pme, AgreesWithOracleOverPrimeField) {
  std::mt19937_64 rng(137);
  Field f = Field::prime(101);
  for (int t = 0; t < 16; ++t) {
    const std::size_t n = 4 + t % 3;
    Matrix a = quasi_separable(f, n, rng, t % 4 == 3 ? 0.4 : 0.0);
    Matrix b = pme_partner(a, rng);
    if (t % 2) b = perturb(b, rng);
    check_against_oracle(a, b);
  }
}

TEST(Pme, EnlargementKeepsGf2Verdicts) {
  std::mt19937_64 rng(139);
  Field f = Field::prime(2);
  for (int t = 0; t < 8; ++t) {
    Matrix a = quasi_separable(f, 4 + t % 2, rng, 0.2);
    Matrix b = pme_partner(a, rng);
    if (t % 2) b = perturb(b, rng);
    check_against_oracle(a, b);
  }
}

TEST(Pme, ReducibleInputs) {
  // Block upper triangular with blocks {1,2} and {3}.
  Matrix a = Matrix::from_ints(Q(), {{1, 2, 5}, {3, 4, 6}, {0, 0, 7}});
  Matrix b = Matrix::from_ints(Q(), {{1, 3, 0}, {2, 4, 0}, {9, 8, 7}});
  check_against_oracle(a, b);
  EXPECT_TRUE(pme_check(a, b).equivalent);
  Matrix c = Matrix::from_ints(Q(), {{1, 1, 0}, {5, 4, 0}, {9, 8, 7}});
  check_against_oracle(a, c);
  EXPECT_FALSE(pme_check(a, c).equivalent);
}

TEST(Pme, TransposeIsAlwaysEquivalent) {
  std::mt19937_64 rng(149);
  for (int t = 0; t < 10; ++t) {
    Matrix a = rand_matrix(Q(), 5, 5, rng, 0.3);
    EXPECT_TRUE(brute_force_pme(a, a.transpose()).equal);
    check_against_oracle(a, a.transpose());
  }
}

TEST(Pme, CycleOracleAgreesWithMinors) {
  std::mt19937_64 rng(151);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 3 + t % 4;
    Matrix a = quasi_separable(Q(), n, rng, 0.3);
    Matrix b = n >= 4 ? pme_partner(a, rng) : a.transpose();
    if (t % 2) b = perturb(b, rng);
    EXPECT_EQ(cycle_weight_oracle(a, b), brute_force_pme(a, b).equal);
  }
  Matrix d1 = Matrix::from_ints(Q(), {{1, 0}, {0, 2}});
  Matrix d2 = Matrix::from_ints(Q(), {{1, 0}, {0, 3}});
  EXPECT_TRUE(cycle_weight_oracle(d1, d1));
  EXPECT_FALSE(cycle_weight_oracle(d1, d2));
}

TEST(Pme, DeterministicCertificates) {
  Verdict a = pme_check(five_a(), five_b());
  Verdict b = pme_check(five_a(), five_b());
  ASSERT_TRUE(a.equivalent && b.equivalent);
  EXPECT_EQ(a.certificate->blocks[0].cut_sequence, b.certificate->blocks[0].cut_sequence);
  EXPECT_EQ(a.certificate->blocks[0].witness.d, b.certificate->blocks[0].witness.d);
}

TEST(Pme, BruteForceLimits) {
  Matrix big = Matrix::identity(Q(), 15);
  try {
    brute_force_pme(big, big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
  EXPECT_THROW(cycle_weight_oracle(Matrix::identity(Q(), 9), Matrix::identity(Q(), 9)),
               Error);
}

}  // namespace
}  // namespace pmeq

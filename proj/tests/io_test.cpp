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

#include "pmeq/io.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "pmeq/errors.hpp"
#include "test_util.hpp"

namespace pmeq {
namespace {

using namespace pmeq::testing;

MatrixFile parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

ErrorCode parse_error(const std::string& text) {
  try {
    parse_text(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

TEST(Io, FieldHeaders) {
  EXPECT_EQ(parse_field_header("field rational"), Q());
  EXPECT_EQ(parse_field_header("field gf 101"), Field::prime(101));
  Field f8 = parse_field_header("field gf 2^3 [1 1 0 1]");
  EXPECT_EQ(f8, Field::extension(2, {1, 1, 0, 1}));
  EXPECT_EQ(parse_field_header(f8.header()), f8);
  EXPECT_EQ(parse_field_header("field gf 2^3"), Field::extension(2, {1, 1, 0, 1}));
  EXPECT_EQ(parse_field_header("field gf 7^1"), Field::prime(7));
  EXPECT_THROW(parse_field_header("field gf 100"), Error);
  EXPECT_THROW(parse_field_header("field gf 2^2 [1 1 1 1]"), Error);
  EXPECT_THROW(parse_field_header("field gf 2^2 [1 0 1]"), Error);  // reducible
  EXPECT_THROW(parse_field_header("field real"), Error);
  EXPECT_THROW(parse_field_header("rational"), Error);
}

TEST(Io, Elements) {
  EXPECT_EQ(parse_element(Q(), "-3/6"), Q().from_rational(mpq_class(-1, 2)));
  EXPECT_EQ(parse_element(Q(), "+4"), Q().from_int(4));
  Field f = Field::prime(7);
  EXPECT_EQ(parse_element(f, "-1"), f.from_int(6));
  EXPECT_EQ(parse_element(f, "1/2"), f.from_int(4));
  EXPECT_THROW(parse_element(f, "1/7"), Error);
  EXPECT_THROW(parse_element(Q(), "1/0"), Error);
  EXPECT_THROW(parse_element(Q(), "1.5"), Error);
  EXPECT_THROW(parse_element(Q(), "[1,2]"), Error);
  Field f8 = Field::extension(2, {1, 1, 0, 1});
  EXPECT_EQ(parse_element(f8, "[0,1]"), f8.from_coefficients({0, 1}));
  EXPECT_EQ(parse_element(f8, "[1, 0, 3]"), f8.from_coefficients({1, 0, 1}));
  EXPECT_THROW(parse_element(f8, "[1,0,0,1]"), Error);
}

TEST(Io, MatrixRoundTrips) {
  std::mt19937_64 rng(401);
  Field f8 = Field::extension(2, {1, 1, 0, 1});
  for (Field f : {Q(), Field::prime(101), f8}) {
    Matrix m = rand_matrix(f, 4, 4, rng, 0.3);
    MatrixFile back = parse_text(format_matrix(m));
    EXPECT_EQ(back.matrix, m);
    EXPECT_TRUE(back.label_names.empty());
  }
  Matrix relabeled = five_a().relabeled({10, 20, 30, 40, 50}, {10, 20, 30, 40, 50});
  EXPECT_EQ(parse_text(format_matrix(relabeled)).matrix, relabeled);
}

TEST(Io, NamedLabels) {
  MatrixFile mf = parse_text(
      "# 5x5 example\nfield rational\n5 labels a b c d e\n"
      "1 3 1 1 1\n2 1 -1 -1 -1\n1 2 2 1 1\n2 4 -2 3 4\n-1 -2 1 5 6\n");
  EXPECT_EQ(mf.matrix, five_a());
  EXPECT_EQ(mf.label_names, (std::vector<std::string>{"a", "b", "c", "d", "e"}));
  EXPECT_EQ(format_labels({1, 3}, mf.matrix.labels(), mf.label_names), "{a,c}");
  EXPECT_EQ(format_labels({1, 3}, mf.matrix.labels(), {}), "{1,3}");
  EXPECT_EQ(parse_text(format_matrix(mf.matrix, mf.label_names)).label_names,
            mf.label_names);
}

TEST(Io, MatrixParseErrors) {
  EXPECT_EQ(parse_error("field rational\n2\n1 1/0\n0 1\n"), ErrorCode::kParse);
  EXPECT_EQ(parse_error("field rational\n2\n1 1\n0\n"), ErrorCode::kParse);
  EXPECT_EQ(parse_error("field rational\n2\n1 1\n0 1\n3 3\n"), ErrorCode::kParse);
  EXPECT_EQ(parse_error("field rational\n2\n1 1\n"), ErrorCode::kParse);
  EXPECT_EQ(parse_error("field rational\nx\n"), ErrorCode::kParse);
  EXPECT_EQ(parse_error("field rational\n2 labels a a\n1 0\n0 1\n"), ErrorCode::kParse);
  EXPECT_EQ(parse_error("field rational\n2 names a b\n1 0\n0 1\n"), ErrorCode::kParse);
  EXPECT_EQ(parse_error("field gf 4\n1\n1\n"), ErrorCode::kInvalidField);
  try {
    parse_text("field rational\n2\n1 2\n3 1/0\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

TEST(Io, PencilRoundTrip) {
  std::mt19937_64 rng(409);
  for (Field f : {Q(), Field::prime(101)}) {
    RankOnePencil p = rand_pencil(f, 3, 4, false, rng);
    std::istringstream in(format_pencil(p));
    RankOnePencil back = parse_pencil(in);
    EXPECT_EQ(back.a0, p.a0);
    ASSERT_EQ(back.m(), p.m());
    for (std::size_t j = 0; j < p.m(); ++j) {
      EXPECT_EQ(back.terms[j].u, p.terms[j].u);
      EXPECT_EQ(back.terms[j].v, p.terms[j].v);
    }
  }
}

TEST(Io, PencilMatrixTerms) {
  std::istringstream ok("field rational\n2\n1\n1 0\n0 1\nmatrix:\n1 2\n2 4\n");
  RankOnePencil p = parse_pencil(ok);
  EXPECT_EQ(p.evaluate({Q().one()}), Matrix::from_ints(Q(), {{2, 2}, {2, 5}}));
  std::istringstream bad("field rational\n2 2\n0 0\n0 0\nu: 1 0 v: 0 1\nmatrix:\n1 0\n0 1\n");
  try {
    parse_pencil(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRankTooHigh);
    EXPECT_NE(std::string(e.what()).find("term 2"), std::string::npos);
  }
  std::istringstream wrong("field rational\n2 1\n0 0\n0 0\nu: 1 0 v: 0\n");
  EXPECT_THROW(parse_pencil(wrong), Error);
}

TEST(Io, CertificateRoundTrip) {
  Verdict v = pme_check(intro_a(), intro_b());
  ASSERT_TRUE(v.equivalent);
  const std::string text = certificate_to_json(*v.certificate);
  Certificate back = certificate_from_json(text);
  EXPECT_EQ(certificate_to_json(back), text);
  EXPECT_TRUE(verify_certificate(intro_a(), intro_b(), back));
  ASSERT_TRUE(back.preprocessing_shift.has_value());
  EXPECT_EQ(back.preprocessing_shift->d, v.certificate->preprocessing_shift->d);

  Field f = Field::prime(2);
  std::mt19937_64 rng(419);
  Matrix a = quasi_separable(f, 5, rng, 0.2);
  Matrix b = pme_partner(a, rng);
  Verdict w = pme_check(a, b);
  ASSERT_TRUE(w.equivalent);
  Certificate gf2 = certificate_from_json(certificate_to_json(*w.certificate));
  EXPECT_TRUE(verify_certificate(a, b, gf2));
}

TEST(Io, CertificateErrors) {
  EXPECT_THROW(certificate_from_json("{"), Error);
  EXPECT_THROW(certificate_from_json("{\"format\": \"other\", \"version\": 1}"), Error);
  EXPECT_THROW(certificate_from_json(
                   "{\"format\": \"pmeq-certificate\", \"version\": 1, \"field\": "
                   "\"field gf 9\", \"labels\": [], \"blocks\": []}"),
               Error);
}

}  // namespace
}  // namespace pmeq

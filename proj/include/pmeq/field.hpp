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

// Exact scalar fields: the rationals, prime fields GF(p) and extensions
// GF(p^k) = GF(p)[x]/(f) for a monic irreducible f.
//
// Field is a cheap handle to an interned, immutable description; two handles
// compare equal iff they describe the same field. Element is a value tagged
// with its field. Mixing elements of different fields raises FieldMismatch.

#ifndef PMEQ_FIELD_HPP_
#define PMEQ_FIELD_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pmeq/errors.hpp"

namespace pmeq {

enum class FieldKind { kRational, kPrime, kExtension };

namespace detail {
struct FieldData;
}  // namespace detail

class Element;

class Field {
 public:
  // Largest admissible characteristic (exclusive).
  static constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 32;

  static Field rationals();
  // Throws InvalidField unless p is a prime below kMaxPrime.
  static Field prime(std::uint64_t p);
  // `modulus` lists coefficients low-to-high and must be monic of degree
  // k >= 2 and irreducible over GF(p). Degree 1 moduli collapse to prime(p).
  static Field extension(std::uint64_t p, std::vector<std::uint64_t> modulus);

  FieldKind kind() const;
  bool is_finite() const { return kind() != FieldKind::kRational; }
  // 0 for the rationals.
  std::uint64_t characteristic() const;
  // Extension degree k (1 for prime fields, 0 for the rationals).
  int degree() const;
  // Modulus coefficients low-to-high; empty unless kind() == kExtension.
  const std::vector<std::uint64_t>& modulus() const;
  // p^k, or nullopt for the rationals.
  std::optional<mpz_class> cardinality() const;
  // True when the field has at least `count` elements.
  bool has_at_least(const mpz_class& count) const;

  // Canonical header line, e.g. "field gf 2^3 [1 1 0 1]".
  std::string header() const;

  Element zero() const;
  Element one() const;
  Element from_int(long value) const;
  Element from_rational(const mpq_class& value) const;
  // Extension element from a coefficient list (low-to-high, length <= k).
  Element from_coefficients(const std::vector<std::uint64_t>& coeffs) const;

  // The index-th element of the canonical enumeration: integers 0,1,2,...
  // (rationals), residues (prime) or base-p counting order (extension).
  Element point(const mpz_class& index) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.data_ == b.data_;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

  const detail::FieldData* data() const { return data_; }

 private:
  explicit Field(const detail::FieldData* data) : data_(data) {}
  const detail::FieldData* data_;
};

class Element {
 public:
  using Coefficients = std::vector<std::uint64_t>;

  Element(Field field, mpq_class value);
  Element(Field field, std::uint64_t residue);
  Element(Field field, Coefficients coeffs);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  const Coefficients& coefficients() const {
    return std::get<Coefficients>(value_);
  }

  Element operator-() const;
  Element inverse() const;  // throws DivisionByZero on zero

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Element& other);
  Element& operator/=(const Element& other);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Element& b) { return a *= b; }
  friend Element operator/(Element a, const Element& b) { return a /= b; }

  // Throws FieldMismatch when the fields differ.
  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) {
    return !(a == b);
  }

  // "p/q" or an integer (rationals), an integer (prime), "[c0,c1,...]"
  // with trailing zeros trimmed (extension).
  std::string to_string() const;

 private:
  void check_same_field(const Element& other) const;

  Field field_;
  std::variant<mpq_class, std::uint64_t, Coefficients> value_;
};

enum class ArithOp { kAdd, kSub, kMul, kDiv };

// Single entry point mirroring the four field operations.
Element arith(const Element& a, const Element& b, ArithOp op);

// GF(p^k) with the least k such that p^k >= min_size; prime(p) when k = 1.
// The modulus is the smallest monic irreducible of degree k.
Field build_extension(std::uint64_t p, const mpz_class& min_size);

// First `count` points of the canonical enumeration. FieldTooSmall when the
// field has fewer than `count` elements.
std::vector<Element> enumerate_points(Field field, std::size_t count);

bool is_prime(std::uint64_t p);

// Polynomials over GF(p) as low-to-high coefficient vectors, trimmed.
namespace gfp {
using Poly = std::vector<std::uint64_t>;
bool is_irreducible(const Poly& f, std::uint64_t p);
// Smallest monic irreducible polynomial of the given degree.
Poly smallest_irreducible(std::uint64_t p, int degree);
}  // namespace gfp

// Maps elements of `from` into `to`. Supported: identity, GF(p) into any
// GF(p^k), and GF(p^a) into GF(p^b) when a divides b (via a root of the
// smaller modulus found in the larger field).
class FieldEmbedding {
 public:
  FieldEmbedding(Field from, Field to);
  Field source() const { return from_; }
  Field target() const { return to_; }
  Element operator()(const Element& x) const;

 private:
  Field from_;
  Field to_;
  std::optional<Element> root_;  // image of x for extension sources
};

// Smallest field containing `field` (as a subfield) with more than
// `threshold` elements; `field` itself when it is already large enough.
Field enlarge_field(Field field, const mpz_class& threshold);

}  // namespace pmeq

#endif  // PMEQ_FIELD_HPP_

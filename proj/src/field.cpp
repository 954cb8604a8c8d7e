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

#include "pmeq/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>
#include <utility>

namespace pmeq {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kFieldTooSmall: return "FieldTooSmall";
    case ErrorCode::kInvalidField: return "InvalidField";
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kLabelMismatch: return "LabelMismatch";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kDuplicatePoint: return "DuplicatePoint";
    case ErrorCode::kNotACut: return "NotACut";
    case ErrorCode::kZeroBlock: return "ZeroBlock";
    case ErrorCode::kNotIrreducible: return "NotIrreducible";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kRankTooHigh: return "RankTooHigh";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Error";
}

namespace detail {

struct FieldData {
  FieldKind kind;
  std::uint64_t p = 0;
  int k = 0;
  std::vector<std::uint64_t> modulus;
  std::optional<mpz_class> cardinality;
  std::string header;
};

}  // namespace detail

namespace {

using detail::FieldData;
using Key = std::tuple<int, std::uint64_t, std::vector<std::uint64_t>>;

const FieldData* intern(FieldKind kind, std::uint64_t p,
                        std::vector<std::uint64_t> modulus) {
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<FieldData>> registry;
  std::lock_guard<std::mutex> lock(mu);
  Key key{static_cast<int>(kind), p, modulus};
  auto it = registry.find(key);
  if (it != registry.end()) return it->second.get();

  auto data = std::make_unique<FieldData>();
  data->kind = kind;
  data->p = p;
  data->modulus = std::move(modulus);
  std::ostringstream header;
  switch (kind) {
    case FieldKind::kRational:
      header << "field rational";
      break;
    case FieldKind::kPrime:
      data->k = 1;
      data->cardinality = mpz_class(std::to_string(p));
      header << "field gf " << p;
      break;
    case FieldKind::kExtension: {
      data->k = static_cast<int>(data->modulus.size()) - 1;
      mpz_class card;
      mpz_ui_pow_ui(card.get_mpz_t(), p, static_cast<unsigned long>(data->k));
      data->cardinality = card;
      header << "field gf " << p << "^" << data->k << " [";
      for (std::size_t i = 0; i < data->modulus.size(); ++i) {
        if (i) header << ' ';
        header << data->modulus[i];
      }
      header << "]";
      break;
    }
  }
  data->header = header.str();
  const FieldData* raw = data.get();
  registry.emplace(std::move(key), std::move(data));
  return raw;
}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;  // a, b < 2^32
}
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  return mod_pow(a, p - 2, p);
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
  mpz_class r = v % mpz_class(std::to_string(p));
  if (r < 0) r += mpz_class(std::to_string(p));
  return std::stoull(r.get_str());
}

}  // namespace

// ---------------------------------------------------------------------------
// GF(p)[x]

namespace gfp {
namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod_sub(a[i], b[i], p);
  trim(a);
  return a;
}

Poly rem(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = mod_inv(f.back(), p);
  while (!a.empty() && a.size() - 1 >= df) {
    const std::size_t shift = a.size() - 1 - df;
    const std::uint64_t c = mod_mul(a.back(), lead_inv, p);
    for (std::size_t j = 0; j <= df; ++j) {
      a[shift + j] = mod_sub(a[shift + j], mod_mul(c, f[j], p), p);
    }
    trim(a);
  }
  return a;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = mod_add(r[i + j], mod_mul(a[i], b[j], p), p);
    }
  }
  return rem(std::move(r), f, p);
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r{1};
  base = rem(std::move(base), f, p);
  while (e) {
    if (e & 1) r = mul_mod(r, base, f, p);
    base = mul_mod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_irreducible(const Poly& f, std::uint64_t p) {
  if (f.size() < 2) return false;
  const int k = static_cast<int>(f.size()) - 1;
  if (k == 1) return true;
  Poly h{0, 1};  // x
  const Poly x{0, 1};
  for (int i = 1; i <= k / 2; ++i) {
    h = pow_mod(h, p, f, p);  // x^(p^i) mod f
    Poly g = gcd(f, sub(h, x, p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

Poly smallest_irreducible(std::uint64_t p, int degree) {
  if (degree < 1) throw Error(ErrorCode::kInvalidArgument, "degree < 1");
  Poly f(static_cast<std::size_t>(degree) + 1, 0);
  f.back() = 1;
  while (true) {
    if (is_irreducible(f, p)) return f;
    // Increment c0 + c1 p + ... in base p.
    int i = 0;
    while (i < degree) {
      if (++f[i] < p) break;
      f[i] = 0;
      ++i;
    }
    if (i == degree) break;
  }
  throw Error(ErrorCode::kInvalidField, "no irreducible polynomial found");
}

}  // namespace gfp

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Field

Field Field::rationals() { return Field(intern(FieldKind::kRational, 0, {})); }

Field Field::prime(std::uint64_t p) {
  if (p >= kMaxPrime || !is_prime(p)) {
    throw Error(ErrorCode::kInvalidField,
                std::to_string(p) + " is not a supported prime");
  }
  return Field(intern(FieldKind::kPrime, p, {}));
}

Field Field::extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  Field base = prime(p);
  if (modulus.size() < 2 || modulus.back() != 1) {
    throw Error(ErrorCode::kInvalidField, "modulus must be monic of degree >= 1");
  }
  for (auto c : modulus) {
    if (c >= p) throw Error(ErrorCode::kInvalidField, "modulus coefficient >= p");
  }
  if (modulus.size() == 2) return base;
  if (!gfp::is_irreducible(modulus, p)) {
    throw Error(ErrorCode::kInvalidField, "modulus is reducible");
  }
  return Field(intern(FieldKind::kExtension, p, std::move(modulus)));
}

FieldKind Field::kind() const { return data_->kind; }
std::uint64_t Field::characteristic() const { return data_->p; }
int Field::degree() const { return data_->k; }
const std::vector<std::uint64_t>& Field::modulus() const {
  return data_->modulus;
}
std::optional<mpz_class> Field::cardinality() const {
  return data_->cardinality;
}
bool Field::has_at_least(const mpz_class& count) const {
  return !data_->cardinality || *data_->cardinality >= count;
}
std::string Field::header() const { return data_->header; }

Element Field::zero() const { return from_int(0); }
Element Field::one() const { return from_int(1); }

Element Field::from_int(long value) const {
  switch (kind()) {
    case FieldKind::kRational:
      return Element(*this, mpq_class(value));
    case FieldKind::kPrime:
      return Element(*this, reduce_mpz(mpz_class(value), data_->p));
    case FieldKind::kExtension: {
      Element::Coefficients c(static_cast<std::size_t>(data_->k), 0);
      c[0] = reduce_mpz(mpz_class(value), data_->p);
      return Element(*this, std::move(c));
    }
  }
  return zero();
}

Element Field::from_rational(const mpq_class& value) const {
  if (kind() == FieldKind::kRational) return Element(*this, value);
  const std::uint64_t num = reduce_mpz(value.get_num(), data_->p);
  const std::uint64_t den = reduce_mpz(value.get_den(), data_->p);
  if (den == 0) {
    throw Error(ErrorCode::kDivisionByZero,
                "denominator vanishes in characteristic " +
                    std::to_string(data_->p));
  }
  return from_int(
      static_cast<long>(mod_mul(num, mod_inv(den, data_->p), data_->p)));
}

Element Field::from_coefficients(const std::vector<std::uint64_t>& coeffs) const {
  if (kind() == FieldKind::kRational) {
    throw Error(ErrorCode::kFieldMismatch, "coefficient vector over the rationals");
  }
  if (coeffs.size() > static_cast<std::size_t>(data_->k)) {
    throw Error(ErrorCode::kInvalidArgument, "too many coefficients");
  }
  for (auto c : coeffs) {
    if (c >= data_->p) {
      throw Error(ErrorCode::kInvalidArgument, "coefficient out of range");
    }
  }
  if (kind() == FieldKind::kPrime) {
    return Element(*this, coeffs.empty() ? std::uint64_t{0} : coeffs[0]);
  }
  Element::Coefficients c(coeffs);
  c.resize(static_cast<std::size_t>(data_->k), 0);
  return Element(*this, std::move(c));
}

Element Field::point(const mpz_class& index) const {
  if (index < 0 || (data_->cardinality && index >= *data_->cardinality)) {
    throw Error(ErrorCode::kFieldTooSmall, "point index out of range");
  }
  switch (kind()) {
    case FieldKind::kRational:
      return Element(*this, mpq_class(index));
    case FieldKind::kPrime:
      return Element(*this, static_cast<std::uint64_t>(std::stoull(index.get_str())));
    case FieldKind::kExtension: {
      Element::Coefficients c(static_cast<std::size_t>(data_->k), 0);
      mpz_class rest = index;
      const mpz_class p(std::to_string(data_->p));
      for (auto& digit : c) {
        mpz_class r = rest % p;
        digit = std::stoull(r.get_str());
        rest /= p;
      }
      return Element(*this, std::move(c));
    }
  }
  return zero();
}

// ---------------------------------------------------------------------------
// Element

Element::Element(Field field, mpq_class value) : field_(field) {
  if (field.kind() != FieldKind::kRational) {
    throw Error(ErrorCode::kFieldMismatch, "rational value for a finite field");
  }
  value.canonicalize();
  value_ = std::move(value);
}

Element::Element(Field field, std::uint64_t residue) : field_(field) {
  if (field.kind() != FieldKind::kPrime) {
    throw Error(ErrorCode::kFieldMismatch, "residue for a non-prime field");
  }
  value_ = residue % field.characteristic();
}

Element::Element(Field field, Coefficients coeffs) : field_(field) {
  if (field.kind() != FieldKind::kExtension ||
      coeffs.size() != static_cast<std::size_t>(field.degree())) {
    throw Error(ErrorCode::kFieldMismatch, "bad extension coefficients");
  }
  for (auto& c : coeffs) c %= field.characteristic();
  value_ = std::move(coeffs);
}

void Element::check_same_field(const Element& other) const {
  if (field_ != other.field_) {
    throw Error(ErrorCode::kFieldMismatch,
                field_.header() + " vs " + other.field_.header());
  }
}

bool Element::is_zero() const {
  switch (field_.kind()) {
    case FieldKind::kRational:
      return sgn(rational()) == 0;
    case FieldKind::kPrime:
      return residue() == 0;
    case FieldKind::kExtension:
      for (auto c : coefficients()) {
        if (c) return false;
      }
      return true;
  }
  return false;
}

bool Element::is_one() const {
  switch (field_.kind()) {
    case FieldKind::kRational:
      return rational() == 1;
    case FieldKind::kPrime:
      return residue() == 1;
    case FieldKind::kExtension: {
      const auto& c = coefficients();
      if (c[0] != 1) return false;
      for (std::size_t i = 1; i < c.size(); ++i) {
        if (c[i]) return false;
      }
      return true;
    }
  }
  return false;
}

Element Element::operator-() const {
  const std::uint64_t p = field_.characteristic();
  switch (field_.kind()) {
    case FieldKind::kRational:
      return Element(field_, mpq_class(-rational()));
    case FieldKind::kPrime:
      return Element(field_, mod_sub(0, residue(), p));
    case FieldKind::kExtension: {
      Coefficients c = coefficients();
      for (auto& x : c) x = mod_sub(0, x, p);
      return Element(field_, std::move(c));
    }
  }
  return *this;
}

Element& Element::operator+=(const Element& other) {
  check_same_field(other);
  const std::uint64_t p = field_.characteristic();
  switch (field_.kind()) {
    case FieldKind::kRational:
      std::get<mpq_class>(value_) += other.rational();
      break;
    case FieldKind::kPrime:
      value_ = mod_add(residue(), other.residue(), p);
      break;
    case FieldKind::kExtension: {
      auto& c = std::get<Coefficients>(value_);
      const auto& d = other.coefficients();
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_add(c[i], d[i], p);
      break;
    }
  }
  return *this;
}

Element& Element::operator-=(const Element& other) {
  check_same_field(other);
  const std::uint64_t p = field_.characteristic();
  switch (field_.kind()) {
    case FieldKind::kRational:
      std::get<mpq_class>(value_) -= other.rational();
      break;
    case FieldKind::kPrime:
      value_ = mod_sub(residue(), other.residue(), p);
      break;
    case FieldKind::kExtension: {
      auto& c = std::get<Coefficients>(value_);
      const auto& d = other.coefficients();
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_sub(c[i], d[i], p);
      break;
    }
  }
  return *this;
}

namespace {

Element::Coefficients ext_mul(const Element::Coefficients& a,
                              const Element::Coefficients& b,
                              const std::vector<std::uint64_t>& f,
                              std::uint64_t p) {
  const std::size_t k = a.size();
  std::vector<std::uint64_t> r(2 * k - 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < k; ++j) {
      r[i + j] = mod_add(r[i + j], mod_mul(a[i], b[j], p), p);
    }
  }
  // f is monic: x^k = -(f0 + ... + f_{k-1} x^{k-1}).
  for (std::size_t i = 2 * k - 2; i >= k; --i) {
    const std::uint64_t c = r[i];
    if (c) {
      for (std::size_t j = 0; j < k; ++j) {
        r[i - k + j] = mod_sub(r[i - k + j], mod_mul(c, f[j], p), p);
      }
    }
    r[i] = 0;
  }
  r.resize(k);
  return r;
}

Element::Coefficients ext_inv(const Element::Coefficients& a,
                              const std::vector<std::uint64_t>& f,
                              std::uint64_t p) {
  // Extended Euclid on (f, a) tracking the cofactor of a.
  using gfp::Poly;
  auto trim = [](Poly& x) {
    while (!x.empty() && x.back() == 0) x.pop_back();
  };
  Poly r0 = f, r1 = a, s0{}, s1{1};
  trim(r1);
  if (r1.empty()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  while (r1.size() > 1) {
    // r0 = q r1 + r
    Poly q(r0.size() - r1.size() + 1, 0);
    Poly r = r0;
    const std::uint64_t lead_inv = mod_inv(r1.back(), p);
    while (!r.empty() && r.size() >= r1.size()) {
      const std::size_t shift = r.size() - r1.size();
      const std::uint64_t c = mod_mul(r.back(), lead_inv, p);
      q[shift] = c;
      for (std::size_t j = 0; j < r1.size(); ++j) {
        r[shift + j] = mod_sub(r[shift + j], mod_mul(c, r1[j], p), p);
      }
      trim(r);
    }
    // s = s0 - q s1
    Poly qs(q.size() + s1.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = 0; j < s1.size(); ++j) {
        qs[i + j] = mod_add(qs[i + j], mod_mul(q[i], s1[j], p), p);
      }
    }
    Poly s = s0;
    if (s.size() < qs.size()) s.resize(qs.size(), 0);
    for (std::size_t i = 0; i < qs.size(); ++i) s[i] = mod_sub(s[i], qs[i], p);
    trim(s);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw Error(ErrorCode::kDivisionByZero, "not invertible");
  }
  const std::uint64_t c = mod_inv(r1[0], p);
  Element::Coefficients out(a.size(), 0);
  for (std::size_t i = 0; i < s1.size() && i < out.size(); ++i) {
    out[i] = mod_mul(s1[i], c, p);
  }
  return out;
}

}  // namespace

Element& Element::operator*=(const Element& other) {
  check_same_field(other);
  const std::uint64_t p = field_.characteristic();
  switch (field_.kind()) {
    case FieldKind::kRational:
      std::get<mpq_class>(value_) *= other.rational();
      break;
    case FieldKind::kPrime:
      value_ = mod_mul(residue(), other.residue(), p);
      break;
    case FieldKind::kExtension:
      value_ = ext_mul(coefficients(), other.coefficients(), field_.modulus(), p);
      break;
  }
  return *this;
}

Element Element::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  const std::uint64_t p = field_.characteristic();
  switch (field_.kind()) {
    case FieldKind::kRational:
      return Element(field_, mpq_class(1 / rational()));
    case FieldKind::kPrime:
      return Element(field_, mod_inv(residue(), p));
    case FieldKind::kExtension:
      return Element(field_, ext_inv(coefficients(), field_.modulus(), p));
  }
  return *this;
}

Element& Element::operator/=(const Element& other) {
  check_same_field(other);
  if (other.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero");
  if (field_.kind() == FieldKind::kRational) {
    std::get<mpq_class>(value_) /= other.rational();
    return *this;
  }
  return *this *= other.inverse();
}

bool operator==(const Element& a, const Element& b) {
  a.check_same_field(b);
  return a.value_ == b.value_;
}

std::string Element::to_string() const {
  switch (field_.kind()) {
    case FieldKind::kRational:
      return rational().get_str();
    case FieldKind::kPrime:
      return std::to_string(residue());
    case FieldKind::kExtension: {
      const auto& c = coefficients();
      std::size_t len = c.size();
      while (len > 1 && c[len - 1] == 0) --len;
      std::string out = "[";
      for (std::size_t i = 0; i < len; ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
      }
      return out + "]";
    }
  }
  return {};
}

Element arith(const Element& a, const Element& b, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return a + b;
    case ArithOp::kSub: return a - b;
    case ArithOp::kMul: return a * b;
    case ArithOp::kDiv: return a / b;
  }
  return a;
}

Field build_extension(std::uint64_t p, const mpz_class& min_size) {
  Field base = Field::prime(p);
  if (min_size < 2) throw Error(ErrorCode::kInvalidArgument, "min_size < 2");
  int k = 1;
  mpz_class size(std::to_string(p));
  const mpz_class pz(std::to_string(p));
  while (size < min_size) {
    size *= pz;
    ++k;
  }
  if (k == 1) return base;
  return Field::extension(p, gfp::smallest_irreducible(p, k));
}

std::vector<Element> enumerate_points(Field field, std::size_t count) {
  if (!field.has_at_least(mpz_class(std::to_string(count)))) {
    throw Error(ErrorCode::kFieldTooSmall,
                "cannot enumerate " + std::to_string(count) + " points of " +
                    field.header());
  }
  std::vector<Element> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(field.point(mpz_class(std::to_string(i))));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Embeddings

namespace {

// Dense polynomials over an arbitrary field, low-to-high and trimmed.
using EPoly = std::vector<Element>;

void etrim(EPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

EPoly erem(EPoly a, const EPoly& f) {
  etrim(a);
  const Element lead_inv = f.back().inverse();
  while (!a.empty() && a.size() >= f.size()) {
    const std::size_t shift = a.size() - f.size();
    const Element c = a.back() * lead_inv;
    for (std::size_t j = 0; j < f.size(); ++j) a[shift + j] -= c * f[j];
    a.pop_back();
    etrim(a);
  }
  return a;
}

EPoly emul_mod(const EPoly& a, const EPoly& b, const EPoly& f, Field field) {
  if (a.empty() || b.empty()) return {};
  EPoly r(a.size() + b.size() - 1, field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return erem(std::move(r), f);
}

EPoly epow_mod(EPoly base, mpz_class e, const EPoly& f, Field field) {
  EPoly r{field.one()};
  base = erem(std::move(base), f);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = emul_mod(r, base, f, field);
    base = emul_mod(base, base, f, field);
    e >>= 1;
  }
  return r;
}

EPoly egcd(EPoly a, EPoly b) {
  etrim(a);
  etrim(b);
  while (!b.empty()) {
    EPoly r = erem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Element inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

// A root in `field` of a polynomial that splits there into distinct linear
// factors, found by deterministic equal-degree splitting.
Element split_root(EPoly g, Field field) {
  const mpz_class q = *field.cardinality();
  const std::uint64_t p = field.characteristic();
  mpz_class idx = 1;
  while (g.size() > 2) {
    const Element delta = field.point(idx);
    idx += 1;
    if (idx >= q) idx = 1;
    EPoly h;
    if (p == 2) {
      // Trace of delta*x: sum of (delta x)^(2^i), i < k.
      EPoly t{field.zero(), delta};
      EPoly acc = erem(t, g);
      EPoly cur = acc;
      for (int i = 1; i < field.degree(); ++i) {
        cur = emul_mod(cur, cur, g, field);
        if (acc.size() < cur.size()) acc.resize(cur.size(), field.zero());
        for (std::size_t j = 0; j < cur.size(); ++j) acc[j] += cur[j];
        etrim(acc);
      }
      h = egcd(g, acc);
    } else {
      EPoly t{delta, field.one()};
      EPoly w = epow_mod(t, (q - 1) / 2, g, field);
      if (w.empty()) w.push_back(field.zero());
      w[0] -= field.one();
      etrim(w);
      h = egcd(g, w);
    }
    if (h.size() > 1 && h.size() < g.size()) {
      g = (h.size() - 1 <= (g.size() - 1) / 2) ? std::move(h) : [&] {
        // Keep the smaller factor: g / h.
        EPoly quotient(g.size() - h.size() + 1, field.zero());
        EPoly r = g;
        const Element lead_inv = h.back().inverse();
        while (r.size() >= h.size()) {
          const std::size_t shift = r.size() - h.size();
          const Element c = r.back() * lead_inv;
          quotient[shift] = c;
          for (std::size_t j = 0; j < h.size(); ++j) r[shift + j] -= c * h[j];
          r.pop_back();
          etrim(r);
          if (r.empty()) break;
        }
        etrim(quotient);
        return quotient;
      }();
    }
  }
  return -(g[0] / g[1]);
}

}  // namespace

FieldEmbedding::FieldEmbedding(Field from, Field to) : from_(from), to_(to) {
  if (from == to) return;
  if (from.kind() == FieldKind::kRational || to.kind() == FieldKind::kRational ||
      from.characteristic() != to.characteristic() ||
      to.degree() % from.degree() != 0) {
    throw Error(ErrorCode::kFieldMismatch,
                "no embedding of " + from.header() + " into " + to.header());
  }
  if (from.kind() == FieldKind::kExtension) {
    EPoly f;
    for (auto c : from.modulus()) f.push_back(to.from_int(static_cast<long>(c)));
    root_ = split_root(std::move(f), to);
  }
}

Element FieldEmbedding::operator()(const Element& x) const {
  if (x.field() != from_) {
    throw Error(ErrorCode::kFieldMismatch, "element is not in the source field");
  }
  if (from_ == to_) return x;
  if (from_.kind() == FieldKind::kPrime) {
    return to_.from_int(static_cast<long>(x.residue()));
  }
  // Horner in the image of the generator.
  const auto& c = x.coefficients();
  Element acc = to_.zero();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * *root_ + to_.from_int(static_cast<long>(c[i]));
  }
  return acc;
}

Field enlarge_field(Field field, const mpz_class& threshold) {
  if (!field.is_finite() || *field.cardinality() > threshold) return field;
  const std::uint64_t p = field.characteristic();
  const int base = field.degree();
  int k = base;
  mpz_class size = *field.cardinality();
  mpz_class step;
  mpz_ui_pow_ui(step.get_mpz_t(), p, static_cast<unsigned long>(base));
  while (size <= threshold) {
    size *= step;
    k += base;
  }
  return Field::extension(p, gfp::smallest_irreducible(p, k));
}

}  // namespace pmeq

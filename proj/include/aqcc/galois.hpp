// Copyright 2026 The aqcc Authors
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

#ifndef AQCC_GALOIS_HPP
#define AQCC_GALOIS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aqcc/errors.hpp"

namespace aqcc {

/// Largest field size the library will construct.
inline constexpr std::uint32_t kMaxFieldSize = 1u << 20;
/// Fields up to this size use log/antilog tables for multiplication.
inline constexpr std::uint32_t kMaxTableFieldSize = 1u << 16;

bool is_prime(std::uint64_t v);
std::uint64_t ipow(std::uint64_t base, unsigned exp);
/// Distinct prime factors of v, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);
/// Smallest e >= 1 with base^e = 1 mod n. Requires gcd(base, n) = 1.
std::uint32_t multiplicative_order(std::uint64_t base, std::uint32_t n);

/// Splits q = p^m. Throws PreconditionError when q is not a prime power.
struct PrimePower {
  std::uint32_t p;
  std::uint32_t m;
};
PrimePower split_prime_power(std::uint64_t q);

/// GF(p^m). Elements are integers in [0, q) whose base-p digits are the
/// coefficients of the residue polynomial (digit i = coefficient of x^i).
///
/// The modulus is monic of degree m and primitive, so the residue class of x
/// generates the multiplicative group. Instances are immutable.
class Field {
 public:
  /// Field with the default modulus for (p, m): a user override when one is
  /// registered, otherwise the lexicographically smallest primitive polynomial.
  static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t m);
  /// Field with an explicit modulus (coefficients low to high, monic).
  static std::shared_ptr<const Field> make(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint32_t size() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::string modulus_string() const;

  std::uint32_t primitive() const { return primitive_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    return add_digits(a, b);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    return add_digits(a, neg(b));
  }
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) return exp_[log_[a] + log_[b]];
    return mul_generic(a, b);
  }
  /// Throws PreconditionError on zero.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
  /// a^e with a^0 = 1 (including 0^0). Negative exponents need a != 0.
  std::uint32_t pow(std::uint32_t a, std::int64_t e) const;
  /// primitive()^e.
  std::uint32_t exp(std::int64_t e) const;
  /// Discrete log base primitive(). Throws on zero.
  std::uint32_t log(std::uint32_t a) const;

  /// "0", "1", or "a^j" for j = log(v); prime fields print the integer.
  std::string format(std::uint32_t v) const;

  bool operator==(const Field& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
  }

 private:
  Field(std::uint32_t p, std::vector<std::uint32_t> modulus);
  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul_generic(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t primitive_;
  std::vector<std::uint32_t> exp_;  // length 2(q-1), empty for large fields
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// A field value bound to its field. Mixed-field arithmetic throws.
class FieldElement {
 public:
  FieldElement(FieldPtr field, std::uint32_t value);

  const FieldPtr& field() const { return field_; }
  std::uint32_t value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::int64_t e) const;
  bool operator==(const FieldElement& o) const;

  std::string to_string() const { return field_->format(value_); }

 private:
  void require_same(const FieldElement& o) const;
  FieldPtr field_;
  std::uint32_t value_;
};

/// Checks that a monic polynomial over GF(p) (coefficients low to high) is
/// primitive, i.e. x has multiplicative order p^m - 1 modulo it.
bool is_primitive_polynomial(std::uint32_t p, const std::vector<std::uint32_t>& coeffs);

/// Lexicographically smallest monic primitive polynomial of degree m over GF(p),
/// ordering candidates by their base-p integer encoding.
std::vector<std::uint32_t> smallest_primitive_polynomial(std::uint32_t p, std::uint32_t m);

/// Parses "x^4 + x + 1" style text with integer coefficients mod p.
std::vector<std::uint32_t> parse_prime_polynomial(std::uint32_t p, std::string_view text);

/// Registry of per-(p, m) modulus overrides. The file format is one entry per
/// line, `p m polynomial`, e.g. `2 4 x^4 + x^3 + 1`; `#` starts a comment.
/// The AQCC_MODULUS_TABLE environment variable names a file loaded on first
/// use of the default modulus lookup.
void set_modulus_override(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> coeffs);
void clear_modulus_overrides();
void load_modulus_table(const std::string& path);
void load_modulus_table_text(std::string_view text);
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m);

/// Field containing a primitive n-th root of unity over GF(q), together with
/// the embedding of GF(q) as a subfield.
struct SplittingField {
  std::uint32_t n;
  FieldPtr base;
  FieldPtr ext;
  /// ord_n(q); ext has q^extension_degree elements.
  std::uint32_t extension_degree;
  /// Element of ext with multiplicative order exactly n.
  std::uint32_t alpha;

  std::uint32_t embed(std::uint32_t base_value) const { return embed_[base_value]; }
  /// Inverse of embed. Throws InternalConsistencyError for values outside the subfield.
  std::uint32_t restrict_to_base(std::uint32_t ext_value) const;
  bool in_base(std::uint32_t ext_value) const;

  std::vector<std::uint32_t> embed_;
  std::unordered_map<std::uint32_t, std::uint32_t> restrict_;
};

/// Requires gcd(n, q) = 1 and q^ord_n(q) <= kMaxFieldSize.
SplittingField nth_root_field(std::uint32_t n, std::uint32_t q);

}  // namespace aqcc

#endif  // AQCC_GALOIS_HPP

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

#ifndef AQCC_POLYRING_HPP
#define AQCC_POLYRING_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aqcc/galois.hpp"

namespace aqcc {

/// Degree of the zero polynomial.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

/// Sum of degrees where -inf absorbs everything.
constexpr int degree_sum(int a, int b) {
  return (a == kNegInfDegree || b == kNegInfDegree) ? kNegInfDegree : a + b;
}

/// Polynomial over a Field, coefficients low to high, no trailing zeros.
class Polynomial {
 public:
  explicit Polynomial(FieldPtr field, std::vector<std::uint32_t> coeffs = {});

  static Polynomial zero(FieldPtr field) { return Polynomial(std::move(field)); }
  static Polynomial one(FieldPtr field) { return Polynomial(std::move(field), {1}); }
  static Polynomial monomial(FieldPtr field, std::uint32_t coeff, std::size_t degree);
  /// x^n - 1.
  static Polynomial xn_minus_1(FieldPtr field, std::size_t n);
  /// Parses "x^4 + x + 1"; extension-field coefficients may be written "a^j".
  static Polynomial parse(FieldPtr field, std::string_view text);

  const FieldPtr& field() const { return field_; }
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }
  std::uint32_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  int degree() const { return coeffs_.empty() ? kNegInfDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  std::uint32_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(std::uint32_t c) const;
  /// Divides by the leading coefficient. Zero stays zero.
  Polynomial monic() const;
  /// x^d p(1/x) for d = degree().
  Polynomial reciprocal() const;
  std::uint32_t eval(std::uint32_t x) const;

  bool operator==(const Polynomial& o) const;

  /// "x^4 + x + 1"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void require_same(const Polynomial& o) const;
  void trim();

  FieldPtr field_;
  std::vector<std::uint32_t> coeffs_;
};

/// (quotient, remainder) with deg(remainder) < deg(divisor).
std::pair<Polynomial, Polynomial> div_rem(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& d, const Polynomial& a);

/// Orbit {s q^j mod n}. Members are sorted ascending.
struct CyclotomicCoset {
  std::uint32_t n;
  std::uint32_t q;
  std::uint32_t representative;
  std::vector<std::uint32_t> members;

  std::size_t size() const { return members.size(); }
  bool operator==(const CyclotomicCoset&) const = default;
};

/// Partition of Z_n into q-cyclotomic cosets, sorted by representative.
std::vector<CyclotomicCoset> cyclotomic_cosets(std::uint32_t n, std::uint32_t q);
/// The coset of s.
CyclotomicCoset coset_of(std::uint32_t n, std::uint32_t q, std::uint32_t s);

/// prod_{i in coset} (x - alpha^i) mapped back to GF(q).
Polynomial minimal_polynomial(const SplittingField& sf, const CyclotomicCoset& coset);
Polynomial minimal_polynomial(std::uint32_t n, std::uint32_t q, const CyclotomicCoset& coset);

/// Factors of x^n - 1 over GF(q), one per cyclotomic coset.
std::vector<std::pair<CyclotomicCoset, Polynomial>> factor_xn_minus_1(std::uint32_t n, std::uint32_t q);

/// "1,2,4,8".
std::string format_residues(const std::vector<std::uint32_t>& residues);

}  // namespace aqcc

#endif  // AQCC_POLYRING_HPP

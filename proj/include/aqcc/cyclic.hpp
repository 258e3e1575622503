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

#ifndef AQCC_CYCLIC_HPP
#define AQCC_CYCLIC_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aqcc/galois.hpp"
#include "aqcc/polyring.hpp"

namespace aqcc {

/// Everything shared by the cyclic codes of one (n, q): the splitting field,
/// the coset partition and one minimal polynomial per coset.
struct CodeSpace {
  std::uint32_t n;
  std::uint32_t q;
  SplittingField sf;
  std::vector<CyclotomicCoset> cosets;
  std::vector<Polynomial> minimal;
  /// Residue -> index into cosets.
  std::vector<std::uint32_t> coset_index;

  const FieldPtr& field() const { return sf.base; }
};

/// Cached per (n, q) and the moduli in effect.
std::shared_ptr<const CodeSpace> code_space(std::uint32_t n, std::uint32_t q);

/// Sorted set of residues mod n. Closure under multiplication by q is not
/// enforced here; CyclicCode rejects non-closed sets.
class DefiningSet {
 public:
  DefiningSet(std::uint32_t n, std::uint32_t q, std::vector<std::uint32_t> members);

  std::uint32_t n() const { return n_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(std::uint32_t s) const;
  bool includes(const DefiningSet& o) const;

  /// First member whose q-multiple is missing, if any.
  std::optional<std::uint32_t> first_unclosed() const;
  bool is_closed() const { return !first_unclosed().has_value(); }

  DefiningSet operator|(const DefiningSet& o) const;
  DefiningSet operator&(const DefiningSet& o) const;
  DefiningSet operator-(const DefiningSet& o) const;
  /// {-s mod n}.
  DefiningSet negated() const;
  /// Z_n minus this set.
  DefiningSet complement() const;

  /// "{1,2,4,8}".
  std::string to_string() const;
  bool operator==(const DefiningSet&) const = default;

 private:
  void require_compatible(const DefiningSet& o) const;
  std::uint32_t n_;
  std::uint32_t q_;
  std::vector<std::uint32_t> members_;
};

/// Cyclic code of length n over GF(q) identified by its defining set; the
/// generator polynomial is derived from it.
class CyclicCode {
 public:
  CyclicCode(std::shared_ptr<const CodeSpace> space, DefiningSet t);

  std::uint32_t n() const { return space_->n; }
  std::uint32_t q() const { return space_->q; }
  std::uint32_t k() const { return n() - static_cast<std::uint32_t>(t_.size()); }
  const DefiningSet& defining_set() const { return t_; }
  const Polynomial& generator() const { return g_; }
  /// h = (x^n - 1) / g.
  Polynomial check_polynomial() const;
  const FieldPtr& field() const { return space_->field(); }
  const std::shared_ptr<const CodeSpace>& space() const { return space_; }

  /// Canonical descriptor "q=2 n=15 T={1,2,4,8}".
  std::string descriptor() const;
  /// "[15,11]_2".
  std::string label() const;

  bool operator==(const CyclicCode& o) const { return n() == o.n() && q() == o.q() && t_ == o.t_; }

 private:
  std::shared_ptr<const CodeSpace> space_;
  DefiningSet t_;
  Polynomial g_;
};

/// Rejects sets that are not unions of cyclotomic cosets.
CyclicCode from_defining_set(std::uint32_t n, std::uint32_t q, std::vector<std::uint32_t> members);
CyclicCode from_coset_mask(const std::shared_ptr<const CodeSpace>& space, std::uint64_t mask);
/// The 2^(#cosets) cyclic codes of length n, ordered by coset mask.
std::vector<CyclicCode> all_cyclic_codes(std::uint32_t n, std::uint32_t q);

CyclicCode dual(const CyclicCode& c);
CyclicCode intersect(const CyclicCode& a, const CyclicCode& b);
CyclicCode sum(const CyclicCode& a, const CyclicCode& b);
/// True iff inner is a subcode of outer. Evaluates defining-set inclusion,
/// generator divisibility and check-polynomial divisibility and throws
/// InternalConsistencyError if they disagree.
bool contains(const CyclicCode& outer, const CyclicCode& inner);

/// Defining set = q-closure of {b, ..., b + delta - 2}.
CyclicCode bch(std::uint32_t n, std::uint32_t q, std::uint32_t delta, std::uint32_t b = 1);
/// Length q - 1 Reed-Solomon code.
CyclicCode rs(std::uint32_t q, std::uint32_t delta, std::uint32_t b = 1);
/// Cyclic Hamming code of length (q^m - 1)/(q - 1); needs gcd(m, q - 1) = 1.
CyclicCode hamming(std::uint32_t m, std::uint32_t q);

/// Largest d such that T contains d - 1 consecutive residues a, a+s, ... for
/// some step s coprime to n. Capped at n.
std::uint32_t bch_bound(const CyclicCode& c);

/// Parses `q=2 n=15 T={1,2,4,8}` (spaces or commas between fields) and the
/// shorthands `bch:n=15,q=2,delta=5[,b=1]`, `hamming:m=4,q=2`, `rs:q=8,delta=3[,b=1]`.
CyclicCode parse_code(std::string_view descriptor);
/// Parses a residue list "{3,6,9,12}" or "3,6,9,12".
std::vector<std::uint32_t> parse_residue_list(std::string_view text);

/// Dense row-major matrix over a field.
struct Matrix {
  FieldPtr field;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> data;

  Matrix(FieldPtr f, std::size_t r, std::size_t c) : field(std::move(f)), rows(r), cols(c), data(r * c, 0) {}
  std::uint32_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::span<const std::uint32_t> row(std::size_t r) const { return {data.data() + r * cols, cols}; }
  bool is_zero() const;
};

/// A * B^T. Throws PreconditionError on column mismatch.
Matrix multiply_transpose(const Matrix& a, const Matrix& b);
std::size_t rank(const Matrix& m);

enum class MatrixRole { kGenerator, kParity };

struct CheckMatrix {
  MatrixRole role;
  Matrix matrix;
};

/// k cyclic shifts of g.
CheckMatrix generator_matrix(const CyclicCode& c);
/// n - k shifts of the reversed check polynomial.
CheckMatrix parity_check_matrix(const CyclicCode& c);

/// Coefficients of m(x) g(x), length n. Requires deg m < k.
std::vector<std::uint32_t> encode(const CyclicCode& c, const Polynomial& message);
/// True iff v(alpha^i) = 0 for every i in T.
bool is_codeword(const CyclicCode& c, std::span<const std::uint32_t> v);

}  // namespace aqcc

#endif  // AQCC_CYCLIC_HPP

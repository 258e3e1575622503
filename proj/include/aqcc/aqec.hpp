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

#ifndef AQCC_AQEC_HPP
#define AQCC_AQEC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aqcc/cyclic.hpp"
#include "aqcc/weights.hpp"

namespace aqcc {

struct AqecOptions {
  WeightOptions weights;
  /// Compare distances against the full-code minimum weights. Unset means
  /// "only when n <= 31".
  std::optional<bool> purity;
};

/// Ground-truth logical dimension of an extension construction next to the
/// two closed forms 2k - b - n and 2k + b - n, where k = dim C1.
struct ClosedFormCheck {
  std::int64_t b = 0;
  std::int64_t ground_truth = 0;
  std::int64_t two_k_minus_b_minus_n = 0;
  std::int64_t two_k_plus_b_minus_n = 0;

  bool matches_minus_form() const { return ground_truth == two_k_minus_b_minus_n; }
  bool matches_plus_form() const { return ground_truth == two_k_plus_b_minus_n; }
  std::string describe() const;
};

/// Asymmetric CSS code [[n, k, dz/dx]]_q built from C2^perp ⊆ C1.
struct AqecParams {
  std::uint32_t n;
  std::uint32_t q;
  std::uint32_t k;
  WeightReport dz;
  WeightReport dx;
  /// wt(C1 \ C2^perp) and wt(C2 \ C1^perp); dz/dx are their max/min.
  WeightReport c1_side;
  WeightReport c2_side;
  std::optional<bool> pure;
  CyclicCode c1;
  CyclicCode c2;
  std::string route;
  std::vector<std::string> notes;
  std::optional<ClosedFormCheck> closed_form;

  bool distances_exact() const { return dz.exact() && dx.exact(); }
  /// "[[15,3,5/3]]_2", bound-only distances prefixed with "≥".
  std::string label() const;
  /// The symmetric code [[n, k, dx]]_q obtained from the same pair.
  std::string symmetric_label() const;
};

/// Subsystem code [[n, k, r, dz/dx]]_q.
struct SubsystemParams {
  std::uint32_t n;
  std::uint32_t q;
  std::uint32_t k;
  std::uint32_t r;
  WeightReport dz;
  WeightReport dx;
  std::optional<bool> pure;
  CyclicCode c1;
  CyclicCode c2;
  std::string route;
  std::vector<std::string> notes;

  std::string label() const;
};

struct CorrectionCapability {
  std::uint32_t t_x;
  std::uint32_t t_z;
  /// Set when either distance is only a lower bound.
  bool lower_bound;
};

/// CSS construction. Requires dual(c2) ⊆ c1 (NotNested otherwise). The
/// dimension is computed three ways (dim C1 - dim C2^perp, k1 + k2 - n and
/// |T(C2^perp) \ T(C1)|) and must agree. When k = 0 the set differences are
/// empty and the distances fall back to min_weight(C1) and min_weight(C2);
/// a zero code on either side is a PreconditionError.
/// Distances beyond the budget degrade to bound-only reports.
AqecParams css_aqec(const CyclicCode& c1, const CyclicCode& c2, const AqecOptions& opts = {});

struct StabilizerMatrices {
  /// parity(C1), acting on the X block.
  CheckMatrix hx;
  /// parity(C2), acting on the Z block.
  CheckMatrix hz;
};

StabilizerMatrices build_stabilizer_matrix(const CyclicCode& c1, const CyclicCode& c2);

/// H1 * H2^T == 0.
bool check_css_commutativity(const CheckMatrix& h1, const CheckMatrix& h2);

struct Extension {
  CyclicCode c2;
  AqecParams params;
};

/// C2^perp := <f g1>, C2 := its dual. f must be monic of degree >= 1 and divide
/// h1 = (x^n - 1)/g1.
Extension extend_by_polynomial(const CyclicCode& c1, const Polynomial& f, const AqecOptions& opts = {});

/// T(C2) := T(C1^perp) \ (T ∪ -T) for a coset union T ⊆ T(C1^perp) \ T(C1).
Extension extend_by_defining_set(const CyclicCode& c1, const std::vector<std::uint32_t>& t,
                                 const AqecOptions& opts = {});

CorrectionCapability correction_capability(const AqecParams& a);

/// [[n, k - r, r, dz/dx]]. Requires r <= k.
SubsystemParams aqec_to_subsystem(const AqecParams& a, std::uint32_t r);

/// With C2 = C1 ∩ C1^perp of dimension k2: [[n, n-k1-k2, k1-k2, dz/dx]] and
/// the same code with k and r exchanged. Distances are wt(C2^perp \ C1) and
/// wt(C1^perp \ C2).
std::pair<SubsystemParams, SubsystemParams> subsystem_euclidean(const CyclicCode& c1, const AqecOptions& opts = {});

/// [[n, k-1, r+1, ≥dz/≥dx]]. Requires k > 1.
SubsystemParams trade_dimension(const SubsystemParams& s);

/// [[n, k+r, dz/dx]]. Requires a pure input.
AqecParams subsystem_to_stabilizer(const SubsystemParams& s);

}  // namespace aqcc

#endif  // AQCC_AQEC_HPP

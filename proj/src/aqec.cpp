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

#include "aqcc/aqec.hpp"

#include <algorithm>

namespace aqcc {

namespace {

std::string quantum_label(std::uint32_t n, std::uint32_t k, std::optional<std::uint32_t> r, const WeightReport& dz,
                          const WeightReport& dx, std::uint32_t q) {
  std::string s = "[[" + std::to_string(n) + "," + std::to_string(k) + ",";
  if (r) s += std::to_string(*r) + ",";
  return s + dz.render() + "/" + dx.render() + "]]_" + std::to_string(q);
}

WeightReport difference_or_bound(const CyclicCode& outer, const CyclicCode& inner, const WeightOptions& opts) {
  try {
    return min_weight_difference(outer, inner, opts);
  } catch (const BudgetExceeded&) {
    return bound_only(outer, opts.budget);
  }
}

WeightReport min_weight_or_bound(const CyclicCode& c, const WeightOptions& opts) {
  try {
    return min_weight(c, opts);
  } catch (const BudgetExceeded&) {
    return bound_only(c, opts.budget);
  }
}

std::pair<WeightReport, WeightReport> order_distances(const WeightReport& a, const WeightReport& b) {
  return a.value >= b.value ? std::pair{a, b} : std::pair{b, a};
}

// True/false when both sides equal the full-code minimum weights; nullopt when
// any quantity is not exact.
std::optional<bool> evaluate_purity(const WeightReport& side1, const CyclicCode& full1, const WeightReport& side2,
                                    const CyclicCode& full2, const WeightOptions& opts) {
  if (!side1.exact() || !side2.exact()) return std::nullopt;
  if (full1.k() == 0 || full2.k() == 0) return std::nullopt;
  try {
    const auto m1 = min_weight(full1, opts);
    const auto m2 = min_weight(full2, opts);
    return side1.value == m1.value && side2.value == m2.value;
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

}  // namespace

std::string ClosedFormCheck::describe() const {
  std::string s = "logical dimension " + std::to_string(ground_truth) + " (b = " + std::to_string(b) +
                  "); closed form 2k-b-n gives " + std::to_string(two_k_minus_b_minus_n) + ", 2k+b-n gives " +
                  std::to_string(two_k_plus_b_minus_n);
  if (!matches_minus_form() && !matches_plus_form()) s += "; neither closed form matches";
  return s;
}

std::string AqecParams::label() const { return quantum_label(n, k, std::nullopt, dz, dx, q); }

std::string AqecParams::symmetric_label() const {
  return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + dx.render() + "]]_" + std::to_string(q);
}

std::string SubsystemParams::label() const { return quantum_label(n, k, r, dz, dx, q); }

AqecParams css_aqec(const CyclicCode& c1, const CyclicCode& c2, const AqecOptions& opts) {
  if (c1.n() != c2.n() || c1.q() != c2.q()) {
    throw PreconditionError("CSS pair must share n and q: " + c1.label() + " vs " + c2.label());
  }
  const CyclicCode c1_perp = dual(c1);
  const CyclicCode c2_perp = dual(c2);
  if (!contains(c1, c2_perp)) {
    throw NotNested("C2^perp is not contained in C1 for C1 = " + c1.descriptor() + ", C2 = " + c2.descriptor());
  }
  const std::int64_t n = c1.n();
  const std::int64_t k_by_dims = static_cast<std::int64_t>(c1.k()) - c2_perp.k();
  const std::int64_t k_by_sum = static_cast<std::int64_t>(c1.k()) + c2.k() - n;
  const auto k_by_sets = static_cast<std::int64_t>((c2_perp.defining_set() - c1.defining_set()).size());
  if (k_by_dims != k_by_sum || k_by_dims != k_by_sets || k_by_dims < 0) {
    throw InternalConsistencyError("logical dimension disagrees: dim C1 - dim C2^perp = " + std::to_string(k_by_dims) +
                                   ", k1 + k2 - n = " + std::to_string(k_by_sum) + ", |T(C2^perp) \\ T(C1)| = " +
                                   std::to_string(k_by_sets));
  }

  std::vector<std::string> notes;
  WeightReport side1;
  WeightReport side2;
  if (k_by_dims > 0) {
    side1 = difference_or_bound(c1, c2_perp, opts.weights);
    side2 = difference_or_bound(c2, c1_perp, opts.weights);
  } else {
    if (c1.k() == 0 || c2.k() == 0) {
      throw PreconditionError("k = 0 pair with a zero code has no distances: C1 = " + c1.label() + ", C2 = " +
                              c2.label());
    }
    side1 = min_weight_or_bound(c1, opts.weights);
    side2 = min_weight_or_bound(c2, opts.weights);
    notes.push_back("k = 0: C1 = C2^perp, distances are the minimum weights of C1 and C2");
  }
  auto [dz, dx] = order_distances(side1, side2);
  if (!dz.exact() || !dx.exact()) notes.push_back("distances beyond the enumeration budget are BCH lower bounds");

  std::optional<bool> pure;
  if (opts.purity.value_or(n <= 31)) {
    pure = k_by_dims == 0 ? std::optional<bool>(true) : evaluate_purity(side1, c1, side2, c2, opts.weights);
  }
  return AqecParams{static_cast<std::uint32_t>(n), c1.q(), static_cast<std::uint32_t>(k_by_dims), dz, dx, side1,
                    side2, pure, c1, c2, "css", std::move(notes), std::nullopt};
}

bool check_css_commutativity(const CheckMatrix& h1, const CheckMatrix& h2) {
  if (h1.matrix.cols != h2.matrix.cols) {
    throw PreconditionError("check matrices have " + std::to_string(h1.matrix.cols) + " and " +
                            std::to_string(h2.matrix.cols) + " columns");
  }
  return multiply_transpose(h1.matrix, h2.matrix).is_zero();
}

StabilizerMatrices build_stabilizer_matrix(const CyclicCode& c1, const CyclicCode& c2) {
  if (c1.n() != c2.n() || c1.q() != c2.q() || !contains(c1, dual(c2))) {
    throw NotNested("C2^perp is not contained in C1 for C1 = " + c1.descriptor() + ", C2 = " + c2.descriptor());
  }
  StabilizerMatrices m{parity_check_matrix(c1), parity_check_matrix(c2)};
  if (!check_css_commutativity(m.hx, m.hz)) {
    throw InternalConsistencyError("nested pair produced non-commuting check matrices");
  }
  return m;
}

Extension extend_by_polynomial(const CyclicCode& c1, const Polynomial& f, const AqecOptions& opts) {
  if (!(*f.field() == *c1.field())) throw PreconditionError("f must have coefficients in GF(" + std::to_string(c1.q()) + ")");
  if (f.degree() < 1 || !f.is_monic()) throw PreconditionError("f must be monic of degree >= 1, got " + f.to_string());
  const Polynomial h1 = c1.check_polynomial();
  if (!divides(f, h1)) {
    throw PreconditionError("f = " + f.to_string() + " does not divide h1 = " + h1.to_string() +
                            "; f*g1 would not generate a cyclic code of length " + std::to_string(c1.n()));
  }
  // Roots of f: the cosets outside T(C1) whose minimal polynomials divide f.
  const auto& space = *c1.space();
  std::vector<std::uint32_t> roots;
  Polynomial rebuilt = Polynomial::one(c1.field());
  for (std::size_t i = 0; i < space.cosets.size(); ++i) {
    if (c1.defining_set().contains(space.cosets[i].representative)) continue;
    if (divides(space.minimal[i], f)) {
      roots.insert(roots.end(), space.cosets[i].members.begin(), space.cosets[i].members.end());
      rebuilt = rebuilt * space.minimal[i];
    }
  }
  if (!(rebuilt == f)) throw InternalConsistencyError("f is not the product of its minimal-polynomial factors");

  const CyclicCode c2_perp(c1.space(), c1.defining_set() | DefiningSet(c1.n(), c1.q(), roots));
  if (!(c2_perp.generator() == f * c1.generator())) {
    throw InternalConsistencyError("generator of C2^perp differs from f*g1");
  }
  CyclicCode c2 = dual(c2_perp);
  AqecParams params = css_aqec(c1, c2, opts);
  params.route = "extend-poly";
  ClosedFormCheck cf;
  cf.b = f.degree();
  cf.ground_truth = params.k;
  cf.two_k_minus_b_minus_n = 2 * static_cast<std::int64_t>(c1.k()) - cf.b - c1.n();
  cf.two_k_plus_b_minus_n = 2 * static_cast<std::int64_t>(c1.k()) + cf.b - c1.n();
  if (cf.ground_truth != cf.b) {
    throw InternalConsistencyError("dim C1 - dim C2^perp = " + std::to_string(cf.ground_truth) + " but deg f = " +
                                   std::to_string(cf.b));
  }
  params.closed_form = cf;
  return {std::move(c2), std::move(params)};
}

Extension extend_by_defining_set(const CyclicCode& c1, const std::vector<std::uint32_t>& t, const AqecOptions& opts) {
  const std::uint32_t n = c1.n();
  const DefiningSet ts(n, c1.q(), t);
  if (auto bad = ts.first_unclosed()) {
    throw PreconditionError("T = " + ts.to_string() + " is not a union of cyclotomic cosets (residue " +
                            std::to_string(*bad) + ")");
  }
  const CyclicCode c1_perp = dual(c1);
  const DefiningSet allowed = c1_perp.defining_set() - c1.defining_set();
  if (!allowed.includes(ts)) {
    throw PreconditionError("T = " + ts.to_string() + " must lie inside T(C1^perp) \\ T(C1) = " + allowed.to_string());
  }
  const DefiningSet sym = ts | ts.negated();
  CyclicCode c2(c1.space(), c1_perp.defining_set() - sym);
  const CyclicCode c2_perp = dual(c2);
  if (!(c2_perp.defining_set() == (c1.defining_set() | sym))) {
    throw InternalConsistencyError("T(C2^perp) = " + c2_perp.defining_set().to_string() + " differs from T(C1) ∪ T ∪ -T");
  }
  if (!contains(c1, c2_perp)) throw InternalConsistencyError("extension by defining set lost the nesting C2^perp ⊆ C1");

  AqecParams params = css_aqec(c1, c2, opts);
  params.route = "extend-set";
  ClosedFormCheck cf;
  cf.b = static_cast<std::int64_t>(sym.size());
  cf.ground_truth = params.k;
  cf.two_k_minus_b_minus_n = 2 * static_cast<std::int64_t>(c1.k()) - cf.b - n;
  cf.two_k_plus_b_minus_n = 2 * static_cast<std::int64_t>(c1.k()) + cf.b - n;
  if (cf.ground_truth != cf.b) {
    throw InternalConsistencyError("dim C1 - dim C2^perp = " + std::to_string(cf.ground_truth) + " but |T ∪ -T| = " +
                                   std::to_string(cf.b));
  }
  params.closed_form = cf;
  return {std::move(c2), std::move(params)};
}

CorrectionCapability correction_capability(const AqecParams& a) {
  auto t = [](std::uint32_t d) { return d == 0 ? 0u : (d - 1) / 2; };
  return {t(a.dx.value), t(a.dz.value), !a.distances_exact()};
}

SubsystemParams aqec_to_subsystem(const AqecParams& a, std::uint32_t r) {
  if (r > a.k) {
    throw PreconditionError("gauge dimension r = " + std::to_string(r) + " exceeds k = " + std::to_string(a.k));
  }
  return SubsystemParams{a.n, a.q, a.k - r, r, a.dz, a.dx, a.pure, a.c1, a.c2, a.route + "+gauge", a.notes};
}

std::pair<SubsystemParams, SubsystemParams> subsystem_euclidean(const CyclicCode& c1, const AqecOptions& opts) {
  const CyclicCode c1_perp = dual(c1);
  const CyclicCode c2 = intersect(c1, c1_perp);
  const CyclicCode c2_perp = dual(c2);
  const std::uint32_t n = c1.n();
  const std::uint32_t k1 = c1.k();
  const std::uint32_t k2 = c2.k();
  if (k1 + k2 > n) {
    throw PreconditionError("k1 + k2 = " + std::to_string(k1 + k2) + " exceeds n = " + std::to_string(n));
  }
  std::vector<std::string> notes;
  WeightReport side1;
  WeightReport side2;
  if (k1 + k2 < n) {
    side1 = difference_or_bound(c2_perp, c1, opts.weights);
    side2 = difference_or_bound(c1_perp, c2, opts.weights);
  } else {
    notes.push_back("k1 + k2 = n: C2^perp = C1, distances are the minimum weights of C2^perp and C1^perp");
    side1 = c2_perp.k() ? min_weight_or_bound(c2_perp, opts.weights) : WeightReport{};
    side2 = c1_perp.k() ? min_weight_or_bound(c1_perp, opts.weights) : WeightReport{};
  }
  auto [dz, dx] = order_distances(side1, side2);
  std::optional<bool> pure;
  if (opts.purity.value_or(n <= 31)) {
    pure = k1 + k2 == n ? std::optional<bool>(true) : evaluate_purity(side1, c2_perp, side2, c1_perp, opts.weights);
  }
  SubsystemParams first{n, c1.q(), n - k1 - k2, k1 - k2, dz, dx, pure, c1, c2, "subsystem-euclidean", notes};
  SubsystemParams second = first;
  std::swap(second.k, second.r);
  return {std::move(first), std::move(second)};
}

SubsystemParams trade_dimension(const SubsystemParams& s) {
  if (s.k <= 1) throw PreconditionError("trading needs k > 1, got k = " + std::to_string(s.k));
  SubsystemParams out = s;
  out.k -= 1;
  out.r += 1;
  out.dz.method = DistanceMethod::kBoundOnly;
  out.dx.method = DistanceMethod::kBoundOnly;
  out.route = s.route + "+trade";
  out.notes.push_back("traded one logical dimension for a gauge dimension; distances are lower bounds and purity "
                      "holds up to min{dx, d'}");
  return out;
}

AqecParams subsystem_to_stabilizer(const SubsystemParams& s) {
  if (!s.pure.value_or(false)) {
    throw PreconditionError("only a pure subsystem code converts to a stabilizer code [[n,k+r,dz/dx]]");
  }
  return AqecParams{s.n, s.q, s.k + s.r, s.dz, s.dx, s.dx, s.dz, s.pure, s.c1, s.c2, s.route + "+stabilizer", s.notes,
                    std::nullopt};
}

}  // namespace aqcc

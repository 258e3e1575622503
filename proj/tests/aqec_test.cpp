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

#include <gtest/gtest.h>

#include "aqcc/aqec.hpp"
#include "bridge.hpp"

namespace aqcc {
namespace {

using Residues = std::vector<std::uint32_t>;

TEST(Aqec, CssExamples) {
  auto a = css_aqec(bch(15, 2, 3), bch(15, 2, 5));
  EXPECT_EQ(a.label(), "[[15,3,5/3]]_2");
  EXPECT_EQ(a.symmetric_label(), "[[15,3,3]]_2");
  EXPECT_TRUE(a.distances_exact());
  EXPECT_EQ(a.pure, true);
  EXPECT_EQ(css_aqec(bch(31, 2, 5), bch(31, 2, 7)).label(), "[[31,6,7/5]]_2");
  auto steane = css_aqec(hamming(3, 2), hamming(3, 2));
  EXPECT_EQ(steane.label(), "[[7,1,3/3]]_2");
}

// Distances against the brute-force set differences for every nested pair at n = 15.
TEST(Aqec, DistancesMatchOracle) {
  const auto codes = all_cyclic_codes(15, 2);
  int checked = 0;
  for (const auto& c1 : codes) {
    for (const auto& c2 : codes) {
      if (!contains(c1, dual(c2))) continue;
      if (c1.k() == 0 || c2.k() == 0) {
        EXPECT_THROW(css_aqec(c1, c2), PreconditionError);
        continue;
      }
      auto a = css_aqec(c1, c2, {{}, false});
      const auto w1 = bridge::codewords(c1);
      const auto w2 = bridge::codewords(c2);
      const auto w1p = oracle::dual(w1, 15);
      const auto w2p = oracle::dual(w2, 15);
      EXPECT_EQ(a.k, c1.k() + c2.k() - 15);
      if (a.k == 0) continue;
      const auto s1 = static_cast<std::uint32_t>(oracle::min_weight_outside(w1, w2p, 15));
      const auto s2 = static_cast<std::uint32_t>(oracle::min_weight_outside(w2, w1p, 15));
      EXPECT_EQ(a.dz.value, std::max(s1, s2)) << c1.descriptor() << " | " << c2.descriptor();
      EXPECT_EQ(a.dx.value, std::min(s1, s2)) << c1.descriptor() << " | " << c2.descriptor();
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(Aqec, SwapKeepsDistancePair) {
  auto a = css_aqec(bch(15, 2, 3), bch(15, 2, 5));
  auto b = css_aqec(bch(15, 2, 5), bch(15, 2, 3));
  EXPECT_EQ(a.k, b.k);
  EXPECT_EQ(a.dz.value, b.dz.value);
  EXPECT_EQ(a.dx.value, b.dx.value);
}

TEST(Aqec, ZeroDimension) {
  auto c1 = from_defining_set(15, 2, {0, 1, 2, 4, 5, 8, 10});
  auto a = css_aqec(c1, bch(15, 2, 5));
  EXPECT_EQ(a.label(), "[[15,0,5/4]]_2");
  EXPECT_FALSE(a.notes.empty());
}

TEST(Aqec, NotNested) {
  EXPECT_THROW(css_aqec(bch(15, 2, 5), bch(15, 2, 5)), NotNested);
  EXPECT_THROW(css_aqec(bch(15, 2, 3), bch(31, 2, 3)), PreconditionError);
  EXPECT_THROW(build_stabilizer_matrix(bch(15, 2, 5), bch(15, 2, 5)), NotNested);
}

TEST(Aqec, BoundOnlyFallback) {
  auto a = css_aqec(bch(127, 2, 5), bch(127, 2, 15));
  EXPECT_EQ(a.k, 64u);
  EXPECT_FALSE(a.dz.exact());
  EXPECT_FALSE(a.dx.exact());
  EXPECT_EQ(a.dz.value, 15u);
  EXPECT_EQ(a.dx.value, 5u);
  EXPECT_EQ(a.label(), "[[127,64,≥15/≥5]]_2");
  EXPECT_FALSE(a.pure.has_value());
  EXPECT_TRUE(correction_capability(a).lower_bound);
}

TEST(Aqec, StabilizerMatrices) {
  auto m = build_stabilizer_matrix(bch(15, 2, 3), bch(15, 2, 5));
  EXPECT_EQ(m.hx.matrix.rows, 4u);
  EXPECT_EQ(m.hz.matrix.rows, 8u);
  EXPECT_TRUE(check_css_commutativity(m.hx, m.hz));
  auto s = build_stabilizer_matrix(hamming(3, 2), hamming(3, 2));
  EXPECT_EQ(s.hx.matrix.rows, 3u);
  auto full = build_stabilizer_matrix(from_defining_set(7, 2, {}), hamming(3, 2));
  EXPECT_EQ(full.hx.matrix.rows, 0u);
  EXPECT_TRUE(check_css_commutativity(full.hx, full.hz));

  auto f2 = Field::make(2, 1);
  Matrix h(f2, 2, 3);
  h.at(0, 0) = h.at(0, 1) = 1;
  h.at(1, 1) = h.at(1, 2) = 1;
  CheckMatrix hm{MatrixRole::kParity, h};
  EXPECT_FALSE(check_css_commutativity(hm, hm));
  CheckMatrix wide{MatrixRole::kParity, Matrix(f2, 1, 4)};
  EXPECT_THROW(check_css_commutativity(hm, wide), PreconditionError);
}

TEST(Aqec, ExtendByPolynomialExamples) {
  auto ham = hamming(4, 2);
  auto f = minimal_polynomial(15, 2, coset_of(15, 2, 3));
  auto ext = extend_by_polynomial(ham, f);
  EXPECT_EQ(dual(ext.c2), bch(15, 2, 5));
  EXPECT_EQ(ext.c2.k(), 8u);
  EXPECT_EQ(ext.params.k, 4u);
  ASSERT_TRUE(ext.params.closed_form.has_value());
  EXPECT_EQ(ext.params.closed_form->ground_truth, 4);
  EXPECT_EQ(ext.params.closed_form->two_k_minus_b_minus_n, 3);
  EXPECT_EQ(ext.params.closed_form->two_k_plus_b_minus_n, 11);

  auto h7 = hamming(3, 2);
  auto ext7 = extend_by_polynomial(h7, Polynomial::parse(h7.field(), "x + 1"));
  EXPECT_EQ(dual(ext7.c2).k(), 3u);
  EXPECT_EQ(ext7.params.k, 1u);

  EXPECT_THROW(extend_by_polynomial(ham, Polynomial::parse(ham.field(), "x^4 + x + 1")), PreconditionError);
  EXPECT_THROW(extend_by_polynomial(ham, Polynomial::one(ham.field())), PreconditionError);
}

TEST(Aqec, ExtendByDefiningSetExamples) {
  auto ham = from_defining_set(15, 2, {1, 2, 4, 8});
  auto ext = extend_by_defining_set(ham, {3, 6, 9, 12});
  EXPECT_EQ(ext.c2.defining_set().members(), (Residues{0, 1, 2, 4, 5, 8, 10}));
  EXPECT_EQ(ext.c2.k(), 8u);
  EXPECT_EQ(dual(ext.c2), bch(15, 2, 5));
  EXPECT_EQ(ext.params.k, 4u);

  auto empty = extend_by_defining_set(ham, {});
  EXPECT_EQ(empty.params.k, 0u);
  EXPECT_EQ(empty.c2, dual(ham));

  // The coset of 15 is -{1,2,4,8,16}, which lies outside T(C1^perp).
  auto c31 = bch(31, 2, 3);
  EXPECT_THROW(extend_by_defining_set(c31, coset_of(31, 2, 15).members), PreconditionError);
  auto coset3 = coset_of(31, 2, 3).members;
  auto e31 = extend_by_defining_set(c31, coset3);
  const auto sym = DefiningSet(31, 2, coset3) | DefiningSet(31, 2, coset3).negated();
  EXPECT_EQ(sym.size(), 10u);
  EXPECT_EQ(e31.params.k, sym.size());

  EXPECT_THROW(extend_by_defining_set(ham, {1, 2, 4, 8}), PreconditionError);
  EXPECT_THROW(extend_by_defining_set(ham, {3, 6}), PreconditionError);
}

// Both extension routes agree whenever roots(f) = T ∪ -T, for every C1 at n = 15.
TEST(Aqec, CrossRouteEquality) {
  const auto space = code_space(15, 2);
  int compared = 0;
  for (const auto& c1 : all_cyclic_codes(15, 2)) {
    const auto allowed = dual(c1).defining_set() - c1.defining_set();
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < space->cosets.size(); ++i) {
      if (allowed.contains(space->cosets[i].representative)) free.push_back(i);
    }
    for (std::uint32_t mask = 1; mask < (1u << free.size()); ++mask) {
      Residues t;
      for (std::size_t j = 0; j < free.size(); ++j) {
        if (mask >> j & 1) t.insert(t.end(), space->cosets[free[j]].members.begin(), space->cosets[free[j]].members.end());
      }
      const auto by_set = extend_by_defining_set(c1, t);
      const DefiningSet ts(15, 2, t);
      const auto sym = ts | ts.negated();
      Polynomial f = Polynomial::one(c1.field());
      for (std::size_t i = 0; i < space->cosets.size(); ++i) {
        if (sym.contains(space->cosets[i].representative)) f = f * space->minimal[i];
      }
      const auto by_poly = extend_by_polynomial(c1, f);
      EXPECT_EQ(by_set.c2, by_poly.c2);
      EXPECT_EQ(by_set.params.k, by_poly.params.k);
      EXPECT_EQ(by_set.params.dz, by_poly.params.dz);
      EXPECT_EQ(by_set.params.dx, by_poly.params.dx);
      EXPECT_EQ(by_set.params.k, c1.k() - dual(by_set.c2).k());
      ++compared;
    }
  }
  EXPECT_GT(compared, 0);
}

// Enlarging C2^perp inside C1 (dropping a coset from its defining set) never raises k.
TEST(Aqec, MonotoneInC2Perp) {
  const auto space = code_space(15, 2);
  for (const auto& c1 : all_cyclic_codes(15, 2)) {
    for (const auto& c2 : all_cyclic_codes(15, 2)) {
      const auto c2p = dual(c2);
      if (!contains(c1, c2p) || c1.k() == 0 || c2.k() == 0) continue;
      const auto k = css_aqec(c1, c2, {{}, false}).k;
      for (const auto& coset : space->cosets) {
        if (!c2p.defining_set().contains(coset.representative) || c1.defining_set().contains(coset.representative)) {
          continue;
        }
        const CyclicCode bigger(space, c2p.defining_set() - DefiningSet(15, 2, coset.members));
        if (dual(bigger).k() == 0) continue;
        EXPECT_LE(css_aqec(c1, dual(bigger), {{}, false}).k, k);
      }
    }
  }
}

TEST(Aqec, CorrectionCapability) {
  auto a = css_aqec(bch(15, 2, 3), bch(15, 2, 5));
  auto cap = correction_capability(a);
  EXPECT_EQ(cap.t_x, 1u);
  EXPECT_EQ(cap.t_z, 2u);
  EXPECT_FALSE(cap.lower_bound);
  auto b = css_aqec(bch(31, 2, 3), bch(31, 2, 15));
  EXPECT_EQ(correction_capability(b).t_z, 7u);
  auto c = css_aqec(bch(31, 2, 5), bch(31, 2, 7));
  EXPECT_EQ(correction_capability(c).t_x, 2u);
  EXPECT_EQ(correction_capability(c).t_z, 3u);
}

TEST(Aqec, GaugeSubsystem) {
  auto a = css_aqec(bch(15, 2, 3), bch(15, 2, 5));
  EXPECT_EQ(aqec_to_subsystem(a, 0).label(), "[[15,3,0,5/3]]_2");
  EXPECT_EQ(aqec_to_subsystem(a, 2).label(), "[[15,1,2,5/3]]_2");
  EXPECT_THROW(aqec_to_subsystem(a, 4), PreconditionError);
}

TEST(Aqec, SubsystemEuclidean) {
  auto c1 = bch(15, 2, 5);
  auto [s, t] = subsystem_euclidean(c1);
  EXPECT_EQ(s.c2.defining_set().members(), (Residues{0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12}));
  EXPECT_EQ(s.k, 4u);
  EXPECT_EQ(s.r, 3u);
  EXPECT_EQ(t.k, 3u);
  EXPECT_EQ(t.r, 4u);
  EXPECT_TRUE(s.dz.exact());

  // Oracle distances: wt(C2^perp \ C1) and wt(C1^perp \ C2).
  const auto w1 = bridge::codewords(c1);
  const auto w2 = bridge::codewords(s.c2);
  const auto d1 = static_cast<std::uint32_t>(oracle::min_weight_outside(oracle::dual(w2, 15), w1, 15));
  const auto d2 = static_cast<std::uint32_t>(oracle::min_weight_outside(oracle::dual(w1, 15), w2, 15));
  EXPECT_EQ(s.dz.value, std::max(d1, d2));
  EXPECT_EQ(s.dx.value, std::min(d1, d2));

  auto [h, h2] = subsystem_euclidean(hamming(3, 2));
  EXPECT_EQ(h.k, 0u);
  EXPECT_EQ(h.r, 1u);
  (void)h2;
}

TEST(Aqec, SubsystemZeroIntersection) {
  // C1 = repetition code [7,1]: C1 ∩ C1^perp = {0} for odd n.
  auto c1 = from_defining_set(7, 2, {1, 2, 3, 4, 5, 6});
  auto [s, t] = subsystem_euclidean(c1);
  EXPECT_EQ(s.c2.k(), 0u);
  EXPECT_EQ(s.k, 6u);
  EXPECT_EQ(s.r, 1u);
  (void)t;
}

TEST(Aqec, TradeAndConvert) {
  auto [s, t] = subsystem_euclidean(bch(15, 2, 5));
  auto traded = trade_dimension(s);
  EXPECT_EQ(traded.k, 3u);
  EXPECT_EQ(traded.r, 4u);
  EXPECT_FALSE(traded.dz.exact());
  EXPECT_EQ(traded.dz.value, s.dz.value);
  auto chain = aqec_to_subsystem(css_aqec(bch(15, 2, 3), bch(15, 2, 5)), 0);
  const auto total = chain.k + chain.r;
  while (chain.k > 1) {
    chain = trade_dimension(chain);
    EXPECT_EQ(chain.k + chain.r, total);
  }
  EXPECT_EQ(chain.k, 1u);
  EXPECT_THROW(trade_dimension(chain), PreconditionError);

  ASSERT_EQ(t.pure, true);
  auto stab = subsystem_to_stabilizer(t);
  EXPECT_EQ(stab.k, 7u);
  EXPECT_EQ(stab.dz, t.dz);
  auto r0 = aqec_to_subsystem(css_aqec(bch(15, 2, 3), bch(15, 2, 5)), 0);
  EXPECT_EQ(subsystem_to_stabilizer(r0).label(), "[[15,3,5/3]]_2");
  auto impure = t;
  impure.pure = false;
  EXPECT_THROW(subsystem_to_stabilizer(impure), PreconditionError);
}

}  // namespace
}  // namespace aqcc

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

#include "aqcc/cyclic.hpp"
#include "bridge.hpp"

namespace aqcc {
namespace {

using Residues = std::vector<std::uint32_t>;

TEST(Cyclic, FromDefiningSet) {
  auto ham = from_defining_set(15, 2, {1, 2, 4, 8});
  EXPECT_EQ(ham.k(), 11u);
  EXPECT_EQ(ham.generator().to_string(), "x^4 + x + 1");
  EXPECT_EQ(from_defining_set(15, 2, {1, 2, 3, 4, 6, 8, 9, 12}).k(), 7u);
  auto full = from_defining_set(15, 2, {});
  EXPECT_EQ(full.k(), 15u);
  EXPECT_EQ(full.generator().to_string(), "1");
}

TEST(Cyclic, NotCosetClosedNamesResidue) {
  try {
    from_defining_set(15, 2, {1, 2, 3});
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("{1,2,4,8}"), std::string::npos) << e.what();
  }
  EXPECT_THROW(from_defining_set(15, 2, {15}), PreconditionError);
}

TEST(Cyclic, Dual) {
  auto ham = from_defining_set(15, 2, {1, 2, 4, 8});
  auto simplex = dual(ham);
  EXPECT_EQ(simplex.k(), 4u);
  EXPECT_EQ(simplex.defining_set().members(), (Residues{0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12}));
  EXPECT_EQ(dual(bch(15, 2, 5)).defining_set().members(), (Residues{0, 1, 2, 4, 5, 8, 10}));
  EXPECT_EQ(dual(from_defining_set(7, 2, {})).k(), 0u);
  EXPECT_EQ(dual(dual(bch(31, 2, 7))), bch(31, 2, 7));
}

TEST(Cyclic, IntersectSumContains) {
  auto b = bch(15, 2, 5);
  auto i = intersect(b, dual(b));
  EXPECT_EQ(i.defining_set().members(), (Residues{0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12}));
  EXPECT_EQ(i.k(), 4u);
  EXPECT_EQ(sum(b, b), b);
  EXPECT_EQ(intersect(b, from_defining_set(15, 2, {})), b);
  auto ham = bch(15, 2, 3);
  EXPECT_TRUE(contains(ham, b));
  EXPECT_TRUE(contains(ham, dual(b)) == oracle::subset(bridge::codewords(dual(b)), bridge::codewords(ham)));
  EXPECT_TRUE(contains(b, b));
}

TEST(Cyclic, FamilyConstructors) {
  EXPECT_EQ(bch(15, 2, 3).defining_set().members(), (Residues{1, 2, 4, 8}));
  EXPECT_EQ(bch(15, 2, 5).k(), 7u);
  EXPECT_EQ(bch(31, 2, 5).k(), 21u);
  EXPECT_EQ(bch(31, 2, 7).k(), 16u);
  EXPECT_EQ(bch(31, 2, 11).k(), 11u);
  EXPECT_EQ(bch(31, 2, 15).k(), 6u);
  EXPECT_EQ(bch(127, 2, 5).k(), 113u);
  EXPECT_EQ(bch(127, 2, 15).k(), 78u);
  EXPECT_EQ(bch(127, 2, 7).k(), 106u);
  EXPECT_EQ(bch(127, 2, 16, 0).k(), 77u);
  EXPECT_EQ(rs(8, 3).k(), 5u);
  EXPECT_EQ(rs(4, 2).k(), 2u);
  EXPECT_EQ(rs(4, 3).k(), 1u);
  EXPECT_EQ(hamming(3, 2).k(), 4u);
  EXPECT_EQ(hamming(4, 2), bch(15, 2, 3));
  EXPECT_THROW(bch(15, 2, 1), PreconditionError);
}

TEST(Cyclic, BchBound) {
  EXPECT_EQ(bch_bound(bch(15, 2, 3)), 3u);
  EXPECT_EQ(bch_bound(bch(15, 2, 5)), 5u);
  EXPECT_EQ(bch_bound(bch(31, 2, 11)), 11u);
  EXPECT_EQ(bch_bound(bch(127, 2, 16, 0)), 16u);
  EXPECT_EQ(bch_bound(from_defining_set(15, 2, {})), 1u);
}

TEST(Cyclic, DescriptorRoundTrip) {
  for (const char* d : {"bch:n=15,q=2,delta=5", "hamming:m=4,q=2", "rs:q=8,delta=3", "q=2 n=15 T={1,2,4,8}",
                        "q=2,n=15,T={1,2,4,8}", "bch:n=127,q=2,delta=16,b=0", "q=4 n=5 T={1,4}"}) {
    auto c = parse_code(d);
    EXPECT_EQ(parse_code(c.descriptor()), c) << d;
  }
  EXPECT_EQ(parse_code("q=2 n=15 T={1,2,4,8}").descriptor(), "q=2 n=15 T={1,2,4,8}");
  EXPECT_THROW(parse_code("bch:n=15,q=2"), PreconditionError);
  EXPECT_THROW(parse_code("bch:n=15,q=2,delta=5,zz=1"), PreconditionError);
  EXPECT_THROW(parse_code("nonsense"), PreconditionError);
  EXPECT_THROW(parse_code("q=2 n=6 T={1}"), PreconditionError);
}

TEST(Cyclic, Matrices) {
  auto full = from_defining_set(7, 2, {});
  EXPECT_EQ(parity_check_matrix(full).matrix.rows, 0u);
  auto ham = hamming(3, 2);
  auto h = parity_check_matrix(ham).matrix;
  EXPECT_EQ(h.rows, 3u);
  EXPECT_EQ(h.cols, 7u);
  for (auto w : bridge::codewords(ham)) {
    std::vector<std::uint32_t> v(7);
    for (int i = 0; i < 7; ++i) v[i] = w >> i & 1;
    for (std::size_t r = 0; r < h.rows; ++r) {
      std::uint32_t acc = 0;
      for (int i = 0; i < 7; ++i) acc ^= h.at(r, i) & v[i];
      EXPECT_EQ(acc, 0u);
    }
  }
  for (auto c : {bch(15, 2, 5), rs(8, 3), parse_code("q=3 n=8 T={1,3}")}) {
    auto g = generator_matrix(c).matrix;
    auto hh = parity_check_matrix(c).matrix;
    EXPECT_TRUE(multiply_transpose(g, hh).is_zero()) << c.descriptor();
    EXPECT_EQ(rank(g), c.k());
    EXPECT_EQ(rank(hh), c.n() - c.k());
  }
}

TEST(Cyclic, EncodeAndMembership) {
  auto ham = hamming(3, 2);
  auto f = ham.field();
  EXPECT_EQ(encode(ham, Polynomial::zero(f)), std::vector<std::uint32_t>(7, 0));
  EXPECT_EQ(encode(ham, Polynomial::one(f)), (std::vector<std::uint32_t>{1, 1, 0, 1, 0, 0, 0}));
  const auto m1 = Polynomial::parse(f, "x^2 + 1");
  const auto m2 = Polynomial::parse(f, "x^3 + x");
  auto a = encode(ham, m1);
  auto b = encode(ham, m2);
  auto ab = encode(ham, m1 + m2);
  for (int i = 0; i < 7; ++i) EXPECT_EQ(ab[i], a[i] ^ b[i]);
  EXPECT_TRUE(is_codeword(ham, std::vector<std::uint32_t>(7, 0)));
  EXPECT_TRUE(is_codeword(ham, std::vector<std::uint32_t>{1, 1, 0, 1, 0, 0, 0}));
  EXPECT_TRUE(is_codeword(ham, std::vector<std::uint32_t>{0, 0, 0, 1, 1, 0, 1}));
  EXPECT_FALSE(is_codeword(ham, std::vector<std::uint32_t>{1, 1, 0, 0, 0, 0, 0}));
  EXPECT_THROW(encode(ham, Polynomial::parse(f, "x^4")), PreconditionError);
}

TEST(Cyclic, AllCyclicCodesCounts) {
  EXPECT_EQ(all_cyclic_codes(7, 2).size(), 8u);
  EXPECT_EQ(all_cyclic_codes(15, 2).size(), 32u);
}

// Defining-set calculus against brute-force codeword sets computed from roots.
void check_set_calculus(std::uint32_t n) {
  const auto field = bridge::field_for(n);
  const auto sets = oracle::all_binary_defining_sets(n);
  std::vector<oracle::WordSet> brute;
  for (const auto& t : sets) brute.push_back(oracle::codewords_by_roots(field, n, t));
  const auto codes = all_cyclic_codes(n, 2);
  ASSERT_EQ(codes.size(), sets.size());
  std::vector<oracle::WordSet> lib;
  for (const auto& c : codes) lib.push_back(bridge::codewords(c));
  auto index_of = [&](const CyclicCode& c) {
    return static_cast<std::size_t>(std::find(codes.begin(), codes.end(), c) - codes.begin());
  };
  for (std::size_t i = 0; i < sets.size(); ++i) {
    ASSERT_EQ(codes[index_of(from_defining_set(n, 2, sets[i]))], from_defining_set(n, 2, sets[i]));
    EXPECT_EQ(bridge::codewords(from_defining_set(n, 2, sets[i])), brute[i]);
    EXPECT_EQ(bridge::codewords(dual(from_defining_set(n, 2, sets[i]))), oracle::dual(brute[i], n));
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto a = from_defining_set(n, 2, sets[i]);
    for (std::size_t j = 0; j < sets.size(); ++j) {
      const auto b = from_defining_set(n, 2, sets[j]);
      EXPECT_EQ(bridge::codewords(intersect(a, b)), oracle::intersect(brute[i], brute[j]));
      EXPECT_EQ(bridge::codewords(sum(a, b)), oracle::sum(brute[i], brute[j]));
      EXPECT_EQ(contains(a, b), oracle::subset(brute[j], brute[i]));
    }
  }
}

TEST(Cyclic, SetCalculusOracleN7) { check_set_calculus(7); }
TEST(Cyclic, SetCalculusOracleN15) { check_set_calculus(15); }

}  // namespace
}  // namespace aqcc

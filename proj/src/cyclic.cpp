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

#include "aqcc/cyclic.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace aqcc {

std::shared_ptr<const CodeSpace> code_space(std::uint32_t n, std::uint32_t q) {
  using Key = std::tuple<std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const CodeSpace>> cache;

  SplittingField sf = nth_root_field(n, q);
  Key key{n, q, sf.ext->modulus()};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end() && *it->second->sf.base == *sf.base) return it->second;
  }
  auto space = std::make_shared<CodeSpace>(CodeSpace{n, q, std::move(sf), cyclotomic_cosets(n, q), {}, {}});
  space->coset_index.assign(n, 0);
  for (std::uint32_t i = 0; i < space->cosets.size(); ++i) {
    space->minimal.push_back(minimal_polynomial(space->sf, space->cosets[i]));
    for (auto m : space->cosets[i].members) space->coset_index[m] = i;
  }
  std::lock_guard lock(mu);
  cache[key] = space;
  return space;
}

DefiningSet::DefiningSet(std::uint32_t n, std::uint32_t q, std::vector<std::uint32_t> members)
    : n_(n), q_(q), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= n_) {
    throw PreconditionError("residue " + std::to_string(members_.back()) + " is outside Z_" + std::to_string(n_));
  }
}

bool DefiningSet::contains(std::uint32_t s) const { return std::binary_search(members_.begin(), members_.end(), s); }

bool DefiningSet::includes(const DefiningSet& o) const {
  require_compatible(o);
  return std::includes(members_.begin(), members_.end(), o.members_.begin(), o.members_.end());
}

std::optional<std::uint32_t> DefiningSet::first_unclosed() const {
  for (auto s : members_) {
    if (!contains(static_cast<std::uint32_t>(static_cast<std::uint64_t>(s) * q_ % n_))) return s;
  }
  return std::nullopt;
}

void DefiningSet::require_compatible(const DefiningSet& o) const {
  if (n_ != o.n_ || q_ != o.q_) {
    throw PreconditionError("defining sets for different (n, q): (" + std::to_string(n_) + "," + std::to_string(q_) +
                            ") vs (" + std::to_string(o.n_) + "," + std::to_string(o.q_) + ")");
  }
}

DefiningSet DefiningSet::operator|(const DefiningSet& o) const {
  require_compatible(o);
  std::vector<std::uint32_t> out;
  std::set_union(members_.begin(), members_.end(), o.members_.begin(), o.members_.end(), std::back_inserter(out));
  return {n_, q_, std::move(out)};
}

DefiningSet DefiningSet::operator&(const DefiningSet& o) const {
  require_compatible(o);
  std::vector<std::uint32_t> out;
  std::set_intersection(members_.begin(), members_.end(), o.members_.begin(), o.members_.end(),
                        std::back_inserter(out));
  return {n_, q_, std::move(out)};
}

DefiningSet DefiningSet::operator-(const DefiningSet& o) const {
  require_compatible(o);
  std::vector<std::uint32_t> out;
  std::set_difference(members_.begin(), members_.end(), o.members_.begin(), o.members_.end(), std::back_inserter(out));
  return {n_, q_, std::move(out)};
}

DefiningSet DefiningSet::negated() const {
  std::vector<std::uint32_t> out;
  out.reserve(members_.size());
  for (auto s : members_) out.push_back((n_ - s) % n_);
  return {n_, q_, std::move(out)};
}

DefiningSet DefiningSet::complement() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < n_; ++s) {
    if (!contains(s)) out.push_back(s);
  }
  return {n_, q_, std::move(out)};
}

std::string DefiningSet::to_string() const { return "{" + format_residues(members_) + "}"; }

namespace {

Polynomial product_of_minimal(const CodeSpace& space, const DefiningSet& t) {
  Polynomial g = Polynomial::one(space.field());
  std::vector<bool> used(space.cosets.size(), false);
  for (auto s : t.members()) {
    std::uint32_t idx = space.coset_index[s];
    if (used[idx]) continue;
    used[idx] = true;
    g = g * space.minimal[idx];
  }
  return g;
}

void require_same_space(const CyclicCode& a, const CyclicCode& b) {
  if (a.n() != b.n() || a.q() != b.q()) {
    throw PreconditionError("codes have different parameters: " + a.label() + " vs " + b.label());
  }
}

}  // namespace

CyclicCode::CyclicCode(std::shared_ptr<const CodeSpace> space, DefiningSet t)
    : space_(std::move(space)), t_(std::move(t)), g_(Polynomial::one(space_->field())) {
  if (t_.n() != space_->n || t_.q() != space_->q) throw PreconditionError("defining set does not match code space");
  if (auto bad = t_.first_unclosed()) {
    const auto& coset = space_->cosets[space_->coset_index[*bad]];
    throw PreconditionError("defining set " + t_.to_string() + " is not a union of cyclotomic cosets: residue " +
                            std::to_string(*bad) + " belongs to coset {" + format_residues(coset.members) + "}");
  }
  g_ = product_of_minimal(*space_, t_);
  if (g_.degree() != static_cast<int>(t_.size())) {
    throw InternalConsistencyError("deg g = " + std::to_string(g_.degree()) + " but |T| = " + std::to_string(t_.size()));
  }
}

Polynomial CyclicCode::check_polynomial() const {
  auto [quot, rem] = div_rem(Polynomial::xn_minus_1(field(), n()), g_);
  if (!rem.is_zero()) throw InternalConsistencyError("generator does not divide x^n - 1");
  return quot;
}

std::string CyclicCode::descriptor() const {
  return "q=" + std::to_string(q()) + " n=" + std::to_string(n()) + " T=" + t_.to_string();
}

std::string CyclicCode::label() const {
  return "[" + std::to_string(n()) + "," + std::to_string(k()) + "]_" + std::to_string(q());
}

CyclicCode from_defining_set(std::uint32_t n, std::uint32_t q, std::vector<std::uint32_t> members) {
  auto space = code_space(n, q);
  return CyclicCode(space, DefiningSet(n, q, std::move(members)));
}

CyclicCode from_coset_mask(const std::shared_ptr<const CodeSpace>& space, std::uint64_t mask) {
  std::vector<std::uint32_t> members;
  for (std::size_t i = 0; i < space->cosets.size(); ++i) {
    if (mask >> i & 1) members.insert(members.end(), space->cosets[i].members.begin(), space->cosets[i].members.end());
  }
  return CyclicCode(space, DefiningSet(space->n, space->q, std::move(members)));
}

std::vector<CyclicCode> all_cyclic_codes(std::uint32_t n, std::uint32_t q) {
  auto space = code_space(n, q);
  if (space->cosets.size() > 20) {
    throw PreconditionError("n=" + std::to_string(n) + " has " + std::to_string(space->cosets.size()) +
                            " cyclotomic cosets; enumerating all cyclic codes is limited to 20");
  }
  std::vector<CyclicCode> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << space->cosets.size()); ++mask) {
    out.push_back(from_coset_mask(space, mask));
  }
  return out;
}

CyclicCode dual(const CyclicCode& c) {
  CyclicCode by_set(c.space(), c.defining_set().negated().complement());

  // x^k h(1/x) / h(0)
  Polynomial h = c.check_polynomial();
  Polynomial by_poly = h.reciprocal().scaled(c.field()->inv(h.coeff(0)));
  if (!(by_poly == by_set.generator())) {
    throw InternalConsistencyError("dual generator mismatch for " + c.descriptor() + ": reciprocal route gives " +
                                   by_poly.to_string() + ", defining-set route gives " +
                                   by_set.generator().to_string());
  }
  return by_set;
}

CyclicCode intersect(const CyclicCode& a, const CyclicCode& b) {
  require_same_space(a, b);
  return CyclicCode(a.space(), a.defining_set() | b.defining_set());
}

CyclicCode sum(const CyclicCode& a, const CyclicCode& b) {
  require_same_space(a, b);
  return CyclicCode(a.space(), a.defining_set() & b.defining_set());
}

bool contains(const CyclicCode& outer, const CyclicCode& inner) {
  require_same_space(outer, inner);
  const bool by_set = inner.defining_set().includes(outer.defining_set());
  const bool by_generator = divides(outer.generator(), inner.generator());
  const bool by_check = divides(inner.check_polynomial(), outer.check_polynomial());
  if (by_set != by_generator || by_set != by_check) {
    throw InternalConsistencyError("containment criteria disagree for " + outer.descriptor() + " vs " +
                                   inner.descriptor());
  }
  return by_set;
}

CyclicCode bch(std::uint32_t n, std::uint32_t q, std::uint32_t delta, std::uint32_t b) {
  if (delta < 2 || delta > n) {
    throw PreconditionError("designed distance " + std::to_string(delta) + " outside [2, " + std::to_string(n) + "]");
  }
  auto space = code_space(n, q);
  std::vector<bool> take(space->cosets.size(), false);
  for (std::uint32_t i = 0; i + 1 < delta; ++i) take[space->coset_index[(b + i) % n]] = true;
  std::vector<std::uint32_t> members;
  for (std::size_t i = 0; i < take.size(); ++i) {
    if (take[i]) members.insert(members.end(), space->cosets[i].members.begin(), space->cosets[i].members.end());
  }
  return CyclicCode(space, DefiningSet(n, q, std::move(members)));
}

CyclicCode rs(std::uint32_t q, std::uint32_t delta, std::uint32_t b) {
  if (q < 3) throw PreconditionError("Reed-Solomon codes need q >= 3");
  return bch(q - 1, q, delta, b);
}

CyclicCode hamming(std::uint32_t m, std::uint32_t q) {
  if (m < 2) throw PreconditionError("Hamming codes need m >= 2");
  split_prime_power(q);
  if (std::gcd(m, q - 1) != 1) {
    throw PreconditionError("the q-ary Hamming code is cyclic only when gcd(m, q-1) = 1");
  }
  const std::uint64_t n = (ipow(q, m) - 1) / (q - 1);
  if (n > kMaxFieldSize) throw PreconditionError("Hamming code length too large");
  auto space = code_space(static_cast<std::uint32_t>(n), q);
  const auto& coset = space->cosets[space->coset_index[1]];
  return CyclicCode(space, DefiningSet(space->n, q, coset.members));
}

std::uint32_t bch_bound(const CyclicCode& c) {
  const std::uint32_t n = c.n();
  const auto& t = c.defining_set();
  if (t.size() == n) return n;
  std::uint32_t best = 0;
  for (std::uint32_t s = 1; s <= n / 2 || s == 1; ++s) {
    if (std::gcd(s, n) != 1) continue;
    for (std::uint32_t a = 0; a < n; ++a) {
      if (!t.contains(a) || t.contains((a + n - s) % n)) continue;  // run starts here
      std::uint32_t len = 0;
      for (std::uint32_t x = a; t.contains(x) && len < n; x = (x + s) % n) ++len;
      best = std::max(best, len);
    }
  }
  return std::min(best + 1, n);
}

std::vector<std::uint32_t> parse_residue_list(std::string_view text) {
  std::string s(text);
  std::erase_if(s, [](char ch) { return ch == ' ' || ch == '\t'; });
  if (!s.empty() && s.front() == '{') {
    if (s.back() != '}') throw PreconditionError("unbalanced braces in '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<std::uint32_t> out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    std::string tok = s.substr(i, j - i);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      throw PreconditionError("bad residue '" + tok + "' in '" + std::string(text) + "'");
    }
    out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    i = j + 1;
  }
  return out;
}

namespace {

std::map<std::string, std::string> parse_fields(std::string_view body, std::string_view original) {
  std::map<std::string, std::string> out;
  std::size_t i = 0;
  const std::string s(body);
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == ',' || s[i] == '\t')) ++i;
    if (i >= s.size()) break;
    std::size_t eq = s.find('=', i);
    if (eq == std::string::npos) throw PreconditionError("expected key=value in '" + std::string(original) + "'");
    std::string key = s.substr(i, eq - i);
    std::erase_if(key, [](char ch) { return ch == ' '; });
    std::size_t j = eq + 1;
    while (j < s.size() && s[j] == ' ') ++j;
    std::size_t end;
    if (j < s.size() && s[j] == '{') {
      end = s.find('}', j);
      if (end == std::string::npos) throw PreconditionError("unbalanced braces in '" + std::string(original) + "'");
      ++end;
    } else {
      end = s.find_first_of(", \t", j);
      if (end == std::string::npos) end = s.size();
    }
    if (out.contains(key)) throw PreconditionError("duplicate field '" + key + "' in '" + std::string(original) + "'");
    out[key] = s.substr(j, end - j);
    i = end;
  }
  return out;
}

std::uint32_t take_uint(std::map<std::string, std::string>& f, const std::string& key, std::string_view original,
                        std::optional<std::uint32_t> fallback = std::nullopt) {
  auto it = f.find(key);
  if (it == f.end()) {
    if (fallback) return *fallback;
    throw PreconditionError("missing field '" + key + "' in '" + std::string(original) + "'");
  }
  const std::string v = it->second;
  f.erase(it);
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos || v.size() > 9) {
    throw PreconditionError("field '" + key + "' must be a non-negative integer in '" + std::string(original) + "'");
  }
  return static_cast<std::uint32_t>(std::stoul(v));
}

void reject_leftovers(const std::map<std::string, std::string>& f, std::string_view original) {
  if (!f.empty()) {
    throw PreconditionError("unknown field '" + f.begin()->first + "' in '" + std::string(original) + "'");
  }
}

}  // namespace

CyclicCode parse_code(std::string_view descriptor) {
  std::string_view d = descriptor;
  while (!d.empty() && d.front() == ' ') d.remove_prefix(1);
  while (!d.empty() && d.back() == ' ') d.remove_suffix(1);
  if (auto colon = d.find(':'); colon != std::string_view::npos) {
    const std::string family(d.substr(0, colon));
    auto f = parse_fields(d.substr(colon + 1), descriptor);
    if (family == "bch") {
      std::uint32_t n = take_uint(f, "n", descriptor);
      std::uint32_t q = take_uint(f, "q", descriptor);
      std::uint32_t delta = take_uint(f, "delta", descriptor);
      std::uint32_t b = take_uint(f, "b", descriptor, 1);
      reject_leftovers(f, descriptor);
      return bch(n, q, delta, b);
    }
    if (family == "hamming") {
      std::uint32_t m = take_uint(f, "m", descriptor);
      std::uint32_t q = take_uint(f, "q", descriptor);
      reject_leftovers(f, descriptor);
      return hamming(m, q);
    }
    if (family == "rs") {
      std::uint32_t q = take_uint(f, "q", descriptor);
      std::uint32_t delta = take_uint(f, "delta", descriptor);
      std::uint32_t b = take_uint(f, "b", descriptor, 1);
      reject_leftovers(f, descriptor);
      return rs(q, delta, b);
    }
    throw PreconditionError("unknown code family '" + family + "'");
  }
  auto f = parse_fields(d, descriptor);
  auto t_it = f.find("T");
  if (t_it == f.end()) throw PreconditionError("missing field 'T' in '" + std::string(descriptor) + "'");
  auto members = parse_residue_list(t_it->second);
  f.erase(t_it);
  std::uint32_t q = take_uint(f, "q", descriptor);
  std::uint32_t n = take_uint(f, "n", descriptor);
  reject_leftovers(f, descriptor);
  return from_defining_set(n, q, std::move(members));
}

bool Matrix::is_zero() const {
  return std::all_of(data.begin(), data.end(), [](std::uint32_t v) { return v == 0; });
}

Matrix multiply_transpose(const Matrix& a, const Matrix& b) {
  if (a.cols != b.cols) {
    throw PreconditionError("column mismatch: " + std::to_string(a.cols) + " vs " + std::to_string(b.cols));
  }
  if (!(a.field == b.field || *a.field == *b.field)) throw PreconditionError("matrices over different fields");
  const Field& f = *a.field;
  Matrix out(a.field, a.rows, b.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < b.rows; ++j) {
      std::uint32_t acc = 0;
      for (std::size_t t = 0; t < a.cols; ++t) acc = f.add(acc, f.mul(a.at(i, t), b.at(j, t)));
      out.at(i, j) = acc;
    }
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  Matrix w = m;
  const Field& f = *w.field;
  std::size_t r = 0;
  for (std::size_t col = 0; col < w.cols && r < w.rows; ++col) {
    std::size_t piv = r;
    while (piv < w.rows && w.at(piv, col) == 0) ++piv;
    if (piv == w.rows) continue;
    for (std::size_t c = 0; c < w.cols; ++c) std::swap(w.at(piv, c), w.at(r, c));
    const std::uint32_t inv = f.inv(w.at(r, col));
    for (std::size_t i = r + 1; i < w.rows; ++i) {
      std::uint32_t factor = f.mul(w.at(i, col), inv);
      if (factor == 0) continue;
      for (std::size_t c = col; c < w.cols; ++c) w.at(i, c) = f.sub(w.at(i, c), f.mul(factor, w.at(r, c)));
    }
    ++r;
  }
  return r;
}

CheckMatrix generator_matrix(const CyclicCode& c) {
  Matrix m(c.field(), c.k(), c.n());
  const auto& g = c.generator().coeffs();
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) m.at(i, i + j) = g[j];
  }
  return {MatrixRole::kGenerator, std::move(m)};
}

CheckMatrix parity_check_matrix(const CyclicCode& c) {
  Matrix m(c.field(), c.n() - c.k(), c.n());
  const auto rev = c.check_polynomial().reciprocal();
  const auto& h = rev.coeffs();
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < h.size(); ++j) m.at(i, i + j) = h[j];
  }
  return {MatrixRole::kParity, std::move(m)};
}

std::vector<std::uint32_t> encode(const CyclicCode& c, const Polynomial& message) {
  if (message.degree() >= static_cast<int>(c.k())) {
    throw PreconditionError("message degree " + std::to_string(message.degree()) + " must be below k = " +
                            std::to_string(c.k()));
  }
  Polynomial word = message * c.generator();
  std::vector<std::uint32_t> out(c.n(), 0);
  std::copy(word.coeffs().begin(), word.coeffs().end(), out.begin());
  return out;
}

bool is_codeword(const CyclicCode& c, std::span<const std::uint32_t> v) {
  if (v.size() != c.n()) {
    throw PreconditionError("vector length " + std::to_string(v.size()) + " != n = " + std::to_string(c.n()));
  }
  const auto& space = *c.space();
  const Field& ext = *space.sf.ext;
  for (auto x : v) {
    if (x >= c.q()) throw PreconditionError("symbol " + std::to_string(x) + " is not in GF(" + std::to_string(c.q()) + ")");
  }
  std::vector<bool> done(space.cosets.size(), false);
  for (auto i : c.defining_set().members()) {
    const std::uint32_t idx = space.coset_index[i];
    if (done[idx]) continue;  // v(alpha^{iq}) = v(alpha^i)^q for base-field v
    done[idx] = true;
    const std::uint32_t root = ext.pow(space.sf.alpha, i);
    std::uint32_t acc = 0;
    for (std::size_t j = v.size(); j-- > 0;) acc = ext.add(ext.mul(acc, root), space.sf.embed(v[j]));
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace aqcc

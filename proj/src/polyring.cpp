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

#include "aqcc/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace aqcc {

Polynomial::Polynomial(FieldPtr field, std::vector<std::uint32_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) {
    if (c >= field_->size()) throw PreconditionError("coefficient out of range for GF(" + std::to_string(field_->size()) + ")");
  }
  trim();
}

Polynomial Polynomial::monomial(FieldPtr field, std::uint32_t coeff, std::size_t degree) {
  std::vector<std::uint32_t> c(degree + 1, 0);
  c[degree] = coeff;
  return Polynomial(std::move(field), std::move(c));
}

Polynomial Polynomial::xn_minus_1(FieldPtr field, std::size_t n) {
  std::vector<std::uint32_t> c(n + 1, 0);
  c[n] = 1;
  c[0] = field->neg(1);
  return Polynomial(std::move(field), std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Polynomial::require_same(const Polynomial& o) const {
  if (field_ != o.field_ && !(*field_ == *o.field_)) {
    throw PreconditionError("polynomials over different fields");
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same(o);
  std::vector<std::uint32_t> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_->add(coeff(i), o.coeff(i));
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same(o);
  std::vector<std::uint32_t> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_->sub(coeff(i), o.coeff(i));
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same(o);
  if (is_zero() || o.is_zero()) return zero(field_);
  std::vector<std::uint32_t> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      c[i + j] = field_->add(c[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
    }
  }
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::scaled(std::uint32_t s) const {
  std::vector<std::uint32_t> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_->mul(coeffs_[i], s);
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

Polynomial Polynomial::reciprocal() const {
  std::vector<std::uint32_t> c(coeffs_.rbegin(), coeffs_.rend());
  return Polynomial(field_, std::move(c));
}

std::uint32_t Polynomial::eval(std::uint32_t x) const {
  std::uint32_t acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), coeffs_[i]);
  return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return coeffs_ == o.coeffs_ && (field_ == o.field_ || *field_ == *o.field_);
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t d = coeffs_.size(); d-- > 0;) {
    std::uint32_t c = coeffs_[d];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (d == 0) {
      out += field_->format(c);
      continue;
    }
    if (c != 1) out += field_->format(c) + "*";
    out += "x";
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

Polynomial Polynomial::parse(FieldPtr field, std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  auto fail = [&](const std::string& why) {
    return PreconditionError("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  if (s.empty()) throw fail("empty");
  auto read_uint = [&](std::size_t& i) -> std::uint64_t {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw fail("expected a number");
    return std::stoull(s.substr(start, i - start));
  };
  std::map<std::size_t, std::uint32_t> terms;
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    }
    std::uint32_t coef = 1;
    bool have_coef = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::uint64_t v = read_uint(i);
      if (v >= field->size()) throw fail("coefficient " + std::to_string(v) + " is not a field element");
      coef = static_cast<std::uint32_t>(v);
      have_coef = true;
    } else if (i < s.size() && s[i] == 'a') {
      ++i;
      std::uint64_t e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        e = read_uint(i);
      }
      coef = field->exp(static_cast<std::int64_t>(e));
      have_coef = true;
    }
    if (i < s.size() && s[i] == '*') {
      if (!have_coef) throw fail("dangling '*'");
      ++i;
    }
    std::size_t deg = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        deg = read_uint(i);
      }
    } else if (!have_coef) {
      throw fail("expected a term");
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') throw fail(std::string("unexpected '") + s[i] + "'");
    if (negative) coef = field->neg(coef);
    terms[deg] = field->add(terms[deg], coef);
  }
  std::vector<std::uint32_t> c(terms.rbegin()->first + 1, 0);
  for (auto [d, v] : terms) c[d] = v;
  return Polynomial(std::move(field), std::move(c));
}

std::pair<Polynomial, Polynomial> div_rem(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (!(a.field() == b.field() || *a.field() == *b.field())) throw PreconditionError("polynomials over different fields");
  const Field& f = *a.field();
  if (a.degree() < b.degree()) return {Polynomial::zero(a.field()), a};
  std::vector<std::uint32_t> rem = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  std::vector<std::uint32_t> quot(rem.size() - db, 0);
  const std::uint32_t lead_inv = f.inv(d.back());
  for (std::size_t k = quot.size(); k-- > 0;) {
    std::uint32_t c = f.mul(rem[k + db], lead_inv);
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = f.sub(rem[k + j], f.mul(c, d[j]));
  }
  rem.resize(db);
  return {Polynomial(a.field(), std::move(quot)), Polynomial(a.field(), std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = div_rem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool divides(const Polynomial& d, const Polynomial& a) { return div_rem(a, d).second.is_zero(); }

CyclotomicCoset coset_of(std::uint32_t n, std::uint32_t q, std::uint32_t s) {
  if (n == 0) throw PreconditionError("n must be positive");
  if (std::gcd(n, q) != 1) {
    throw PreconditionError("gcd(n=" + std::to_string(n) + ", q=" + std::to_string(q) + ") != 1");
  }
  CyclotomicCoset c{n, q, 0, {}};
  std::uint64_t v = s % n;
  do {
    c.members.push_back(static_cast<std::uint32_t>(v));
    v = v * q % n;
  } while (v != s % n);
  std::sort(c.members.begin(), c.members.end());
  c.representative = c.members.front();
  return c;
}

std::vector<CyclotomicCoset> cyclotomic_cosets(std::uint32_t n, std::uint32_t q) {
  std::vector<bool> seen(n, false);
  std::vector<CyclotomicCoset> out;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    out.push_back(coset_of(n, q, s));
    for (auto m : out.back().members) seen[m] = true;
  }
  return out;
}

Polynomial minimal_polynomial(const SplittingField& sf, const CyclotomicCoset& coset) {
  const std::uint32_t n = sf.n;
  if (coset.n != n || coset.members.empty()) throw PreconditionError("coset does not belong to Z_" + std::to_string(n));
  for (auto s : coset.members) {
    auto image = static_cast<std::uint32_t>(static_cast<std::uint64_t>(s) * coset.q % n);
    if (!std::binary_search(coset.members.begin(), coset.members.end(), image)) {
      throw PreconditionError("set {" + format_residues(coset.members) + "} is not closed under multiplication by " +
                              std::to_string(coset.q) + " mod " + std::to_string(n));
    }
  }
  const Field& ext = *sf.ext;
  Polynomial prod = Polynomial::one(sf.ext);
  for (auto s : coset.members) {
    std::uint32_t root = ext.pow(sf.alpha, s);
    prod = prod * Polynomial(sf.ext, {ext.neg(root), 1});
  }
  std::vector<std::uint32_t> base;
  base.reserve(prod.coeffs().size());
  for (auto c : prod.coeffs()) base.push_back(sf.restrict_to_base(c));
  return Polynomial(sf.base, std::move(base));
}

Polynomial minimal_polynomial(std::uint32_t n, std::uint32_t q, const CyclotomicCoset& coset) {
  return minimal_polynomial(nth_root_field(n, q), coset);
}

std::vector<std::pair<CyclotomicCoset, Polynomial>> factor_xn_minus_1(std::uint32_t n, std::uint32_t q) {
  SplittingField sf = nth_root_field(n, q);
  std::vector<std::pair<CyclotomicCoset, Polynomial>> out;
  for (auto& c : cyclotomic_cosets(n, q)) {
    Polynomial m = minimal_polynomial(sf, c);
    out.emplace_back(std::move(c), std::move(m));
  }
  return out;
}

std::string format_residues(const std::vector<std::uint32_t>& residues) {
  std::string out;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(residues[i]);
  }
  return out;
}

}  // namespace aqcc

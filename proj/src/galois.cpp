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

#include "aqcc/galois.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace aqcc {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::uint32_t multiplicative_order(std::uint64_t base, std::uint32_t n) {
  if (n == 1) return 1;
  if (std::gcd(base % n, static_cast<std::uint64_t>(n)) != 1) {
    throw PreconditionError("multiplicative_order: base not invertible mod " + std::to_string(n));
  }
  std::uint64_t x = base % n;
  std::uint32_t e = 1;
  while (x != 1) {
    x = x * (base % n) % n;
    ++e;
  }
  return e;
}

PrimePower split_prime_power(std::uint64_t q) {
  if (q < 2) throw PreconditionError("field size must be at least 2, got " + std::to_string(q));
  auto ps = prime_factors(q);
  if (ps.size() != 1) {
    throw PreconditionError("field size " + std::to_string(q) + " is not a prime power");
  }
  std::uint32_t m = 0;
  for (std::uint64_t v = q; v > 1; v /= ps[0]) ++m;
  return {static_cast<std::uint32_t>(ps[0]), m};
}

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Dense polynomial helpers over GF(p), used before any Field exists.
Coeffs mulmod_prime(const Coeffs& a, const Coeffs& b, const Coeffs& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  std::vector<std::uint64_t> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
  }
  for (std::size_t d = prod.size(); d-- > m;) {
    std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= m; ++i) {
      prod[d - m + i] = (prod[d - m + i] + (p - c) * f[i]) % p;
    }
  }
  Coeffs out(m, 0);
  for (std::size_t i = 0; i < m && i < prod.size(); ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

Coeffs x_pow_mod(std::uint64_t e, const Coeffs& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  Coeffs result(m, 0);
  result[0] = 1;
  Coeffs base(m, 0);
  if (m == 1) {
    base[0] = (p - f[0]) % p;
  } else {
    base[1] = 1;
  }
  while (e > 0) {
    if (e & 1) result = mulmod_prime(result, base, f, p);
    base = mulmod_prime(base, base, f, p);
    e >>= 1;
  }
  return result;
}

bool is_one(const Coeffs& c) {
  if (c.empty() || c[0] != 1) return false;
  return std::all_of(c.begin() + 1, c.end(), [](std::uint32_t v) { return v == 0; });
}

std::string render_prime_poly(const Coeffs& coeffs) {
  std::string out;
  for (std::size_t d = coeffs.size(); d-- > 0;) {
    std::uint32_t c = coeffs[d];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (d == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "x";
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

struct ModulusRegistry {
  std::mutex mu;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Coeffs> overrides;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Coeffs> computed;
  bool env_loaded = false;
};

ModulusRegistry& registry() {
  static ModulusRegistry r;
  return r;
}

void validate_field_params(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw PreconditionError("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldSize) {
      throw PreconditionError("GF(" + std::to_string(p) + "^" + std::to_string(m) +
                              ") exceeds the supported field size 2^20");
    }
  }
}

}  // namespace

bool is_primitive_polynomial(std::uint32_t p, const std::vector<std::uint32_t>& coeffs) {
  if (coeffs.size() < 2 || coeffs.back() != 1 || coeffs[0] % p == 0) return false;
  const auto m = static_cast<unsigned>(coeffs.size() - 1);
  const std::uint64_t order = ipow(p, m) - 1;
  if (!is_one(x_pow_mod(order, coeffs, p))) return false;
  for (std::uint64_t r : prime_factors(order)) {
    if (is_one(x_pow_mod(order / r, coeffs, p))) return false;
  }
  return true;
}

std::vector<std::uint32_t> smallest_primitive_polynomial(std::uint32_t p, std::uint32_t m) {
  validate_field_params(p, m);
  const std::uint64_t count = ipow(p, m);
  for (std::uint64_t code = 1; code < count; ++code) {
    Coeffs c(m + 1, 0);
    std::uint64_t v = code;
    for (std::uint32_t i = 0; i < m; ++i, v /= p) c[i] = static_cast<std::uint32_t>(v % p);
    c[m] = 1;
    if (is_primitive_polynomial(p, c)) return c;
  }
  throw InternalConsistencyError("no primitive polynomial found for GF(" + std::to_string(p) + "^" +
                                 std::to_string(m) + ")");
}

std::vector<std::uint32_t> parse_prime_polynomial(std::uint32_t p, std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw PreconditionError("empty polynomial");
  std::map<std::uint32_t, std::uint64_t> terms;
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    }
    std::uint64_t coef = 1;
    bool have_coef = false;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) {
      coef = std::stoull(s.substr(start, i - start));
      have_coef = true;
    }
    if (i < s.size() && s[i] == '*') ++i;
    std::uint32_t deg = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw PreconditionError("missing exponent in polynomial '" + std::string(text) + "'");
        deg = static_cast<std::uint32_t>(std::stoul(s.substr(start, i - start)));
      }
    } else if (!have_coef) {
      throw PreconditionError("cannot parse polynomial '" + std::string(text) + "'");
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') {
      throw PreconditionError("unexpected character in polynomial '" + std::string(text) + "'");
    }
    coef %= p;
    if (negative) coef = (p - coef) % p;
    terms[deg] = (terms[deg] + coef) % p;
  }
  Coeffs out(terms.rbegin()->first + 1, 0);
  for (auto [d, c] : terms) out[d] = static_cast<std::uint32_t>(c);
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

void set_modulus_override(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> coeffs) {
  validate_field_params(p, m);
  if (coeffs.size() != m + 1 || !is_primitive_polynomial(p, coeffs)) {
    throw PreconditionError("modulus " + render_prime_poly(coeffs) + " is not a primitive polynomial of degree " +
                            std::to_string(m) + " over GF(" + std::to_string(p) + ")");
  }
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  reg.overrides[{p, m}] = std::move(coeffs);
}

void clear_modulus_overrides() {
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  reg.overrides.clear();
  reg.env_loaded = true;
}

void load_modulus_table_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    if (!(ls >> p)) continue;
    if (!(ls >> m)) throw PreconditionError("modulus table line " + std::to_string(lineno) + ": expected 'p m polynomial'");
    std::string rest;
    std::getline(ls, rest);
    if (!is_prime(p)) throw PreconditionError("modulus table line " + std::to_string(lineno) + ": p is not prime");
    set_modulus_override(p, m, parse_prime_polynomial(p, rest));
  }
}

void load_modulus_table(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw PreconditionError("cannot open modulus table '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  load_modulus_table_text(ss.str());
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m) {
  validate_field_params(p, m);
  auto& reg = registry();
  bool load_env = false;
  {
    std::lock_guard lock(reg.mu);
    if (!reg.env_loaded) {
      reg.env_loaded = true;
      load_env = true;
    }
  }
  if (load_env) {
    if (const char* path = std::getenv("AQCC_MODULUS_TABLE"); path != nullptr && *path != '\0') {
      load_modulus_table(path);
    }
  }
  {
    std::lock_guard lock(reg.mu);
    if (auto it = reg.overrides.find({p, m}); it != reg.overrides.end()) return it->second;
    if (auto it = reg.computed.find({p, m}); it != reg.computed.end()) return it->second;
  }
  auto c = smallest_primitive_polynomial(p, m);
  std::lock_guard lock(reg.mu);
  reg.computed[{p, m}] = c;
  return c;
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t m) {
  return make(p, default_modulus(p, m));
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (modulus.size() < 2) throw PreconditionError("modulus must have degree >= 1");
  validate_field_params(p, static_cast<std::uint32_t>(modulus.size() - 1));
  if (!is_primitive_polynomial(p, modulus)) {
    throw PreconditionError("modulus " + render_prime_poly(modulus) + " is not primitive over GF(" +
                            std::to_string(p) + ")");
  }
  return std::shared_ptr<const Field>(new Field(p, std::move(modulus)));
}

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), m_(static_cast<std::uint32_t>(modulus.size() - 1)), q_(0), modulus_(std::move(modulus)) {
  q_ = static_cast<std::uint32_t>(ipow(p_, m_));
  primitive_ = m_ == 1 ? (p_ - modulus_[0]) % p_ : p_;
  if (q_ <= kMaxTableFieldSize) {
    exp_.resize(2 * static_cast<std::size_t>(q_ - 1));
    log_.assign(q_, 0);
    std::uint32_t v = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = v;
      exp_[i + q_ - 1] = v;
      log_[v] = i;
      v = mul_generic(v, primitive_);
    }
  }
}

std::string Field::modulus_string() const { return render_prime_poly(modulus_); }

std::uint32_t Field::add_digits(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint32_t d = (a % p_ + b % p_) % p_;
    out += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

std::uint32_t Field::neg(std::uint32_t a) const {
  if (p_ == 2) return a;
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    scale *= p_;
    a /= p_;
  }
  return out;
}

std::uint32_t Field::mul_generic(std::uint32_t a, std::uint32_t b) const {
  Coeffs da(m_, 0);
  Coeffs db(m_, 0);
  for (std::uint32_t i = 0; i < m_; ++i, a /= p_, b /= p_) {
    da[i] = a % p_;
    db[i] = b % p_;
  }
  Coeffs r = m_ == 1 ? Coeffs{static_cast<std::uint32_t>(static_cast<std::uint64_t>(da[0]) * db[0] % p_)}
                     : mulmod_prime(da, db, modulus_, p_);
  std::uint32_t out = 0;
  for (std::uint32_t i = m_; i-- > 0;) out = out * p_ + r[i];
  return out;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw PreconditionError("inversion of zero");
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, static_cast<std::int64_t>(q_) - 2);
}

std::uint32_t Field::pow(std::uint32_t a, std::int64_t e) const {
  if (e == 0) return 1;
  if (a == 0) {
    if (e < 0) throw PreconditionError("negative power of zero");
    return 0;
  }
  const std::int64_t order = q_ - 1;
  std::int64_t r = e % order;
  if (r < 0) r += order;
  if (!exp_.empty()) return exp_[(static_cast<std::uint64_t>(log_[a]) * r) % order];
  std::uint32_t result = 1;
  std::uint32_t base = a;
  for (auto k = static_cast<std::uint64_t>(r); k > 0; k >>= 1) {
    if (k & 1) result = mul_generic(result, base);
    base = mul_generic(base, base);
  }
  return result;
}

std::uint32_t Field::exp(std::int64_t e) const { return pow(primitive_, e); }

std::uint32_t Field::log(std::uint32_t a) const {
  if (a == 0) throw PreconditionError("logarithm of zero");
  if (!exp_.empty()) return log_[a];
  std::uint32_t v = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    if (v == a) return i;
    v = mul_generic(v, primitive_);
  }
  throw InternalConsistencyError("element " + std::to_string(a) + " has no discrete log");
}

std::string Field::format(std::uint32_t v) const {
  if (m_ == 1 || v <= 1) return std::to_string(v);
  std::uint32_t l = log(v);
  return l == 1 ? std::string("a") : "a^" + std::to_string(l);
}

FieldElement::FieldElement(FieldPtr field, std::uint32_t value) : field_(std::move(field)), value_(value) {
  if (value_ >= field_->size()) {
    throw PreconditionError("value " + std::to_string(value_) + " is not an element of GF(" +
                            std::to_string(field_->size()) + ")");
  }
}

void FieldElement::require_same(const FieldElement& o) const {
  if (field_ != o.field_ && !(*field_ == *o.field_)) {
    throw PreconditionError("operands belong to different fields");
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }
bool FieldElement::operator==(const FieldElement& o) const {
  return value_ == o.value_ && (field_ == o.field_ || *field_ == *o.field_);
}

std::uint32_t SplittingField::restrict_to_base(std::uint32_t ext_value) const {
  auto it = restrict_.find(ext_value);
  if (it == restrict_.end()) {
    throw InternalConsistencyError("element " + ext->format(ext_value) + " of GF(" + std::to_string(ext->size()) +
                                   ") does not lie in the subfield GF(" + std::to_string(base->size()) + ")");
  }
  return it->second;
}

bool SplittingField::in_base(std::uint32_t ext_value) const { return restrict_.contains(ext_value); }

SplittingField nth_root_field(std::uint32_t n, std::uint32_t q) {
  if (n == 0) throw PreconditionError("code length must be positive");
  const PrimePower pp = split_prime_power(q);
  if (n % pp.p == 0) {
    throw PreconditionError("gcd(n=" + std::to_string(n) + ", q=" + std::to_string(q) +
                            ") != 1: repeated-root cyclic codes are not supported");
  }
  const std::uint32_t ext_deg = multiplicative_order(q, n);
  const std::uint64_t big_q = ipow(q, ext_deg);
  if (big_q > kMaxFieldSize) {
    throw PreconditionError("splitting field GF(" + std::to_string(q) + "^" + std::to_string(ext_deg) +
                            ") for n=" + std::to_string(n) + " exceeds the supported field size 2^20");
  }
  SplittingField sf;
  sf.n = n;
  sf.base = Field::make(pp.p, pp.m);
  sf.ext = ext_deg == 1 ? sf.base : Field::make(pp.p, pp.m * ext_deg);
  sf.extension_degree = ext_deg;
  sf.alpha = sf.ext->exp(static_cast<std::int64_t>((big_q - 1) / n));

  const Field& ext = *sf.ext;
  sf.embed_.resize(q);
  if (sf.ext == sf.base || pp.m == 1) {
    for (std::uint32_t v = 0; v < q; ++v) sf.embed_[v] = v;
  } else {
    // Root of the base modulus inside ext; x -> theta is a field embedding.
    const auto& bm = sf.base->modulus();
    std::uint32_t theta = 0;
    for (std::uint32_t e = 1; e < ext.size() - 1 && theta == 0; ++e) {
      std::uint32_t cand = ext.exp(e);
      std::uint32_t acc = 0;
      for (std::size_t i = bm.size(); i-- > 0;) acc = ext.add(ext.mul(acc, cand), bm[i]);
      if (acc == 0) theta = cand;
    }
    if (theta == 0) throw InternalConsistencyError("base modulus has no root in the extension field");
    for (std::uint32_t v = 0; v < q; ++v) {
      std::uint32_t acc = 0;
      std::uint32_t digits = v;
      std::uint32_t power = 1;
      for (std::uint32_t i = 0; i < pp.m; ++i, digits /= pp.p) {
        acc = ext.add(acc, ext.mul(digits % pp.p, power));
        power = ext.mul(power, theta);
      }
      sf.embed_[v] = acc;
    }
  }
  for (std::uint32_t v = 0; v < q; ++v) sf.restrict_[sf.embed_[v]] = v;
  if (sf.restrict_.size() != q) throw InternalConsistencyError("subfield embedding is not injective");
  return sf;
}

}  // namespace aqcc

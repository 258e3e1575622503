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

#include <boost/multiprecision/cpp_int.hpp>

#include "aqcc/weights.hpp"

namespace aqcc {

using boost::multiprecision::cpp_int;

namespace {

std::vector<std::vector<cpp_int>> binomials(std::uint32_t n) {
  std::vector<std::vector<cpp_int>> c(n + 1, std::vector<cpp_int>(n + 1, 0));
  for (std::uint32_t i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (std::uint32_t j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c;
}

// Dual coefficient B_j * |C|, or nothing when the input is malformed.
class Transform {
 public:
  Transform(std::span<const std::uint64_t> dist, std::uint32_t n, std::uint32_t q, std::uint32_t k)
      : dist_(dist), n_(n), q_(q) {
    if (dist.size() != n + 1) {
      throw PreconditionError("weight distribution has " + std::to_string(dist.size()) + " entries, expected n+1 = " +
                              std::to_string(n + 1));
    }
    if (k > n) throw PreconditionError("dimension exceeds length");
    cpp_int total = 0;
    for (auto a : dist) total += a;
    size_ = boost::multiprecision::pow(cpp_int(q), k);
    if (total != size_ || dist[0] != 1) {
      throw PreconditionError("weight distribution does not describe a linear code of dimension " + std::to_string(k));
    }
    binom_ = binomials(n);
    qm1_pow_.assign(n + 1, 1);
    for (std::uint32_t i = 1; i <= n; ++i) qm1_pow_[i] = qm1_pow_[i - 1] * (q - 1);
  }

  cpp_int coefficient(std::uint32_t j) const {
    cpp_int acc = 0;
    for (std::uint32_t i = 0; i <= n_; ++i) {
      if (dist_[i] == 0) continue;
      // Krawtchouk K_j(i)
      cpp_int kj = 0;
      for (std::uint32_t s = 0; s <= j && s <= i; ++s) {
        if (j - s > n_ - i) continue;
        cpp_int term = qm1_pow_[j - s] * binom_[i][s] * binom_[n_ - i][j - s];
        if (s & 1) {
          kj -= term;
        } else {
          kj += term;
        }
      }
      acc += kj * dist_[i];
    }
    if (acc < 0 || acc % size_ != 0) {
      throw PreconditionError("weight distribution is not the distribution of a linear code (coefficient " +
                              std::to_string(j) + " is not a non-negative integer)");
    }
    return acc / size_;
  }

 private:
  std::span<const std::uint64_t> dist_;
  std::uint32_t n_;
  std::uint32_t q_;
  cpp_int size_;
  std::vector<std::vector<cpp_int>> binom_;
  std::vector<cpp_int> qm1_pow_;
};

}  // namespace

std::vector<std::uint64_t> macwilliams_transform(std::span<const std::uint64_t> dist, std::uint32_t n, std::uint32_t q,
                                                 std::uint32_t k) {
  const Transform t(dist, n, q, k);
  std::vector<std::uint64_t> out(n + 1, 0);
  for (std::uint32_t j = 0; j <= n; ++j) {
    const cpp_int v = t.coefficient(j);
    if (v > std::numeric_limits<std::uint64_t>::max()) throw PreconditionError("dual weight count overflows 64 bits");
    out[j] = static_cast<std::uint64_t>(v);
  }
  return out;
}

std::uint32_t macwilliams_min_weight(std::span<const std::uint64_t> dist, std::uint32_t n, std::uint32_t q,
                                     std::uint32_t k) {
  const Transform t(dist, n, q, k);
  for (std::uint32_t j = 1; j <= n; ++j) {
    if (t.coefficient(j) != 0) return j;
  }
  return n + 1;
}

}  // namespace aqcc

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

#ifndef AQCC_WEIGHTS_KERNEL_HPP
#define AQCC_WEIGHTS_KERNEL_HPP

#include <cstdint>
#include <vector>

#include "aqcc/galois.hpp"

namespace aqcc::kernel {

/// Enumeration input: the outer code's generator rows and, optionally, the
/// inner code's parity-check matrix. A codeword counts only when its inner
/// syndrome is nonzero (or, with no inner code, when it is nonzero itself).
struct SearchPlan {
  FieldPtr field;
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  /// k x n, row-major.
  std::vector<std::uint32_t> rows;
  /// Parity-check rows of the inner code, r x n; r = 0 means no inner filter.
  std::uint32_t inner_rows = 0;
  std::vector<std::uint32_t> inner_parity;
  /// Stop as soon as a qualifying word of this weight is seen; 0 disables.
  std::uint32_t lower_bound = 0;

  bool filtered() const { return inner_rows > 0; }
};

struct SearchResult {
  /// n + 1 when no qualifying codeword exists.
  std::uint32_t min_weight;
  /// Codewords actually visited; depends on scheduling when the cutoff fires.
  std::uint64_t visited;
};

/// Gray-code enumeration for q = 2, projective enumeration otherwise;
/// parallel over message-prefix partitions. workers <= 0 uses the OpenMP default.
SearchResult min_weight_omp(const SearchPlan& plan, int workers);
/// Weight histogram (length n + 1) of the qualifying codewords; with no inner
/// filter this includes the zero word.
std::vector<std::uint64_t> histogram_omp(const SearchPlan& plan, int workers);

/// Reference: encodes every one of the q^k messages from scratch and checks
/// the inner parity matrix directly. Single threaded, no cutoff.
SearchResult min_weight_serial(const SearchPlan& plan);
std::vector<std::uint64_t> histogram_serial(const SearchPlan& plan);

}  // namespace aqcc::kernel

#endif  // AQCC_WEIGHTS_KERNEL_HPP

//
// Copyright 2026 The sentropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sentropy/profile.hpp"

namespace sentropy {

struct PerLenEntropy {
    std::uint64_t k = 0;
    double h_max = 0.0;
    double h_realized = 0.0;
    double cumulative = 0.0;
};

// Entropies in nats. per_len is ascending in k; cumulative is the running
// prefix sum of h_realized; sigma equals the final cumulative value;
// sigma_norm = norm_base * sigma / total_tokens.
struct EntropyReport {
    std::string label;
    std::vector<PerLenEntropy> per_len;
    double sigma = 0.0;
    double sigma_norm = 0.0;
    std::uint64_t norm_base = 10000;
    std::uint64_t total_tokens = 0;
    std::uint64_t vocab_size = 0;
    std::vector<std::string> warnings;
};

// k * ln(vocab_size): entropy if every possible k-token sentence occurred.
// Throws DomainError when k or vocab_size is 0.
double h_max(std::uint64_t k, std::uint64_t vocab_size);

// k * n_k * ln(vocab_size) / vocab_size^k, switching to exponent-space
// evaluation when vocab_size^k overflows a double. Underflow flushes to
// exact 0; n_k = 0 or vocab_size = 1 give 0. Throws DomainError when k or
// vocab_size is 0. n_k <= vocab_size^k is deliberately not required.
double h_realized(std::uint64_t k, std::uint64_t n_k, std::uint64_t vocab_size);

// Test oracle: enumerates every vocab_size^k tuple, assigns each probability
// 1/vocab_size^k, and sums -p*ln(p) over exactly the realized set. Bounds:
// vocab_size <= 8, tuple length <= 6, all symbols < vocab_size, uniform
// tuple length. Throws DomainError otherwise.
double brute_force_entropy(std::uint64_t vocab_size,
                           const std::vector<std::vector<std::uint32_t>>& realized);

// Per-length terms in ascending k, sequential summation. Rows whose distinct
// count exceeds vocab_size^k are kept but flagged in warnings. Throws
// DomainError on an empty profile (total_tokens or vocab_size 0).
EntropyReport build_report(const CorpusProfile& profile, std::uint64_t norm_base = 10000);

}  // namespace sentropy

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

#include "sentropy/entropy.hpp"

#include <cmath>
#include <set>

#include "sentropy/errors.hpp"

namespace sentropy {
namespace {

// Largest exponent where vocab_size^k still evaluates directly; e^700 is
// comfortably inside double range.
constexpr double kDirectExponentLimit = 700.0;

}  // namespace

double h_max(std::uint64_t k, std::uint64_t vocab_size) {
    if (k == 0) throw DomainError("h_max: sentence length k must be >= 1");
    if (vocab_size == 0) throw DomainError("h_max: vocab_size must be >= 1");
    return static_cast<double>(k) * std::log(static_cast<double>(vocab_size));
}

double h_realized(std::uint64_t k, std::uint64_t n_k, std::uint64_t vocab_size) {
    if (k == 0) throw DomainError("h_realized: sentence length k must be >= 1");
    if (vocab_size == 0) throw DomainError("h_realized: vocab_size must be >= 1");
    if (n_k == 0) return 0.0;
    if (vocab_size == 1) return 0.0;

    const double ln_vocab = std::log(static_cast<double>(vocab_size));
    const double exponent = static_cast<double>(k) * ln_vocab;
    if (exponent <= kDirectExponentLimit) {
        return static_cast<double>(k) * static_cast<double>(n_k) * ln_vocab / std::exp(exponent);
    }
    const double log_term = std::log(static_cast<double>(k)) +
                            std::log(static_cast<double>(n_k)) + std::log(ln_vocab) - exponent;
    return std::exp(log_term);
}

double brute_force_entropy(std::uint64_t vocab_size,
                           const std::vector<std::vector<std::uint32_t>>& realized) {
    if (vocab_size == 0) throw DomainError("brute_force_entropy: vocab_size must be >= 1");
    if (vocab_size > 8) throw DomainError("brute_force_entropy: vocab_size must be <= 8");
    if (realized.empty()) return 0.0;

    const std::size_t k = realized.front().size();
    if (k == 0 || k > 6) throw DomainError("brute_force_entropy: tuple length must be in 1..6");
    std::set<std::vector<std::uint32_t>> realized_set;
    for (const auto& tuple : realized) {
        if (tuple.size() != k)
            throw DomainError("brute_force_entropy: tuples must share one length");
        for (std::uint32_t symbol : tuple) {
            if (symbol >= vocab_size)
                throw DomainError("brute_force_entropy: symbol outside the alphabet");
        }
        realized_set.insert(tuple);
    }

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= vocab_size;
    const double p = 1.0 / static_cast<double>(total);

    double sum = 0.0;
    std::vector<std::uint32_t> tuple(k, 0);
    for (std::uint64_t count = 0; count < total; ++count) {
        if (realized_set.count(tuple) != 0) sum += -p * std::log(p);
        for (std::size_t pos = k; pos-- > 0;) {
            if (++tuple[pos] < vocab_size) break;
            tuple[pos] = 0;
        }
    }
    return sum;
}

EntropyReport build_report(const CorpusProfile& profile, std::uint64_t norm_base) {
    if (profile.total_tokens == 0 || profile.vocab_size == 0)
        throw DomainError("build_report: profile is empty");

    EntropyReport report;
    report.label = profile.label;
    report.norm_base = norm_base;
    report.total_tokens = profile.total_tokens;
    report.vocab_size = profile.vocab_size;

    double cumulative = 0.0;
    for (const auto& [k, n_k] : profile.distinct_by_len) {
        PerLenEntropy row;
        row.k = k;
        row.h_max = h_max(k, profile.vocab_size);
        row.h_realized = h_realized(k, n_k, profile.vocab_size);
        cumulative += row.h_realized;
        row.cumulative = cumulative;
        report.per_len.push_back(row);

        if (n_k > 0 && profile.vocab_size > 1 &&
            std::log(static_cast<double>(n_k)) > row.h_max + 1e-9) {
            report.warnings.push_back("k=" + std::to_string(k) + ": distinct count " +
                                      std::to_string(n_k) + " exceeds vocab_size^k");
        }
    }
    report.sigma = cumulative;
    report.sigma_norm = static_cast<double>(norm_base) * report.sigma /
                        static_cast<double>(profile.total_tokens);
    return report;
}

}  // namespace sentropy

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
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace sentropy {

// Sufficient statistics of a tokenized sample. distinct_by_len[k] counts
// unique ordered k-token sequences; occurrences_by_len[k] counts every
// occurrence. Profiles built from published counts have no occurrence data
// (has_occurrences = false) and cannot export a length distribution.
struct CorpusProfile {
    std::string label;
    std::uint64_t total_tokens = 0;
    std::uint64_t vocab_size = 0;
    std::map<std::uint64_t, std::uint64_t> distinct_by_len;
    std::map<std::uint64_t, std::uint64_t> occurrences_by_len;
    bool has_occurrences = true;

    std::uint64_t max_len() const noexcept {
        return distinct_by_len.empty() ? 0 : distinct_by_len.rbegin()->first;
    }
};

// Single-pass fold over tokenized sentences. Sentence identity is exact
// sequence equality; duplicates raise occurrence counts only. Throws
// EmptySentenceError if a zero-length sentence slips through.
CorpusProfile profile(std::string label, const std::vector<std::vector<std::u32string>>& sentences);

// Builds a profile from published numbers. Zero-valued length counts are
// dropped; vocab_size must not exceed total_tokens; sentence lengths must be
// at least 1. distinct_by_len[k] <= vocab_size^k is NOT enforced here so
// that typoed published data still loads; the entropy stage reports such
// rows as warnings.
CorpusProfile profile_from_counts(std::string label, std::uint64_t total_tokens,
                                  std::uint64_t vocab_size,
                                  const std::map<std::uint64_t, std::uint64_t>& distinct_by_len);

// Reads a counts JSON file:
//   {"label": str, "total_tokens": int, "vocab_size": int,
//    "distinct_by_len": {"1": int, "2": int, ...}}
// Throws IoError, SchemaError, or ValidationError.
CorpusProfile load_counts_file(const std::filesystem::path& path);

}  // namespace sentropy

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

#include "sentropy/profile.hpp"

#include <charconv>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "sentropy/errors.hpp"

namespace sentropy {
namespace {

using nlohmann::json;

// U+001F never occurs in a token (tokens hold letters, digits, Han scalars,
// and intra-word joiners only), so it is a safe sequence separator.
constexpr char32_t kSeparator = U'';

std::uint64_t require_count(const json& obj, const char* key) {
    if (!obj.contains(key)) throw SchemaError(std::string("missing field ") + key);
    const json& v = obj.at(key);
    if (!v.is_number_integer())
        throw SchemaError(std::string("field ") + key + " must be an integer");
    const auto signed_value = v.get<std::int64_t>();
    if (signed_value < 0)
        throw ValidationError(std::string("field ") + key + " must be non-negative");
    return static_cast<std::uint64_t>(signed_value);
}

}  // namespace

CorpusProfile profile(std::string label,
                      const std::vector<std::vector<std::u32string>>& sentences) {
    CorpusProfile p;
    p.label = std::move(label);
    p.has_occurrences = true;

    std::unordered_set<std::u32string> vocab;
    std::map<std::uint64_t, std::unordered_set<std::u32string>> distinct;
    for (const auto& sentence : sentences) {
        if (sentence.empty()) throw EmptySentenceError("empty sentence reached the profiler");
        const std::uint64_t k = sentence.size();
        p.total_tokens += k;
        p.occurrences_by_len[k] += 1;

        std::u32string key;
        for (const auto& token : sentence) {
            vocab.insert(token);
            if (!key.empty()) key.push_back(kSeparator);
            key.append(token);
        }
        distinct[k].insert(std::move(key));
    }
    p.vocab_size = vocab.size();
    for (const auto& [k, set] : distinct) p.distinct_by_len[k] = set.size();
    return p;
}

CorpusProfile profile_from_counts(std::string label, std::uint64_t total_tokens,
                                  std::uint64_t vocab_size,
                                  const std::map<std::uint64_t, std::uint64_t>& distinct_by_len) {
    if (vocab_size > total_tokens)
        throw ValidationError("vocab_size (" + std::to_string(vocab_size) +
                              ") exceeds total_tokens (" + std::to_string(total_tokens) + ")");
    CorpusProfile p;
    p.label = std::move(label);
    p.total_tokens = total_tokens;
    p.vocab_size = vocab_size;
    p.has_occurrences = false;
    for (const auto& [k, count] : distinct_by_len) {
        if (k == 0) throw ValidationError("sentence length in distinct_by_len must be >= 1");
        if (count == 0) continue;
        p.distinct_by_len[k] = count;
    }
    return p;
}

CorpusProfile load_counts_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open counts file: " + path.string());
    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError("counts file is not valid JSON: " + path.string() + ": " + e.what());
    }
    if (!root.is_object()) throw SchemaError("counts root must be an object");
    for (const auto& item : root.items()) {
        if (item.key() != "label" && item.key() != "total_tokens" && item.key() != "vocab_size" &&
            item.key() != "distinct_by_len")
            throw SchemaError("unknown field " + item.key());
    }
    if (!root.contains("label")) throw SchemaError("missing field label");
    if (!root.at("label").is_string()) throw SchemaError("field label must be a string");
    const auto label = root.at("label").get<std::string>();
    const std::uint64_t total_tokens = require_count(root, "total_tokens");
    const std::uint64_t vocab_size = require_count(root, "vocab_size");

    if (!root.contains("distinct_by_len")) throw SchemaError("missing field distinct_by_len");
    const json& by_len = root.at("distinct_by_len");
    if (!by_len.is_object()) throw SchemaError("field distinct_by_len must be an object");

    std::map<std::uint64_t, std::uint64_t> distinct;
    for (const auto& item : by_len.items()) {
        const std::string& key = item.key();
        std::uint64_t k = 0;
        const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), k);
        if (ec != std::errc{} || ptr != key.data() + key.size())
            throw SchemaError("distinct_by_len key \"" + key + "\" is not a sentence length");
        if (k == 0)
            throw ValidationError("distinct_by_len key \"0\": sentence length must be >= 1");
        if (!item.value().is_number_integer())
            throw SchemaError("field distinct_by_len." + key + " must be an integer");
        const auto value = item.value().get<std::int64_t>();
        if (value < 0)
            throw ValidationError("field distinct_by_len." + key + " must be non-negative");
        distinct[k] = static_cast<std::uint64_t>(value);
    }
    try {
        return profile_from_counts(label, total_tokens, vocab_size, distinct);
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

}  // namespace sentropy

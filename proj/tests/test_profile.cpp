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

#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "sentropy/entropy.hpp"
#include "sentropy/errors.hpp"
#include "sentropy/profile.hpp"

using namespace sentropy;

namespace {

using Sentences = std::vector<std::vector<std::u32string>>;

std::filesystem::path write_temp_json(const std::string& body) {
    static int counter = 0;
    const auto path = std::filesystem::temp_directory_path() /
                      ("sentropy_counts_" + std::to_string(::getpid()) + "_" +
                       std::to_string(counter++) + ".json");
    std::ofstream out(path, std::ios::binary);
    out << body;
    return path;
}

}  // namespace

TEST_CASE("profile counts distinct sequences, occurrences, and vocabulary") {
    const Sentences sentences = {{U"a"}, {U"a", U"b"}, {U"a", U"b"}};
    const CorpusProfile p = profile("t", sentences);
    CHECK(p.label == "t");
    CHECK(p.total_tokens == 5);
    CHECK(p.vocab_size == 2);
    CHECK(p.distinct_by_len == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 1}});
    CHECK(p.occurrences_by_len == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 2}});
    CHECK(p.max_len() == 2);
    CHECK(p.has_occurrences);
}

TEST_CASE("profile of nothing is empty") {
    const CorpusProfile p = profile("empty", {});
    CHECK(p.total_tokens == 0);
    CHECK(p.vocab_size == 0);
    CHECK(p.distinct_by_len.empty());
    CHECK(p.occurrences_by_len.empty());
    CHECK(p.max_len() == 0);
}

TEST_CASE("token order within a sentence matters") {
    const CorpusProfile p = profile("o", {{U"x", U"y"}, {U"y", U"x"}});
    CHECK(p.distinct_by_len == std::map<std::uint64_t, std::uint64_t>{{2, 2}});
}

TEST_CASE("multi-scalar tokens are not confused with their concatenation") {
    // ["ab"] and ["a","b"] must stay distinct sentence shapes
    const CorpusProfile p = profile("j", {{U"ab"}, {U"a", U"b"}});
    CHECK(p.distinct_by_len == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 1}});
    CHECK(p.vocab_size == 3);
}

TEST_CASE("an empty sentence is an internal error") {
    CHECK_THROWS_AS(profile("bad", {{U"a"}, {}}), EmptySentenceError);
}

TEST_CASE("profile is invariant under sentence permutation") {
    Sentences sentences;
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        std::vector<std::u32string> sentence;
        const int len = 1 + static_cast<int>(rng() % 6);
        for (int j = 0; j < len; ++j)
            sentence.emplace_back(1, static_cast<char32_t>(U'a' + rng() % 5));
        sentences.push_back(std::move(sentence));
    }
    const CorpusProfile before = profile("p", sentences);
    std::shuffle(sentences.begin(), sentences.end(), rng);
    const CorpusProfile after = profile("p", sentences);
    CHECK(before.total_tokens == after.total_tokens);
    CHECK(before.vocab_size == after.vocab_size);
    CHECK(before.distinct_by_len == after.distinct_by_len);
    CHECK(before.occurrences_by_len == after.occurrences_by_len);
}

TEST_CASE("duplicates raise occurrences but never distinct counts") {
    const Sentences once = {{U"a", U"b"}};
    const Sentences twice = {{U"a", U"b"}, {U"a", U"b"}};
    const CorpusProfile p1 = profile("d", once);
    const CorpusProfile p2 = profile("d", twice);
    CHECK(p1.distinct_by_len == p2.distinct_by_len);
    CHECK(p2.occurrences_by_len.at(2) == 2);
}

TEST_CASE("occurrence totals add up to total_tokens") {
    const CorpusProfile p = profile("s", {{U"a"}, {U"b", U"c"}, {U"b", U"c"}, {U"a", U"b", U"c"}});
    std::uint64_t sum = 0;
    for (const auto& [k, count] : p.occurrences_by_len) sum += k * count;
    CHECK(sum == p.total_tokens);
}

TEST_CASE("profile_from_counts validates and drops zero rows") {
    const CorpusProfile p =
        profile_from_counts("I", 79959, 2553, {{1, 163}, {2, 375}, {3, 248}, {4, 0}});
    CHECK(p.total_tokens == 79959);
    CHECK(p.vocab_size == 2553);
    CHECK(p.distinct_by_len.size() == 3);
    CHECK_FALSE(p.has_occurrences);

    CHECK_THROWS_AS(profile_from_counts("x", 5, 10, {}), ValidationError);
    CHECK_THROWS_AS(profile_from_counts("x", 10, 5, {{0, 3}}), ValidationError);

    const CorpusProfile empty = profile_from_counts("e", 0, 0, {});
    CHECK(empty.total_tokens == 0);
    CHECK(empty.distinct_by_len.empty());
}

TEST_CASE("a from-counts rebuild reproduces the entropy of the original") {
    const CorpusProfile original =
        profile("r", {{U"a"}, {U"a", U"b"}, {U"b", U"a"}, {U"c", U"a", U"b"}});
    const CorpusProfile rebuilt = profile_from_counts(
        original.label, original.total_tokens, original.vocab_size, original.distinct_by_len);
    const EntropyReport a = build_report(original);
    const EntropyReport b = build_report(rebuilt);
    CHECK(a.sigma == b.sigma);
    CHECK(a.sigma_norm == b.sigma_norm);
    REQUIRE(a.per_len.size() == b.per_len.size());
    for (std::size_t i = 0; i < a.per_len.size(); ++i) {
        CHECK(a.per_len[i].h_realized == b.per_len[i].h_realized);
    }
}

TEST_CASE("counts files parse with strict schema checks") {
    const auto good = write_temp_json(
        R"({"label": "I", "total_tokens": 10, "vocab_size": 3,
            "distinct_by_len": {"1": 2, "2": 3}})");
    const CorpusProfile p = load_counts_file(good);
    CHECK(p.label == "I");
    CHECK(p.distinct_by_len.at(2) == 3);
    std::filesystem::remove(good);

    struct BadCase {
        const char* body;
        bool is_validation;
    };
    const std::vector<BadCase> bad_cases = {
        {R"({"label": "x", "total_tokens": 10, "vocab_size": 3,
             "distinct_by_len": {"1": -2}})", true},
        {R"({"label": "x", "total_tokens": 10, "vocab_size": 3,
             "distinct_by_len": {"0": 2}})", true},
        {R"({"label": "x", "total_tokens": 3, "vocab_size": 10,
             "distinct_by_len": {}})", true},
        {R"({"label": "x", "total_tokens": -1, "vocab_size": 0,
             "distinct_by_len": {}})", true},
        {R"({"label": "x", "total_tokens": 10, "vocab_size": 3,
             "distinct_by_len": {"one": 2}})", false},
        {R"({"label": "x", "total_tokens": 10, "vocab_size": 3,
             "distinct_by_len": {"1": 2.5}})", false},
        {R"({"label": "x", "total_tokens": 10, "vocab_size": 3})", false},
        {R"({"label": "x", "total_tokens": 10, "vocab_size": 3,
             "distinct_by_len": {}, "extra": 1})", false},
        {R"([1,2,3])", false},
        {R"({nope)", false},
    };
    for (const auto& bad : bad_cases) {
        CAPTURE(bad.body);
        const auto path = write_temp_json(bad.body);
        if (bad.is_validation) {
            CHECK_THROWS_AS(load_counts_file(path), ValidationError);
        } else {
            CHECK_THROWS_AS(load_counts_file(path), SchemaError);
        }
        std::filesystem::remove(path);
    }

    CHECK_THROWS_AS(load_counts_file("/nonexistent/counts.json"), IoError);
}

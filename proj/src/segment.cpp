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

#include "sentropy/segment.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "sentropy/errors.hpp"
#include "sentropy/unicode.hpp"

namespace sentropy {
namespace {

bool all_space(std::u32string_view s) {
    return std::all_of(s.begin(), s.end(), [](char32_t cp) { return uni::is_space(cp); });
}

bool is_word_scalar(char32_t cp) { return uni::is_letter(cp) || uni::is_digit(cp); }

bool is_intra_word_joiner(char32_t cp) {
    // Apostrophes (ASCII and right single quote) and hyphens (ASCII and
    // U+2010) stay inside a word when flanked by word scalars.
    return cp == U'\'' || cp == U'’' || cp == U'-' || cp == U'‐';
}

// Lexicon matching never crosses these: punctuation, whitespace, digits.
bool is_matchable(char32_t cp) { return is_han(cp) || uni::is_letter(cp); }

}  // namespace

bool is_han(char32_t cp) noexcept {
    return (cp >= 0x4E00 && cp <= 0x9FFF) || (cp >= 0x3400 && cp <= 0x4DBF);
}

std::vector<std::u32string> split_sentences(std::u32string_view text,
                                            const TokenizationConfig& config) {
    if (config.terminators.empty()) throw ValidationError("terminator set must not be empty");
    std::vector<std::u32string> sentences;
    std::u32string current;
    auto flush = [&] {
        if (!current.empty() && !all_space(current)) sentences.push_back(current);
        current.clear();
    };
    for (char32_t cp : text) {
        if (config.terminators.find(cp) != std::u32string::npos) {
            flush();
        } else {
            current.push_back(cp);
        }
    }
    flush();
    return sentences;
}

std::vector<std::u32string> tokenize_han(std::u32string_view sentence) {
    std::vector<std::u32string> tokens;
    for (char32_t cp : sentence) {
        if (is_han(cp)) tokens.emplace_back(1, cp);
    }
    return tokens;
}

std::vector<std::u32string> tokenize_latin(std::u32string_view sentence, bool lowercase_fold) {
    std::vector<std::u32string> tokens;
    std::u32string current;
    const std::size_t n = sentence.size();
    for (std::size_t i = 0; i < n; ++i) {
        const char32_t cp = sentence[i];
        if (is_word_scalar(cp)) {
            current.push_back(lowercase_fold ? uni::to_lower(cp) : cp);
            continue;
        }
        if (is_intra_word_joiner(cp) && !current.empty() && i + 1 < n &&
            is_word_scalar(sentence[i + 1])) {
            current.push_back(cp);
            continue;
        }
        if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::vector<std::u32string> segment_max_match(std::u32string_view sentence,
                                              const Lexicon& lexicon) {
    if (lexicon.empty()) throw EmptyLexiconError("lexicon is empty");
    std::vector<std::u32string> tokens;
    const std::size_t n = sentence.size();
    std::size_t i = 0;
    while (i < n) {
        if (!is_matchable(sentence[i])) {
            ++i;
            continue;
        }
        // End of the contiguous matchable run; matches never cross it.
        std::size_t run_end = i;
        while (run_end < n && is_matchable(sentence[run_end])) ++run_end;

        std::size_t longest = std::min(lexicon.max_word_len(), run_end - i);
        std::u32string match;
        for (std::size_t len = longest; len >= 1; --len) {
            std::u32string candidate(sentence.substr(i, len));
            if (lexicon.contains(candidate)) {
                match = std::move(candidate);
                break;
            }
        }
        if (match.empty()) match.assign(1, sentence[i]);
        i += match.size();
        tokens.push_back(std::move(match));
    }
    return tokens;
}

std::vector<std::u32string> tokenize(std::u32string_view sentence,
                                     const TokenizationConfig& config,
                                     const Lexicon* lexicon) {
    switch (config.mode) {
        case TokenMode::HanCharacter:
            return tokenize_han(sentence);
        case TokenMode::LatinWord:
            return tokenize_latin(sentence, config.lowercase_fold);
        case TokenMode::LexiconSegmented:
            if (lexicon == nullptr) throw EmptyLexiconError("segmented mode requires a lexicon");
            return segment_max_match(sentence, *lexicon);
    }
    throw InternalError("unknown token mode");
}

Lexicon build_lexicon(const std::vector<std::u32string>& words) {
    Lexicon lexicon;
    for (const auto& raw : words) {
        std::u32string word = uni::nfc(raw);
        std::size_t begin = 0;
        std::size_t end = word.size();
        while (begin < end && uni::is_space(word[begin])) ++begin;
        while (end > begin && uni::is_space(word[end - 1])) --end;
        word = word.substr(begin, end - begin);
        if (word.empty()) continue;
        if (std::any_of(word.begin(), word.end(), [](char32_t cp) { return uni::is_space(cp); }))
            continue;
        lexicon.max_word_len_ = std::max(lexicon.max_word_len_, word.size());
        lexicon.words_.insert(std::move(word));
    }
    return lexicon;
}

Lexicon load_lexicon(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open lexicon file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("cannot read lexicon file: " + path.string());

    const std::u32string content = uni::decode_utf8(buffer.str());
    std::vector<std::u32string> words;
    std::u32string line;
    auto take = [&] {
        if (!line.empty() && line.front() != U'#') words.push_back(line);
        line.clear();
    };
    for (char32_t cp : content) {
        if (cp == U'\n' || cp == U'\r') {
            take();
        } else {
            line.push_back(cp);
        }
    }
    take();

    Lexicon lexicon = build_lexicon(words);
    if (lexicon.empty()) throw EmptyLexiconError("lexicon file has no entries: " + path.string());
    return lexicon;
}

}  // namespace sentropy

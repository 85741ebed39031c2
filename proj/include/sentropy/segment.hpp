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

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace sentropy {

enum class TokenMode {
    HanCharacter,
    LatinWord,
    LexiconSegmented,
};

// How a document is cut into sentences and tokens. `lowercase_fold` only
// affects LatinWord mode.
struct TokenizationConfig {
    TokenMode mode = TokenMode::HanCharacter;
    std::u32string terminators = U".!?。！？";
    bool lowercase_fold = true;
};

// Immutable word list driving lexicon-based segmentation. Entries are
// NFC-normalized, deduplicated, and free of whitespace.
class Lexicon {
  public:
    Lexicon() = default;

    bool contains(const std::u32string& word) const { return words_.count(word) != 0; }
    std::size_t max_word_len() const noexcept { return max_word_len_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }

  private:
    friend Lexicon build_lexicon(const std::vector<std::u32string>& words);

    std::unordered_set<std::u32string> words_;
    std::size_t max_word_len_ = 0;
};

// True for scalars in the unified ideograph blocks (U+4E00..U+9FFF and
// U+3400..U+4DBF).
bool is_han(char32_t cp) noexcept;

// Splits at every terminator scalar. Terminators are consumed; empty and
// whitespace-only segments are dropped; a trailing unterminated segment is
// kept. Throws ValidationError if config.terminators is empty.
std::vector<std::u32string> split_sentences(std::u32string_view text,
                                            const TokenizationConfig& config);

// Every Han scalar becomes a one-scalar token, in order; everything else is
// discarded.
std::vector<std::u32string> tokenize_han(std::u32string_view sentence);

// Splits on anything that is not a letter, digit, or intra-word
// apostrophe/hyphen (which require a word scalar on both sides).
std::vector<std::u32string> tokenize_latin(std::u32string_view sentence, bool lowercase_fold);

// Forward maximum matching. Scalars that are neither Han nor letters are
// skipped and also act as match barriers; at each position the longest
// lexicon word wins, with a single-scalar fallback. Joining the output
// equals the input restricted to matchable scalars. Throws EmptyLexiconError.
std::vector<std::u32string> segment_max_match(std::u32string_view sentence,
                                              const Lexicon& lexicon);

// Dispatches on config.mode. LexiconSegmented requires a non-empty lexicon.
std::vector<std::u32string> tokenize(std::u32string_view sentence,
                                     const TokenizationConfig& config,
                                     const Lexicon* lexicon = nullptr);

// NFC-normalizes, trims surrounding whitespace, drops entries that are empty
// or contain embedded whitespace, deduplicates.
Lexicon build_lexicon(const std::vector<std::u32string>& words);

// One word per line; '#' comment lines and blank lines ignored. Throws
// IoError, EncodingError, or EmptyLexiconError when no entries survive.
Lexicon load_lexicon(const std::filesystem::path& path);

}  // namespace sentropy

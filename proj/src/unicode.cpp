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

#include "sentropy/unicode.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>

#include "sentropy/errors.hpp"

namespace sentropy::uni {
namespace {

struct DecompEntry {
    char32_t cp;
    std::uint32_t offset;
    std::uint8_t len;
};
struct CombiningEntry {
    char32_t cp;
    std::uint8_t ccc;
};
struct CompositionPair {
    char32_t first;
    char32_t second;
    char32_t composed;
};
struct CharRange {
    char32_t lo;
    char32_t hi;
};
struct LowerEntry {
    char32_t cp;
    char32_t lower;
};

#include "unicode_tables.inc"

// Hangul syllables compose and decompose algorithmically (Unicode ch. 3.12).
constexpr char32_t kHangulSBase = 0xAC00;
constexpr char32_t kHangulLBase = 0x1100;
constexpr char32_t kHangulVBase = 0x1161;
constexpr char32_t kHangulTBase = 0x11A7;
constexpr int kHangulLCount = 19;
constexpr int kHangulVCount = 21;
constexpr int kHangulTCount = 28;
constexpr int kHangulNCount = kHangulVCount * kHangulTCount;
constexpr int kHangulSCount = kHangulLCount * kHangulNCount;

template <std::size_t N>
bool in_ranges(const CharRange (&table)[N], char32_t cp) {
    auto it = std::upper_bound(std::begin(table), std::end(table), cp,
                               [](char32_t v, const CharRange& r) { return v < r.lo; });
    if (it == std::begin(table)) return false;
    --it;
    return cp <= it->hi;
}

int combining_class(char32_t cp) {
    auto it = std::lower_bound(std::begin(kCombiningClasses), std::end(kCombiningClasses), cp,
                               [](const CombiningEntry& e, char32_t v) { return e.cp < v; });
    if (it != std::end(kCombiningClasses) && it->cp == cp) return it->ccc;
    return 0;
}

void decompose_scalar(char32_t cp, std::u32string& out) {
    if (cp >= kHangulSBase && cp < kHangulSBase + kHangulSCount) {
        const int index = static_cast<int>(cp - kHangulSBase);
        out.push_back(kHangulLBase + index / kHangulNCount);
        out.push_back(kHangulVBase + (index % kHangulNCount) / kHangulTCount);
        const int t = index % kHangulTCount;
        if (t != 0) out.push_back(kHangulTBase + t);
        return;
    }
    auto it = std::lower_bound(std::begin(kDecompEntries), std::end(kDecompEntries), cp,
                               [](const DecompEntry& e, char32_t v) { return e.cp < v; });
    if (it != std::end(kDecompEntries) && it->cp == cp) {
        // Pool entries are full canonical expansions; no recursion needed.
        out.append(kDecompPool + it->offset, it->len);
        return;
    }
    out.push_back(cp);
}

// Canonical ordering: stable sort of nonzero-ccc runs.
void order_canonically(std::u32string& s) {
    for (std::size_t i = 1; i < s.size(); ++i) {
        const int ccc = combining_class(s[i]);
        if (ccc == 0) continue;
        std::size_t j = i;
        while (j > 0) {
            const int prev = combining_class(s[j - 1]);
            if (prev == 0 || prev <= ccc) break;
            std::swap(s[j - 1], s[j]);
            --j;
        }
    }
}

bool compose_pair(char32_t a, char32_t b, char32_t* out) {
    if (a >= kHangulLBase && a < kHangulLBase + kHangulLCount && b >= kHangulVBase &&
        b < kHangulVBase + kHangulVCount) {
        const int l = static_cast<int>(a - kHangulLBase);
        const int v = static_cast<int>(b - kHangulVBase);
        *out = kHangulSBase + (l * kHangulVCount + v) * kHangulTCount;
        return true;
    }
    if (a >= kHangulSBase && a < kHangulSBase + kHangulSCount &&
        (a - kHangulSBase) % kHangulTCount == 0 && b > kHangulTBase &&
        b < kHangulTBase + kHangulTCount) {
        *out = a + (b - kHangulTBase);
        return true;
    }
    auto it = std::lower_bound(
        std::begin(kCompositionPairs), std::end(kCompositionPairs), std::pair{a, b},
        [](const CompositionPair& e, const std::pair<char32_t, char32_t>& v) {
            return e.first != v.first ? e.first < v.first : e.second < v.second;
        });
    if (it != std::end(kCompositionPairs) && it->first == a && it->second == b) {
        *out = it->composed;
        return true;
    }
    return false;
}

// Canonical composition over a decomposed, canonically ordered string
// (UAX #15 algorithm).
std::u32string compose(const std::u32string& s) {
    std::u32string out;
    out.reserve(s.size());
    std::ptrdiff_t starter = -1;
    for (char32_t c : s) {
        const int ccc = combining_class(c);
        if (starter >= 0) {
            const bool blocked = static_cast<std::size_t>(starter) + 1 < out.size() &&
                                 combining_class(out.back()) >= ccc;
            char32_t composed;
            if (!blocked && compose_pair(out[static_cast<std::size_t>(starter)], c, &composed)) {
                out[static_cast<std::size_t>(starter)] = composed;
                continue;
            }
        }
        out.push_back(c);
        if (ccc == 0) starter = static_cast<std::ptrdiff_t>(out.size()) - 1;
    }
    return out;
}

}  // namespace

std::u32string decode_utf8(std::string_view bytes) {
    std::u32string out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    while (i < bytes.size()) {
        const auto b0 = static_cast<unsigned char>(bytes[i]);
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        }
        std::size_t len;
        char32_t cp;
        char32_t min;
        if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1Fu;
            min = 0x80;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0Fu;
            min = 0x800;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07u;
            min = 0x10000;
        } else {
            throw EncodingError("invalid UTF-8 lead byte", i);
        }
        if (i + len > bytes.size()) throw EncodingError("truncated UTF-8 sequence", i);
        for (std::size_t j = 1; j < len; ++j) {
            const auto b = static_cast<unsigned char>(bytes[i + j]);
            if ((b & 0xC0) != 0x80) throw EncodingError("invalid UTF-8 continuation byte", i);
            cp = (cp << 6) | (b & 0x3Fu);
        }
        if (cp < min) throw EncodingError("overlong UTF-8 sequence", i);
        if (cp >= 0xD800 && cp <= 0xDFFF) throw EncodingError("UTF-8 encodes a surrogate", i);
        if (cp > 0x10FFFF) throw EncodingError("code point above U+10FFFF", i);
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string encode_utf8(std::u32string_view scalars) {
    std::string out;
    out.reserve(scalars.size());
    for (char32_t cp : scalars) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

std::u32string nfc(std::u32string_view scalars) {
    std::u32string decomposed;
    decomposed.reserve(scalars.size());
    for (char32_t cp : scalars) decompose_scalar(cp, decomposed);
    order_canonically(decomposed);
    return compose(decomposed);
}

bool is_nfc(std::u32string_view scalars) { return nfc(scalars) == scalars; }

bool is_letter(char32_t cp) { return in_ranges(kLetterRanges, cp); }

bool is_digit(char32_t cp) { return in_ranges(kDigitRanges, cp); }

bool is_space(char32_t cp) { return in_ranges(kSpaceRanges, cp); }

char32_t to_lower(char32_t cp) {
    auto it = std::lower_bound(std::begin(kLowerPairs), std::end(kLowerPairs), cp,
                               [](const LowerEntry& e, char32_t v) { return e.cp < v; });
    if (it != std::end(kLowerPairs) && it->cp == cp) return it->lower;
    return cp;
}

}  // namespace sentropy::uni

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

#ifndef SENTROPY_UNICODE_HPP
#define SENTROPY_UNICODE_HPP

#include <string>
#include <string_view>

namespace sentropy::uni {

/// Decodes strict UTF-8 into a scalar sequence. Overlong forms, surrogate
/// code points, values above U+10FFFF and truncated sequences all raise
/// EncodingError carrying the byte offset of the offending sequence.
std::u32string decode_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view scalars);

/// Canonical composition (NFC). Idempotent: nfc(nfc(s)) == nfc(s).
std::u32string nfc(std::u32string_view scalars);

bool is_nfc(std::u32string_view scalars);

/// Unicode general category L* (letters of any script).
bool is_letter(char32_t cp);

/// Decimal digit (category Nd).
bool is_digit(char32_t cp);

/// Whitespace: category Zs plus the usual control separators.
bool is_space(char32_t cp);

/// Simple (single-scalar) lowercase mapping; identity when none exists.
char32_t to_lower(char32_t cp);

}  // namespace sentropy::uni

#endif  // SENTROPY_UNICODE_HPP

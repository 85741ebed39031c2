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

#include "sentropy/text.hpp"

#include <fstream>
#include <sstream>

#include "sentropy/errors.hpp"
#include "sentropy/unicode.hpp"

namespace sentropy {

std::u32string normalize_document_bytes(std::string_view bytes) {
    std::u32string scalars = uni::decode_utf8(bytes);
    std::size_t begin = 0;
    if (!scalars.empty() && scalars.front() == U'﻿') begin = 1;

    std::u32string folded;
    folded.reserve(scalars.size() - begin);
    for (std::size_t i = begin; i < scalars.size(); ++i) {
        if (scalars[i] == U'\r') {
            folded.push_back(U'\n');
            if (i + 1 < scalars.size() && scalars[i + 1] == U'\n') ++i;
        } else {
            folded.push_back(scalars[i]);
        }
    }
    return uni::nfc(folded);
}

DocumentText load_document(const std::filesystem::path& path, const std::string& label) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open document: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("cannot read document: " + path.string());
    return DocumentText{label, normalize_document_bytes(buffer.str()), path};
}

}  // namespace sentropy

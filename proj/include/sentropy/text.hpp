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

#include <filesystem>
#include <string>
#include <string_view>

namespace sentropy {

// A loaded document: NFC-normalized scalars, LF line breaks, no BOM.
struct DocumentText {
    std::string label;
    std::u32string content;
    std::filesystem::path source_path;
};

// Strict UTF-8 decode, leading BOM stripped, CRLF/CR folded to LF, NFC.
std::u32string normalize_document_bytes(std::string_view bytes);

// Reads the file and normalizes it. Throws IoError or EncodingError.
DocumentText load_document(const std::filesystem::path& path, const std::string& label);

}  // namespace sentropy

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
#include <optional>
#include <string>
#include <vector>

#include "sentropy/segment.hpp"

namespace sentropy {

struct ManifestSample {
    std::string label;
    std::filesystem::path path;
    TokenMode mode = TokenMode::HanCharacter;
    std::optional<std::filesystem::path> lexicon_path;
};

// Ordered list of samples to analyze. Labels are unique; lexicon_path is
// present exactly when mode is LexiconSegmented.
struct CorpusManifest {
    std::vector<ManifestSample> samples;
};

// Maps "han-character" / "latin-word" / "lexicon-segmented". Throws
// SchemaError on anything else.
TokenMode parse_token_mode(const std::string& name);
const char* token_mode_name(TokenMode mode) noexcept;

// Parses and validates a manifest JSON file. Relative sample paths are
// resolved against the manifest's directory. Throws IoError, SchemaError
// (with the offending field path), or ValidationError.
CorpusManifest load_manifest(const std::filesystem::path& path);

}  // namespace sentropy

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

#include <vector>

#include "sentropy/manifest.hpp"
#include "sentropy/profile.hpp"
#include "sentropy/segment.hpp"
#include "sentropy/text.hpp"

namespace sentropy {

// Sentence-splits and tokenizes a document. Sentences that yield no tokens
// (punctuation-only, foreign-script-only) are dropped.
std::vector<std::vector<std::u32string>> tokenize_document(const DocumentText& doc,
                                                           const TokenizationConfig& config,
                                                           const Lexicon* lexicon = nullptr);

// tokenize_document followed by profile().
CorpusProfile profile_document(const DocumentText& doc, const TokenizationConfig& config,
                               const Lexicon* lexicon = nullptr);

// Loads and profiles one manifest sample (document, mode, optional lexicon).
CorpusProfile profile_sample(const ManifestSample& sample);

// Profiles every sample, in manifest order.
std::vector<CorpusProfile> profile_manifest(const CorpusManifest& manifest);

}  // namespace sentropy

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

#include "sentropy/pipeline.hpp"

namespace sentropy {

std::vector<std::vector<std::u32string>> tokenize_document(const DocumentText& doc,
                                                           const TokenizationConfig& config,
                                                           const Lexicon* lexicon) {
    std::vector<std::vector<std::u32string>> tokenized;
    for (const auto& sentence : split_sentences(doc.content, config)) {
        auto tokens = tokenize(sentence, config, lexicon);
        if (!tokens.empty()) tokenized.push_back(std::move(tokens));
    }
    return tokenized;
}

CorpusProfile profile_document(const DocumentText& doc, const TokenizationConfig& config,
                               const Lexicon* lexicon) {
    return profile(doc.label, tokenize_document(doc, config, lexicon));
}

CorpusProfile profile_sample(const ManifestSample& sample) {
    const DocumentText doc = load_document(sample.path, sample.label);
    TokenizationConfig config;
    config.mode = sample.mode;
    if (sample.mode == TokenMode::LexiconSegmented) {
        const Lexicon lexicon = load_lexicon(*sample.lexicon_path);
        return profile_document(doc, config, &lexicon);
    }
    return profile_document(doc, config);
}

std::vector<CorpusProfile> profile_manifest(const CorpusManifest& manifest) {
    std::vector<CorpusProfile> profiles;
    profiles.reserve(manifest.samples.size());
    for (const auto& sample : manifest.samples) profiles.push_back(profile_sample(sample));
    return profiles;
}

}  // namespace sentropy

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

#include "sentropy/manifest.hpp"

#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "sentropy/errors.hpp"

namespace sentropy {
namespace {

using nlohmann::json;

json parse_json_file(const std::filesystem::path& path, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(std::string("cannot open ") + what + ": " + path.string());
    json parsed;
    try {
        parsed = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string(what) + " is not valid JSON: " + path.string() + ": " +
                          e.what());
    }
    return parsed;
}

std::string require_string(const json& obj, const std::string& field_path, const char* key) {
    if (!obj.contains(key))
        throw SchemaError("missing field " + field_path + "." + key);
    const json& v = obj.at(key);
    if (!v.is_string())
        throw SchemaError("field " + field_path + "." + key + " must be a string");
    return v.get<std::string>();
}

void reject_unknown_keys(const json& obj, const std::string& field_path,
                         std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) throw SchemaError("unknown field " + field_path + "." + item.key());
    }
}

std::filesystem::path resolve_against(const std::filesystem::path& base,
                                      const std::filesystem::path& p) {
    return p.is_absolute() ? p : base / p;
}

}  // namespace

TokenMode parse_token_mode(const std::string& name) {
    if (name == "han-character") return TokenMode::HanCharacter;
    if (name == "latin-word") return TokenMode::LatinWord;
    if (name == "lexicon-segmented") return TokenMode::LexiconSegmented;
    throw SchemaError("unknown mode \"" + name +
                      "\" (expected han-character, latin-word, or lexicon-segmented)");
}

const char* token_mode_name(TokenMode mode) noexcept {
    switch (mode) {
        case TokenMode::HanCharacter:
            return "han-character";
        case TokenMode::LatinWord:
            return "latin-word";
        case TokenMode::LexiconSegmented:
            return "lexicon-segmented";
    }
    return "unknown";
}

CorpusManifest load_manifest(const std::filesystem::path& path) {
    const json root = parse_json_file(path, "manifest");
    if (!root.is_object()) throw SchemaError("manifest root must be an object");
    reject_unknown_keys(root, "manifest", {"samples"});
    if (!root.contains("samples")) throw SchemaError("missing field manifest.samples");
    const json& samples = root.at("samples");
    if (!samples.is_array()) throw SchemaError("field manifest.samples must be an array");

    const std::filesystem::path base = path.parent_path();
    CorpusManifest manifest;
    std::unordered_set<std::string> seen_labels;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const std::string field_path = "samples[" + std::to_string(i) + "]";
        const json& entry = samples[i];
        if (!entry.is_object()) throw SchemaError("field " + field_path + " must be an object");
        reject_unknown_keys(entry, field_path, {"label", "path", "mode", "lexicon_path"});

        ManifestSample sample;
        sample.label = require_string(entry, field_path, "label");
        sample.path = resolve_against(base, require_string(entry, field_path, "path"));
        try {
            sample.mode = parse_token_mode(require_string(entry, field_path, "mode"));
        } catch (const SchemaError& e) {
            throw SchemaError(field_path + ".mode: " + e.what());
        }
        if (entry.contains("lexicon_path")) {
            const json& lp = entry.at("lexicon_path");
            if (!lp.is_string())
                throw SchemaError("field " + field_path + ".lexicon_path must be a string");
            sample.lexicon_path = resolve_against(base, lp.get<std::string>());
        }

        if (!seen_labels.insert(sample.label).second)
            throw ValidationError("duplicate sample label \"" + sample.label + "\"");
        if (sample.mode == TokenMode::LexiconSegmented && !sample.lexicon_path)
            throw ValidationError("sample \"" + sample.label +
                                  "\" uses lexicon-segmented mode but has no lexicon_path");
        if (sample.mode != TokenMode::LexiconSegmented && sample.lexicon_path)
            throw ValidationError("sample \"" + sample.label +
                                  "\" has a lexicon_path but mode is not lexicon-segmented");
        manifest.samples.push_back(std::move(sample));
    }
    return manifest;
}

}  // namespace sentropy

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

#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "sentropy/errors.hpp"
#include "sentropy/manifest.hpp"

using namespace sentropy;

namespace {

class TempManifest {
  public:
    explicit TempManifest(const std::string& json) {
        static int counter = 0;
        dir_ = std::filesystem::temp_directory_path() /
               ("sentropy_manifest_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++));
        std::filesystem::create_directories(dir_);
        path_ = dir_ / "manifest.json";
        std::ofstream out(path_, std::ios::binary);
        out << json;
    }
    ~TempManifest() { std::filesystem::remove_all(dir_); }
    const std::filesystem::path& path() const { return path_; }
    const std::filesystem::path& dir() const { return dir_; }

  private:
    std::filesystem::path dir_;
    std::filesystem::path path_;
};

}  // namespace

TEST_CASE("a two-sample manifest parses with resolved paths") {
    TempManifest m(R"({"samples": [
        {"label": "zh", "path": "zh.txt", "mode": "han-character"},
        {"label": "en", "path": "/abs/en.txt", "mode": "latin-word"}
    ]})");
    const CorpusManifest manifest = load_manifest(m.path());
    REQUIRE(manifest.samples.size() == 2);
    CHECK(manifest.samples[0].label == "zh");
    CHECK(manifest.samples[0].mode == TokenMode::HanCharacter);
    CHECK(manifest.samples[0].path == m.dir() / "zh.txt");
    CHECK_FALSE(manifest.samples[0].lexicon_path.has_value());
    CHECK(manifest.samples[1].path == std::filesystem::path("/abs/en.txt"));
    CHECK(manifest.samples[1].mode == TokenMode::LatinWord);
}

TEST_CASE("lexicon-segmented samples carry their lexicon path") {
    TempManifest m(R"({"samples": [
        {"label": "w", "path": "w.txt", "mode": "lexicon-segmented", "lexicon_path": "dict.txt"}
    ]})");
    const CorpusManifest manifest = load_manifest(m.path());
    REQUIRE(manifest.samples.size() == 1);
    REQUIRE(manifest.samples[0].lexicon_path.has_value());
    CHECK(*manifest.samples[0].lexicon_path == m.dir() / "dict.txt");
}

TEST_CASE("duplicate labels are rejected") {
    TempManifest m(R"({"samples": [
        {"label": "I", "path": "a.txt", "mode": "han-character"},
        {"label": "I", "path": "b.txt", "mode": "han-character"}
    ]})");
    CHECK_THROWS_AS(load_manifest(m.path()), ValidationError);
}

TEST_CASE("lexicon_path must match the mode in both directions") {
    TempManifest missing(R"({"samples": [
        {"label": "w", "path": "w.txt", "mode": "lexicon-segmented"}
    ]})");
    CHECK_THROWS_AS(load_manifest(missing.path()), ValidationError);

    TempManifest spurious(R"({"samples": [
        {"label": "c", "path": "c.txt", "mode": "han-character", "lexicon_path": "dict.txt"}
    ]})");
    CHECK_THROWS_AS(load_manifest(spurious.path()), ValidationError);
}

TEST_CASE("schema violations name the offending field") {
    TempManifest bad_mode(R"({"samples": [
        {"label": "x", "path": "x.txt", "mode": "word-ish"}
    ]})");
    try {
        load_manifest(bad_mode.path());
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("samples[0].mode") != std::string::npos);
    }

    TempManifest missing_field(R"({"samples": [{"label": "x", "mode": "latin-word"}]})");
    try {
        load_manifest(missing_field.path());
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("samples[0].path") != std::string::npos);
    }

    TempManifest unknown_key(R"({"samples": [
        {"label": "x", "path": "x.txt", "mode": "latin-word", "lexicon_pth": "d.txt"}
    ]})");
    CHECK_THROWS_AS(load_manifest(unknown_key.path()), SchemaError);

    TempManifest not_json("{nope");
    CHECK_THROWS_AS(load_manifest(not_json.path()), SchemaError);

    TempManifest wrong_root(R"(["samples"])");
    CHECK_THROWS_AS(load_manifest(wrong_root.path()), SchemaError);
}

TEST_CASE("missing manifest file is an IoError") {
    CHECK_THROWS_AS(load_manifest("/nonexistent/manifest.json"), IoError);
}

TEST_CASE("token mode names round trip") {
    for (const char* name : {"han-character", "latin-word", "lexicon-segmented"}) {
        CHECK(token_mode_name(parse_token_mode(name)) == std::string(name));
    }
    CHECK_THROWS_AS(parse_token_mode("hanzi"), SchemaError);
}

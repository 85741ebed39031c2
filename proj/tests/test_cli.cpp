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

// Drives the installed binary end to end through a shell, the way a user
// would. Each invocation captures stdout, stderr, and the exit code.

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using json = nlohmann::ordered_json;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::filesystem::path scratch_dir() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("sentropy_cli_" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const auto base = scratch_dir() / ("run_" + std::to_string(counter++));
    const auto out_path = base.string() + ".out";
    const auto err_path = base.string() + ".err";
    const std::string cmd = std::string("\"") + SENTROPY_CLI_PATH + "\" " + args + " > \"" +
                            out_path + "\" 2> \"" + err_path + "\"";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

std::filesystem::path write_file(const std::string& name, const std::string& bytes) {
    const auto path = scratch_dir() / name;
    std::ofstream out(path, std::ios::binary);
    out << bytes;
    return path;
}

std::string counts_path(const std::string& name) {
    return std::string(SENTROPY_SOURCE_DIR) + "/data/counts/" + name;
}

std::string quoted(const std::filesystem::path& path) { return "\"" + path.string() + "\""; }

}  // namespace

TEST_CASE("from-counts reproduces the first character sample") {
    const RunResult r = run_cli("from-counts \"" + counts_path("zh_char_I.json") + "\"");
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out ==
          "label,total_tokens,vocab_size,sigma,sigma_norm\n"
          "I,79959,2553,5.018e-1,6.275e-2\n");
}

TEST_CASE("from-counts keeps the argument order across files") {
    const RunResult r = run_cli("from-counts \"" + counts_path("en_word_IV.json") + "\" \"" +
                                counts_path("en_word_III.json") + "\"");
    CHECK(r.code == 0);
    const auto pos_iv = r.out.find("\nIV,");
    const auto pos_iii = r.out.find("\nIII,");
    CHECK(pos_iv != std::string::npos);
    CHECK(pos_iii != std::string::npos);
    CHECK(pos_iv < pos_iii);
}

TEST_CASE("from-counts json output is valid and carries full precision") {
    const RunResult r =
        run_cli("from-counts --format json \"" + counts_path("zh_char_I.json") + "\"");
    CHECK(r.code == 0);
    const json parsed = json::parse(r.out);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0]["label"] == "I");
    CHECK(parsed[0]["total_tokens"] == 79959);
    CHECK(parsed[0]["vocab_size"] == 2553);
    CHECK(parsed[0]["sigma"].get<double>() == doctest::Approx(0.50180).epsilon(1e-4));
}

TEST_CASE("from-counts text output is aligned, not comma separated") {
    const RunResult r =
        run_cli("from-counts --format text \"" + counts_path("zh_char_I.json") + "\"");
    CHECK(r.code == 0);
    CHECK(r.out.find("label") == 0);
    CHECK(r.out.find("5.018e-1") != std::string::npos);
    CHECK(r.out.find(',') == std::string::npos);
}

TEST_CASE("norm base rescales the normalized column") {
    const RunResult r = run_cli("from-counts --norm-base 20000 \"" +
                                counts_path("zh_char_I.json") + "\"");
    CHECK(r.code == 0);
    CHECK(r.out.find("1.255e-1") != std::string::npos);
}

TEST_CASE("analyze walks a manifest and is byte-for-byte deterministic") {
    write_file("cli_zh.txt", "你好。再见。你好！");
    write_file("cli_en.txt", "One two three. Four five.");
    const auto manifest = write_file("cli_manifest.json", R"({"samples": [
        {"label": "zh", "path": "cli_zh.txt", "mode": "han-character"},
        {"label": "en", "path": "cli_en.txt", "mode": "latin-word"}
    ]})");

    const RunResult first = run_cli("analyze --manifest " + quoted(manifest));
    CHECK(first.code == 0);
    CHECK(first.err.empty());
    CHECK(first.out.find("label,total_tokens,vocab_size,sigma,sigma_norm\n") == 0);
    CHECK(first.out.find("zh,6,4,") != std::string::npos);
    CHECK(first.out.find("en,5,5,") != std::string::npos);

    const RunResult second = run_cli("analyze --manifest " + quoted(manifest));
    CHECK(second.out == first.out);
    CHECK(second.code == 0);
}

TEST_CASE("analyze --per-len appends one block per sample") {
    write_file("cli_perlen.txt", "你好。山！");
    const auto manifest = write_file("cli_perlen_manifest.json", R"({"samples": [
        {"label": "p", "path": "cli_perlen.txt", "mode": "han-character"}
    ]})");
    const RunResult csv = run_cli("analyze --per-len --manifest " + quoted(manifest));
    CHECK(csv.code == 0);
    CHECK(csv.out.find("# per-len label=p") != std::string::npos);
    CHECK(csv.out.find("k,h_max,h_realized,cumulative") != std::string::npos);

    const RunResult as_json =
        run_cli("analyze --per-len --format json --manifest " + quoted(manifest));
    CHECK(as_json.code == 0);
    const json parsed = json::parse(as_json.out);
    CHECK(parsed.contains("summary"));
    REQUIRE(parsed.contains("per_len"));
    CHECK(parsed["per_len"].contains("p"));
}

TEST_CASE("analyze reports a missing manifest on stderr and keeps stdout clean") {
    const RunResult r = run_cli("analyze --manifest /nonexistent/manifest.json");
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("/nonexistent/manifest.json") != std::string::npos);
}

TEST_CASE("analyze rejects a manifest pointing at missing text") {
    const auto manifest = write_file("cli_missing_text.json", R"({"samples": [
        {"label": "x", "path": "no_such_text.txt", "mode": "han-character"}
    ]})");
    const RunResult r = run_cli("analyze --manifest " + quoted(manifest));
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("no_such_text.txt") != std::string::npos);
}

TEST_CASE("distribution prints the sentence-length histogram") {
    write_file("cli_dist.txt", "a b. c d. e.");
    const auto manifest = write_file("cli_dist_manifest.json", R"({"samples": [
        {"label": "d", "path": "cli_dist.txt", "mode": "latin-word"}
    ]})");
    const RunResult r =
        run_cli("distribution --manifest " + quoted(manifest) + " --label d");
    CHECK(r.code == 0);
    CHECK(r.out == "k,count\n1,1\n2,2\n");
}

TEST_CASE("distribution with an unknown label fails cleanly") {
    write_file("cli_dist2.txt", "a b.");
    const auto manifest = write_file("cli_dist2_manifest.json", R"({"samples": [
        {"label": "d", "path": "cli_dist2.txt", "mode": "latin-word"}
    ]})");
    const RunResult r =
        run_cli("distribution --manifest " + quoted(manifest) + " --label nope");
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("nope") != std::string::npos);
}

TEST_CASE("compare joins two summaries and prints the ratio columns") {
    const RunResult a = run_cli("from-counts --format json \"" +
                                counts_path("en_word_III.json") + "\"");
    const RunResult b = run_cli("from-counts --format json \"" +
                                counts_path("en_word_IV.json") + "\"");
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    const auto path_a = write_file("cli_cmp_a.json", a.out);
    const auto path_b = write_file("cli_cmp_b.json", b.out);

    const RunResult r = run_cli("compare " + quoted(path_a) + " " + quoted(path_b));
    CHECK(r.code == 0);
    CHECK(r.out.find("label_a,label_b,sigma_a,sigma_b,sigma_delta,sigma_ratio,"
                     "sigma_norm_a,sigma_norm_b,sigma_norm_delta,sigma_norm_ratio\n") == 0);
    CHECK(r.out.find("III,IV,") != std::string::npos);
    // normalized entropy of sample IV over sample III
    CHECK(r.out.find("6.84") != std::string::npos);

    const RunResult same = run_cli("compare " + quoted(path_a) + " " + quoted(path_a));
    CHECK(same.code == 0);
    CHECK(same.out.find("0.000e0") != std::string::npos);
    CHECK(same.out.find("1.000e0") != std::string::npos);
}

TEST_CASE("compare rejects malformed summary JSON") {
    const auto bad = write_file("cli_cmp_bad.json", "{not json");
    const RunResult r = run_cli("compare " + quoted(bad) + " " + quoted(bad));
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(!r.err.empty());
}

TEST_CASE("unknown format is a usage error") {
    const RunResult r =
        run_cli("from-counts --format yaml \"" + counts_path("zh_char_I.json") + "\"");
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("yaml") != std::string::npos);
}

TEST_CASE("running without a subcommand fails with usage help") {
    const RunResult r = run_cli("");
    CHECK(r.code == 1);
    CHECK(!r.err.empty());
}

TEST_CASE("--help succeeds and documents the subcommands") {
    const RunResult r = run_cli("--help");
    CHECK(r.code == 0);
    CHECK(r.out.find("analyze") != std::string::npos);
    CHECK(r.out.find("from-counts") != std::string::npos);
    CHECK(r.out.find("distribution") != std::string::npos);
    CHECK(r.out.find("compare") != std::string::npos);
}

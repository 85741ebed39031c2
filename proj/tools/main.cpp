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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sentropy/commands.hpp"
#include "sentropy/errors.hpp"

namespace {

sentropy::Format to_format(const std::string& name) { return sentropy::parse_format(name); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sentence-configuration entropy analyzer"};
    app.require_subcommand(1);

    std::string format_name = "csv";

    auto* analyze = app.add_subcommand(
        "analyze", "Tokenize the samples of a manifest and print an entropy summary");
    std::string analyze_manifest;
    std::uint64_t analyze_norm_base = 10000;
    bool analyze_per_len = false;
    analyze->add_option("--manifest", analyze_manifest, "Manifest JSON file")->required();
    analyze->add_option("--format", format_name, "csv, json, or text");
    analyze->add_option("--norm-base", analyze_norm_base,
                        "Token count sigma is normalized to (default 10000)");
    analyze->add_flag("--per-len", analyze_per_len, "Also print per-length entropy tables");

    auto* from_counts = app.add_subcommand(
        "from-counts", "Compute the summary from published count files instead of raw text");
    std::vector<std::string> counts_files;
    std::uint64_t counts_norm_base = 10000;
    from_counts->add_option("files", counts_files, "Counts JSON files")
        ->required()
        ->expected(-1);
    from_counts->add_option("--format", format_name, "csv, json, or text");
    from_counts->add_option("--norm-base", counts_norm_base,
                            "Token count sigma is normalized to (default 10000)");

    auto* distribution = app.add_subcommand(
        "distribution", "Print the sentence-length histogram of one manifest sample");
    std::string distribution_manifest;
    std::string distribution_label;
    distribution->add_option("--manifest", distribution_manifest, "Manifest JSON file")
        ->required();
    distribution->add_option("--label", distribution_label, "Sample label")->required();

    auto* compare =
        app.add_subcommand("compare", "Compare two summary JSON files row by row");
    std::string compare_a;
    std::string compare_b;
    compare->add_option("a", compare_a, "First summary JSON file")->required();
    compare->add_option("b", compare_b, "Second summary JSON file")->required();
    compare->add_option("--format", format_name, "csv, json, or text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? sentropy::kExitOk : sentropy::kExitUserError;
    }

    sentropy::Format format = sentropy::Format::Csv;
    try {
        format = to_format(format_name);
    } catch (const sentropy::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return sentropy::kExitUserError;
    }

    if (analyze->parsed()) {
        const sentropy::AnalyzeOptions options{analyze_manifest, format, analyze_norm_base,
                                               analyze_per_len};
        return sentropy::cmd_analyze(options, std::cout, std::cerr);
    }
    if (from_counts->parsed()) {
        sentropy::FromCountsOptions options;
        options.counts_paths.assign(counts_files.begin(), counts_files.end());
        options.format = format;
        options.norm_base = counts_norm_base;
        return sentropy::cmd_from_counts(options, std::cout, std::cerr);
    }
    if (distribution->parsed()) {
        const sentropy::DistributionOptions options{distribution_manifest, distribution_label};
        return sentropy::cmd_distribution(options, std::cout, std::cerr);
    }
    if (compare->parsed()) {
        const sentropy::CompareOptions options{compare_a, compare_b, format};
        return sentropy::cmd_compare(options, std::cout, std::cerr);
    }
    std::cerr << "error: no command\n";
    return sentropy::kExitUserError;
}

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

#include "sentropy/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "sentropy/errors.hpp"
#include "sentropy/pipeline.hpp"

namespace sentropy {
namespace {

std::string read_file(const std::filesystem::path& path, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(std::string("cannot open ") + what + ": " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError(std::string("cannot read ") + what + ": " + path.string());
    return buffer.str();
}

void emit_warnings(const std::vector<EntropyReport>& reports, std::ostream& err) {
    for (const auto& report : reports)
        for (const auto& warning : report.warnings)
            err << "warning: " << report.label << ": " << warning << "\n";
}

std::string render_with_per_len(const std::vector<EntropyReport>& reports, Format format,
                                bool per_len) {
    if (!per_len || format != Format::Json) {
        std::string out = render_summary(reports, format);
        if (!per_len) return out;
        for (const auto& report : reports) {
            if (format == Format::Csv) {
                out += "\n# per-len label=" + report.label + "\n";
            } else {
                out += "\nper-len " + report.label + ":\n";
            }
            out += render_per_len(report, format);
        }
        return out;
    }
    // json --per-len: one object holding both views.
    nlohmann::ordered_json root;
    root["summary"] = nlohmann::ordered_json::parse(render_summary(reports, Format::Json));
    nlohmann::ordered_json per_len_obj = nlohmann::ordered_json::object();
    for (const auto& report : reports)
        per_len_obj[report.label] =
            nlohmann::ordered_json::parse(render_per_len(report, Format::Json));
    root["per_len"] = std::move(per_len_obj);
    return root.dump(2) + "\n";
}

// Runs `body`, writing its result to `out` only on success.
template <typename Body>
int run_command(std::ostream& out, std::ostream& err, Body&& body) {
    try {
        out << body();
        return kExitOk;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
}

}  // namespace

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err) {
    return run_command(out, err, [&] {
        const CorpusManifest manifest = load_manifest(options.manifest_path);
        std::vector<EntropyReport> reports;
        for (const auto& profile : profile_manifest(manifest))
            reports.push_back(build_report(profile, options.norm_base));
        emit_warnings(reports, err);
        return render_with_per_len(reports, options.format, options.per_len);
    });
}

int cmd_from_counts(const FromCountsOptions& options, std::ostream& out, std::ostream& err) {
    return run_command(out, err, [&] {
        std::vector<EntropyReport> reports;
        for (const auto& path : options.counts_paths)
            reports.push_back(build_report(load_counts_file(path), options.norm_base));
        emit_warnings(reports, err);
        return render_summary(reports, options.format);
    });
}

int cmd_distribution(const DistributionOptions& options, std::ostream& out, std::ostream& err) {
    return run_command(out, err, [&] {
        const CorpusManifest manifest = load_manifest(options.manifest_path);
        for (const auto& sample : manifest.samples) {
            if (sample.label != options.label) continue;
            return render_distribution(export_length_distribution(profile_sample(sample)));
        }
        throw ValidationError("no sample labeled \"" + options.label + "\" in manifest " +
                              options.manifest_path.string());
    });
}

int cmd_compare(const CompareOptions& options, std::ostream& out, std::ostream& err) {
    return run_command(out, err, [&] {
        const auto rows_a = parse_summary_json(read_file(options.path_a, "summary"));
        const auto rows_b = parse_summary_json(read_file(options.path_b, "summary"));
        return render_compare(rows_a, rows_b, options.format);
    });
}

}  // namespace sentropy

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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sentropy/report.hpp"

namespace sentropy {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUserError = 1;
inline constexpr int kExitInternalError = 2;

struct AnalyzeOptions {
    std::filesystem::path manifest_path;
    Format format = Format::Csv;
    std::uint64_t norm_base = 10000;
    bool per_len = false;
};

struct FromCountsOptions {
    std::vector<std::filesystem::path> counts_paths;
    Format format = Format::Csv;
    std::uint64_t norm_base = 10000;
};

struct DistributionOptions {
    std::filesystem::path manifest_path;
    std::string label;
};

struct CompareOptions {
    std::filesystem::path path_a;
    std::filesystem::path path_b;
    Format format = Format::Csv;
};

// Each command writes data to `out` and diagnostics to `err`, returning an
// exit code. Output is assembled in full before anything is written, so a
// failing run emits no partial data.
int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err);
int cmd_from_counts(const FromCountsOptions& options, std::ostream& out, std::ostream& err);
int cmd_distribution(const DistributionOptions& options, std::ostream& out, std::ostream& err);
int cmd_compare(const CompareOptions& options, std::ostream& out, std::ostream& err);

}  // namespace sentropy

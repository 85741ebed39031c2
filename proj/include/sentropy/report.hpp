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
#include <string>
#include <vector>

#include "sentropy/entropy.hpp"
#include "sentropy/profile.hpp"

namespace sentropy {

enum class Format {
    Csv,
    Json,
    Text,
};

// Accepts "csv", "json", "text"; throws ValidationError otherwise.
Format parse_format(const std::string& name);

// 4 significant digits, bare exponent: 0.06276 -> "6.276e-2", 15.69 ->
// "1.569e1", 0 -> "0.000e0". Used by the csv and text renderers; json output
// keeps full double precision.
std::string format_sig4(double value);

// One row per report in input order. Columns: label, total_tokens,
// vocab_size, sigma, sigma_norm. Throws EmptyInputError on no reports.
std::string render_summary(const std::vector<EntropyReport>& reports, Format format);

// One row per sentence length: k, h_max, h_realized, cumulative. An empty
// report renders the header only.
std::string render_per_len(const EntropyReport& report, Format format);

struct LengthCount {
    std::uint64_t k = 0;
    std::uint64_t count = 0;
};

// Sentence-length histogram rows, ascending in k, zero counts omitted.
// Throws DistributionUnavailableError for from-counts profiles.
std::vector<LengthCount> export_length_distribution(const CorpusProfile& profile);

// CSV with header "k,count".
std::string render_distribution(const std::vector<LengthCount>& rows);

struct SummaryRow {
    std::string label;
    std::uint64_t total_tokens = 0;
    std::uint64_t vocab_size = 0;
    double sigma = 0.0;
    double sigma_norm = 0.0;
};

// Parses the json output of render_summary. Throws SchemaError.
std::vector<SummaryRow> parse_summary_json(const std::string& bytes);

// Pairs rows by position and emits deltas (b - a) and ratios (b / a) for
// sigma and sigma_norm. Throws ValidationError when row counts differ.
std::string render_compare(const std::vector<SummaryRow>& a, const std::vector<SummaryRow>& b,
                           Format format);

}  // namespace sentropy

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

#include "sentropy/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "sentropy/errors.hpp"

namespace sentropy {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Renders a text table: first column left-aligned, the rest right-aligned.
std::string text_table(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return "";
    const std::size_t columns = rows.front().size();
    std::vector<std::size_t> widths(columns, 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < columns; ++c) widths[c] = std::max(widths[c], row[c].size());
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < columns; ++c) {
            if (c > 0) out += "  ";
            out += c == 0 ? pad_right(row[c], widths[c]) : pad_left(row[c], widths[c]);
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
    }
    return out;
}

std::vector<std::vector<std::string>> summary_cells(const std::vector<EntropyReport>& reports) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"label", "total_tokens", "vocab_size", "sigma", "sigma_norm"});
    for (const auto& r : reports) {
        rows.push_back({r.label, std::to_string(r.total_tokens), std::to_string(r.vocab_size),
                        format_sig4(r.sigma), format_sig4(r.sigma_norm)});
    }
    return rows;
}

std::vector<std::vector<std::string>> per_len_cells(const EntropyReport& report) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"k", "h_max", "h_realized", "cumulative"});
    for (const auto& row : report.per_len) {
        rows.push_back({std::to_string(row.k), format_sig4(row.h_max),
                        format_sig4(row.h_realized), format_sig4(row.cumulative)});
    }
    return rows;
}

std::string cells_to_csv(const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += ',';
            out += csv_field(row[c]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    if (name == "text") return Format::Text;
    throw ValidationError("unknown format \"" + name + "\" (expected csv, json, or text)");
}

std::string format_sig4(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value < 0 ? "-inf" : "inf";
    if (value == 0.0) return "0.000e0";
    if (value < 0.0) return "-" + format_sig4(-value);

    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.3e", value);
    const std::string printed(buffer);
    const std::size_t e = printed.find('e');

    std::string exponent = printed.substr(e + 1);
    const bool negative_exp = exponent.front() == '-';
    if (exponent.front() == '+' || exponent.front() == '-') exponent.erase(0, 1);
    while (exponent.size() > 1 && exponent.front() == '0') exponent.erase(0, 1);
    if (exponent == "0") return printed.substr(0, e) + "e0";
    return printed.substr(0, e) + "e" + (negative_exp ? "-" : "") + exponent;
}

std::string render_summary(const std::vector<EntropyReport>& reports, Format format) {
    if (reports.empty()) throw EmptyInputError("render_summary: no reports");
    switch (format) {
        case Format::Csv:
            return cells_to_csv(summary_cells(reports));
        case Format::Text:
            return text_table(summary_cells(reports));
        case Format::Json: {
            ordered_json array = ordered_json::array();
            for (const auto& r : reports) {
                array.push_back({{"label", r.label},
                                 {"total_tokens", r.total_tokens},
                                 {"vocab_size", r.vocab_size},
                                 {"sigma", r.sigma},
                                 {"sigma_norm", r.sigma_norm}});
            }
            return array.dump(2) + "\n";
        }
    }
    throw InternalError("unknown format");
}

std::string render_per_len(const EntropyReport& report, Format format) {
    switch (format) {
        case Format::Csv:
            return cells_to_csv(per_len_cells(report));
        case Format::Text:
            return text_table(per_len_cells(report));
        case Format::Json: {
            ordered_json array = ordered_json::array();
            for (const auto& row : report.per_len) {
                array.push_back({{"k", row.k},
                                 {"h_max", row.h_max},
                                 {"h_realized", row.h_realized},
                                 {"cumulative", row.cumulative}});
            }
            return array.dump(2) + "\n";
        }
    }
    throw InternalError("unknown format");
}

std::vector<LengthCount> export_length_distribution(const CorpusProfile& profile) {
    if (!profile.has_occurrences)
        throw DistributionUnavailableError(
            "profile \"" + profile.label +
            "\" was built from counts; occurrence data is unavailable");
    std::vector<LengthCount> rows;
    for (const auto& [k, count] : profile.occurrences_by_len) {
        if (count == 0) continue;
        rows.push_back({k, count});
    }
    return rows;
}

std::string render_distribution(const std::vector<LengthCount>& rows) {
    std::string out = "k,count\n";
    for (const auto& row : rows)
        out += std::to_string(row.k) + "," + std::to_string(row.count) + "\n";
    return out;
}

std::vector<SummaryRow> parse_summary_json(const std::string& bytes) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("summary is not valid JSON: ") + e.what());
    }
    if (!root.is_array()) throw SchemaError("summary root must be an array");
    std::vector<SummaryRow> rows;
    for (std::size_t i = 0; i < root.size(); ++i) {
        const std::string field_path = "summary[" + std::to_string(i) + "]";
        const auto& entry = root[i];
        if (!entry.is_object()) throw SchemaError("field " + field_path + " must be an object");
        SummaryRow row;
        for (const char* key : {"label", "total_tokens", "vocab_size", "sigma", "sigma_norm"}) {
            if (!entry.contains(key))
                throw SchemaError("missing field " + field_path + "." + key);
        }
        if (!entry.at("label").is_string())
            throw SchemaError("field " + field_path + ".label must be a string");
        row.label = entry.at("label").get<std::string>();
        for (const char* key : {"total_tokens", "vocab_size"}) {
            const auto& v = entry.at(key);
            if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
                throw SchemaError("field " + field_path + "." + key +
                                  " must be a non-negative integer");
        }
        row.total_tokens = entry.at("total_tokens").get<std::uint64_t>();
        row.vocab_size = entry.at("vocab_size").get<std::uint64_t>();
        for (const char* key : {"sigma", "sigma_norm"}) {
            if (!entry.at(key).is_number())
                throw SchemaError("field " + field_path + "." + key + " must be a number");
        }
        row.sigma = entry.at("sigma").get<double>();
        row.sigma_norm = entry.at("sigma_norm").get<double>();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render_compare(const std::vector<SummaryRow>& a, const std::vector<SummaryRow>& b,
                           Format format) {
    if (a.size() != b.size())
        throw ValidationError("summary row count mismatch: " + std::to_string(a.size()) +
                              " vs " + std::to_string(b.size()));
    if (format == Format::Json) {
        ordered_json array = ordered_json::array();
        for (std::size_t i = 0; i < a.size(); ++i) {
            array.push_back({{"label_a", a[i].label},
                             {"label_b", b[i].label},
                             {"sigma_a", a[i].sigma},
                             {"sigma_b", b[i].sigma},
                             {"sigma_delta", b[i].sigma - a[i].sigma},
                             {"sigma_ratio", b[i].sigma / a[i].sigma},
                             {"sigma_norm_a", a[i].sigma_norm},
                             {"sigma_norm_b", b[i].sigma_norm},
                             {"sigma_norm_delta", b[i].sigma_norm - a[i].sigma_norm},
                             {"sigma_norm_ratio", b[i].sigma_norm / a[i].sigma_norm}});
        }
        return array.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"label_a", "label_b", "sigma_a", "sigma_b", "sigma_delta", "sigma_ratio",
                    "sigma_norm_a", "sigma_norm_b", "sigma_norm_delta", "sigma_norm_ratio"});
    for (std::size_t i = 0; i < a.size(); ++i) {
        rows.push_back({a[i].label, b[i].label, format_sig4(a[i].sigma), format_sig4(b[i].sigma),
                        format_sig4(b[i].sigma - a[i].sigma),
                        format_sig4(b[i].sigma / a[i].sigma), format_sig4(a[i].sigma_norm),
                        format_sig4(b[i].sigma_norm),
                        format_sig4(b[i].sigma_norm - a[i].sigma_norm),
                        format_sig4(b[i].sigma_norm / a[i].sigma_norm)});
    }
    return format == Format::Csv ? cells_to_csv(rows) : text_table(rows);
}

}  // namespace sentropy

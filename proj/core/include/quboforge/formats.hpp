// Copyright 2026 The QuboForge Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quboforge/qubo_instance.hpp"
#include "quboforge/sample_set.hpp"

namespace quboforge {

enum class FileFormat { BqpJson, Qubo, Qubist };

std::string_view to_string(FileFormat format) noexcept;
FileFormat parse_file_format(std::string_view name);
/// .json/.bqpjson, .qubo, .qubist; nullopt for anything else.
std::optional<FileFormat> format_from_extension(const std::filesystem::path& path);

/// bqpjson 1.x. Writes version "1.0.0" with keys in the order id, version,
/// variable_ids, variable_domain, scale, offset, linear_terms,
/// quadratic_terms, metadata, solutions. Solutions are re-evaluated on read.
QuboInstance read_bqpjson(std::string_view text);
std::string write_bqpjson(const QuboInstance& q);

/// D-Wave QUBO text format. Spin instances are converted to Boolean before
/// writing. Scale and offset travel in "c scale" / "c offset" comment lines,
/// which other readers skip as ordinary comments.
QuboInstance read_qubo(std::string_view text);
std::string write_qubo(const QuboInstance& q, std::vector<std::string>* warnings = nullptr);

/// Qubist spin format: "N m" then m lines "i j value". Boolean instances are
/// converted to spin before writing; scale is folded into the coefficients
/// and the offset, which the format cannot hold, is dropped with a warning.
QuboInstance read_qubist(std::string_view text);
std::string write_qubist(const QuboInstance& q, std::vector<std::string>* warnings = nullptr);

QuboInstance read_instance(std::string_view text, FileFormat format);
std::string write_instance(const QuboInstance& q, FileFormat format,
                           std::vector<std::string>* warnings = nullptr);

struct ConversionResult {
    std::string text;
    std::vector<std::string> warnings;
    /// Energy constant the target format could not represent:
    /// energy(source) = energy(result) + dropped_offset under the state bijection.
    double dropped_offset = 0.0;
};

ConversionResult convert(std::string_view input, FileFormat from, FileFormat to,
                         std::optional<Domain> target_domain = std::nullopt);

/// SampleSet file: domain, variable_ids, samples [{state, value, reads}],
/// timing (optional) and metadata. Timing is left out unless requested so
/// that seeded runs serialize byte-identically.
std::string write_sample_set_json(const SampleSet& samples, bool include_timing = false);
SampleSet read_sample_set_json(std::string_view text);

}  // namespace quboforge

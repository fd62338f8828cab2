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

#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quboforge/qubo_instance.hpp"
#include "quboforge/sample_set.hpp"

namespace quboforge {

struct ModelReport {
    std::size_t n = 0;
    std::size_t linear_count = 0;
    std::size_t quadratic_count = 0;
    /// (linear_count + quadratic_count) / (n (n + 1) / 2); 0 when n = 0.
    double density = 0.0;
    /// Distinct quadratic neighbours per variable, aligned with variable_ids.
    std::vector<std::size_t> degree_histogram;
    double delta = 0.0;
    /// max |c| / min nonzero |c| over the terms; 0 for an empty instance.
    double coeff_ratio = 0.0;
};

ModelReport model_report(const QuboInstance& q);

using Histogram = std::vector<std::pair<double, std::uint64_t>>;

struct SolutionReport {
    double best_value = 0.0;
    std::optional<double> target_value;
    std::uint64_t total_reads = 0;
    std::optional<double> success_rate;
    std::optional<double> tts;
    Histogram histogram;
};

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kDefaultQuantile = 0.99;

/// Fraction of reads with value <= target + tol.
double success_rate(const SampleSet& samples, double target, double tol = kDefaultTolerance);

/// total_seconds * max(1, ln(1 - quantile) / ln(1 - p)); +inf when p = 0.
double time_to_solution(double total_seconds, double p_success, double quantile = kDefaultQuantile);

/// Reads per energy level, ascending; values within 1e-9 relative are stacked.
Histogram energy_histogram(const SampleSet& samples);

/// `seconds` overrides the timing recorded in the sample set for TTS.
SolutionReport solution_report(const SampleSet& samples, std::optional<double> target = std::nullopt,
                               std::optional<double> seconds = std::nullopt,
                               double tol = kDefaultTolerance);

std::string histogram_csv(const SampleSet& samples);
std::string density_csv(const QuboInstance& q);
void export_histogram(const SampleSet& samples, const std::filesystem::path& path);
void export_density(const QuboInstance& q, const std::filesystem::path& path);

std::string model_report_json(const ModelReport& report);
std::string solution_report_json(const SolutionReport& report);
/// {"model": ..., "solution": ... or null}. Infinite TTS is written as null.
std::string analysis_report_json(const ModelReport& model, const std::optional<SolutionReport>& solution);

}  // namespace quboforge

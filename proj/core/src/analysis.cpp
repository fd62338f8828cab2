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

#include "quboforge/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "format_util.hpp"
#include "json.hpp"
#include "quboforge/errors.hpp"
#include "quboforge/model_io.hpp"

namespace quboforge {

using detail::format_double;
using nlohmann::ordered_json;

ModelReport model_report(const QuboInstance& q) {
    q.validate();
    ModelReport r;
    r.n = q.variable_ids.size();
    r.linear_count = q.linear.size();
    r.quadratic_count = q.quadratic.size();
    if (r.n > 0) {
        const double slots = static_cast<double>(r.n) * static_cast<double>(r.n + 1) / 2.0;
        r.density = static_cast<double>(r.linear_count + r.quadratic_count) / slots;
    }
    std::vector<std::set<VarId>> neighbours(r.n);
    for (const auto& [ij, c] : q.quadratic) {
        neighbours[q.index_of(ij.first)].insert(ij.second);
        neighbours[q.index_of(ij.second)].insert(ij.first);
    }
    r.degree_histogram.reserve(r.n);
    for (const auto& s : neighbours) r.degree_histogram.push_back(s.size());
    r.delta = q.to_pbf().delta();

    double hi = 0.0, lo = 0.0;
    auto visit = [&](double c) {
        const double a = std::abs(c);
        if (a == 0.0) return;
        hi = std::max(hi, a);
        lo = lo == 0.0 ? a : std::min(lo, a);
    };
    for (const auto& [v, c] : q.linear) visit(c);
    for (const auto& [ij, c] : q.quadratic) visit(c);
    r.coeff_ratio = lo == 0.0 ? 0.0 : hi / lo;
    return r;
}

double success_rate(const SampleSet& samples, double target, double tol) {
    if (samples.empty()) throw DataError("success rate: empty sample set");
    std::uint64_t hits = 0;
    for (const Sample& s : samples.samples()) {
        if (s.value <= target + tol) hits += s.reads;
    }
    return static_cast<double>(hits) / static_cast<double>(samples.total_reads());
}

double time_to_solution(double total_seconds, double p_success, double quantile) {
    if (!(quantile > 0.0 && quantile < 1.0)) throw InvalidArgument("tts: quantile must lie in (0, 1)");
    if (!(p_success >= 0.0 && p_success <= 1.0)) throw InvalidArgument("tts: p_success must lie in [0, 1]");
    if (!(total_seconds > 0.0)) throw InvalidArgument("tts: total_seconds must be positive");
    if (p_success == 0.0) return std::numeric_limits<double>::infinity();
    if (p_success >= quantile) return total_seconds;
    const double ratio = std::log1p(-quantile) / std::log1p(-p_success);
    return total_seconds * std::max(1.0, ratio);
}

Histogram energy_histogram(const SampleSet& samples) {
    Histogram rows;
    for (const Sample& s : samples.samples()) {
        if (!rows.empty()) {
            const double a = rows.back().first;
            if (std::abs(s.value - a) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(s.value)})) {
                rows.back().second += s.reads;
                continue;
            }
        }
        rows.emplace_back(s.value, s.reads);
    }
    return rows;
}

SolutionReport solution_report(const SampleSet& samples, std::optional<double> target,
                               std::optional<double> seconds, double tol) {
    if (samples.empty()) throw DataError("solution report: empty sample set");
    SolutionReport r;
    r.best_value = samples.best().value;
    r.total_reads = samples.total_reads();
    r.histogram = energy_histogram(samples);
    if (target) {
        r.target_value = *target;
        r.success_rate = success_rate(samples, *target, tol);
        const double t = seconds ? *seconds : samples.timing().total_seconds;
        if (t > 0.0) r.tts = time_to_solution(t, *r.success_rate);
    }
    return r;
}

std::string histogram_csv(const SampleSet& samples) {
    if (samples.empty()) throw DataError("histogram: empty sample set");
    std::string out = "value,reads\n";
    for (const auto& [value, reads] : energy_histogram(samples)) {
        out += format_double(value) + "," + std::to_string(reads) + "\n";
    }
    return out;
}

std::string density_csv(const QuboInstance& q) {
    std::string out = "i,j,coeff\n";
    // (i, i) sorts before every (i, j > i), so interleave by row
    auto lin = q.linear.begin();
    auto quad = q.quadratic.begin();
    while (lin != q.linear.end() || quad != q.quadratic.end()) {
        const bool take_linear =
            quad == q.quadratic.end() || (lin != q.linear.end() && lin->first <= quad->first.first);
        if (take_linear) {
            out += std::to_string(lin->first) + "," + std::to_string(lin->first) + "," +
                   format_double(lin->second) + "\n";
            ++lin;
        } else {
            out += std::to_string(quad->first.first) + "," + std::to_string(quad->first.second) + "," +
                   format_double(quad->second) + "\n";
            ++quad;
        }
    }
    return out;
}

void export_histogram(const SampleSet& samples, const std::filesystem::path& path) {
    write_text_file(path, histogram_csv(samples));
}

void export_density(const QuboInstance& q, const std::filesystem::path& path) {
    write_text_file(path, density_csv(q));
}

namespace {

ordered_json number_or_null(std::optional<double> v) {
    if (!v || !std::isfinite(*v)) return nullptr;
    return *v;
}

}  // namespace

namespace {

ordered_json to_json(const ModelReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["linear_count"] = r.linear_count;
    j["quadratic_count"] = r.quadratic_count;
    j["density"] = r.density;
    j["degree_histogram"] = r.degree_histogram;
    j["delta"] = r.delta;
    j["coeff_ratio"] = r.coeff_ratio;
    return j;
}

ordered_json to_json(const SolutionReport& r) {
    ordered_json j;
    j["best_value"] = r.best_value;
    j["target_value"] = number_or_null(r.target_value);
    j["total_reads"] = r.total_reads;
    j["success_rate"] = number_or_null(r.success_rate);
    j["tts"] = number_or_null(r.tts);
    ordered_json rows = ordered_json::array();
    for (const auto& [value, reads] : r.histogram) rows.push_back({value, reads});
    j["histogram"] = std::move(rows);
    return j;
}

}  // namespace

std::string model_report_json(const ModelReport& report) { return to_json(report).dump(2) + "\n"; }

std::string solution_report_json(const SolutionReport& report) { return to_json(report).dump(2) + "\n"; }

std::string analysis_report_json(const ModelReport& model, const std::optional<SolutionReport>& solution) {
    ordered_json j;
    j["model"] = to_json(model);
    j["solution"] = solution ? to_json(*solution) : ordered_json(nullptr);
    return j.dump(2) + "\n";
}

}  // namespace quboforge

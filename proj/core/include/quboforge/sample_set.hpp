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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quboforge/pbf.hpp"

namespace quboforge {

enum class Domain { Boolean, Spin };

std::string_view to_string(Domain domain) noexcept;
/// Accepts "boolean"/"spin" (and "binary"/"ising").
Domain parse_domain(std::string_view text);

/// True when `value` is a legal variable value in `domain`.
inline bool in_domain(Domain domain, int value) noexcept {
    return domain == Domain::Boolean ? (value == 0 || value == 1) : (value == -1 || value == 1);
}

struct Sample {
    /// One value per variable, aligned with SampleSet::variable_ids().
    std::vector<std::int8_t> state;
    double value = 0.0;
    std::uint64_t reads = 1;

    friend bool operator==(const Sample&, const Sample&) = default;
};

struct Timing {
    double total_seconds = 0.0;
    std::optional<double> effective_seconds;

    friend bool operator==(const Timing&, const Timing&) = default;
};

/// Aggregated pool of samples: identical states are merged with summed reads
/// and the pool is ordered by ascending value, ties by state.
class SampleSet {
 public:
    SampleSet() = default;
    SampleSet(Domain domain, std::vector<VarId> variable_ids, std::vector<Sample> samples);

    Domain domain() const noexcept { return domain_; }
    const std::vector<VarId>& variable_ids() const noexcept { return variable_ids_; }
    const std::vector<Sample>& samples() const noexcept { return samples_; }
    bool empty() const noexcept { return samples_.empty(); }
    std::size_t size() const noexcept { return samples_.size(); }
    const Sample& best() const;
    std::uint64_t total_reads() const noexcept;

    /// Sample state as an id -> value assignment.
    Assignment assignment(const Sample& sample) const;

    /// Merges another pool over the same variables. Associative and
    /// order-insensitive.
    void merge(const SampleSet& other);

    Timing& timing() noexcept { return timing_; }
    const Timing& timing() const noexcept { return timing_; }
    std::map<std::string, std::string>& metadata() noexcept { return metadata_; }
    const std::map<std::string, std::string>& metadata() const noexcept { return metadata_; }

    friend bool operator==(const SampleSet&, const SampleSet&) = default;

 private:
    void normalize();

    Domain domain_ = Domain::Boolean;
    std::vector<VarId> variable_ids_;
    std::vector<Sample> samples_;
    Timing timing_;
    std::map<std::string, std::string> metadata_;
};

}  // namespace quboforge

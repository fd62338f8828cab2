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

#include "quboforge/sample_set.hpp"

#include <algorithm>
#include <tuple>

namespace quboforge {

std::string_view to_string(Domain domain) noexcept {
    return domain == Domain::Boolean ? "boolean" : "spin";
}

Domain parse_domain(std::string_view text) {
    if (text == "boolean" || text == "binary") return Domain::Boolean;
    if (text == "spin" || text == "ising") return Domain::Spin;
    throw InvalidArgument("unknown variable domain '" + std::string(text) +
                          "' (expected boolean or spin)");
}

SampleSet::SampleSet(Domain domain, std::vector<VarId> variable_ids, std::vector<Sample> samples)
    : domain_(domain), variable_ids_(std::move(variable_ids)), samples_(std::move(samples)) {
    for (const Sample& s : samples_) {
        if (s.state.size() != variable_ids_.size()) {
            throw DataError("sample state has " + std::to_string(s.state.size()) +
                            " entries for " + std::to_string(variable_ids_.size()) + " variables");
        }
        if (s.reads == 0) throw DataError("sample with zero reads");
        for (std::int8_t v : s.state) {
            if (!in_domain(domain_, v)) {
                throw DataError("sample value " + std::to_string(v) + " outside the " +
                                std::string(to_string(domain_)) + " domain");
            }
        }
    }
    normalize();
}

void SampleSet::normalize() {
    std::sort(samples_.begin(), samples_.end(), [](const Sample& a, const Sample& b) {
        return std::tie(a.value, a.state) < std::tie(b.value, b.state);
    });
    // Equal states have equal values, so duplicates are adjacent after the sort.
    std::vector<Sample> merged;
    merged.reserve(samples_.size());
    for (Sample& s : samples_) {
        if (!merged.empty() && merged.back().state == s.state) {
            merged.back().reads += s.reads;
        } else {
            merged.push_back(std::move(s));
        }
    }
    samples_ = std::move(merged);
}

const Sample& SampleSet::best() const {
    if (samples_.empty()) throw DataError("sample set is empty");
    return samples_.front();
}

std::uint64_t SampleSet::total_reads() const noexcept {
    std::uint64_t total = 0;
    for (const Sample& s : samples_) total += s.reads;
    return total;
}

Assignment SampleSet::assignment(const Sample& sample) const {
    Assignment out;
    for (std::size_t i = 0; i < variable_ids_.size(); ++i) out[variable_ids_[i]] = sample.state[i];
    return out;
}

void SampleSet::merge(const SampleSet& other) {
    if (samples_.empty() && variable_ids_.empty()) {
        domain_ = other.domain_;
        variable_ids_ = other.variable_ids_;
    } else if (other.domain_ != domain_ || other.variable_ids_ != variable_ids_) {
        throw InvalidArgument("cannot merge sample sets over different variables or domains");
    }
    samples_.insert(samples_.end(), other.samples_.begin(), other.samples_.end());
    normalize();
    timing_.total_seconds += other.timing_.total_seconds;
}

}  // namespace quboforge

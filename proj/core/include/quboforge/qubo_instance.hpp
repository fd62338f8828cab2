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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quboforge/pbf.hpp"
#include "quboforge/sample_set.hpp"

namespace quboforge {

/// QUBO / Ising normal form.
///
///     energy(v) = scale * (sum_i linear_i v_i + sum_{i<j} quadratic_ij v_i v_j + offset)
///
/// with v in {0,1} (Boolean) or {-1,+1} (Spin). Each unordered pair is stored
/// once under (i, j) with i < j, so there is no factor 2 on the off-diagonal.
struct QuboInstance {
    Domain domain = Domain::Boolean;
    std::vector<VarId> variable_ids;
    std::map<VarId, double> linear;
    std::map<std::pair<VarId, VarId>, double> quadratic;
    double scale = 1.0;
    double offset = 0.0;
    std::int64_t id = 0;
    std::map<std::string, std::string> metadata;
    std::optional<SampleSet> solutions;

    /// Throws DataError when an invariant is broken: unsorted or duplicate
    /// ids, undeclared ids in terms, pairs with i >= j, non-positive scale.
    void validate() const;

    std::size_t num_variables() const noexcept { return variable_ids.size(); }
    /// Position of `v` in variable_ids; throws DataError if undeclared.
    std::size_t index_of(VarId v) const;

    /// Terms plus offset as a polynomial (scale not applied).
    PseudoBooleanFunction to_pbf() const;

    /// Builds an instance from a polynomial of degree <= 2; the constant term
    /// becomes the offset. `extra_ids` are declared even if no term uses them.
    static QuboInstance from_pbf(const PseudoBooleanFunction& f, Domain domain,
                                 const std::vector<VarId>& extra_ids = {});

    friend bool operator==(const QuboInstance&, const QuboInstance&) = default;
};

/// State aligned with q.variable_ids.
double energy(const QuboInstance& q, std::span<const std::int8_t> state);
double energy(const QuboInstance& q, const Assignment& state);

/// Boolean -> spin through x = (s + 1) / 2.
QuboInstance to_spin(const QuboInstance& q);
/// Spin -> Boolean through s = 2x - 1.
QuboInstance to_boolean(const QuboInstance& q);
QuboInstance to_domain(const QuboInstance& q, Domain target);

/// Maps a state between domains (0 <-> -1, 1 <-> 1).
std::vector<std::int8_t> convert_state(std::span<const std::int8_t> state, Domain from, Domain to);

}  // namespace quboforge

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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "quboforge/qubo_instance.hpp"
#include "quboforge/sample_set.hpp"

namespace quboforge {

using AttributeValue = std::variant<std::int64_t, double, std::string, std::vector<std::int8_t>>;

enum class AttributeType { Integer, Real, Text, State };

struct AttributeSpec {
    std::string name;
    AttributeType type = AttributeType::Integer;
    std::string description;
};

struct SamplerParams {
    std::uint64_t num_reads = 1;
    std::optional<std::uint64_t> seed;
    std::map<std::string, AttributeValue> attributes;
};

class Sampler {
 public:
    virtual ~Sampler() = default;

    virtual std::string_view name() const noexcept = 0;
    virtual std::vector<Domain> domains() const = 0;
    virtual std::vector<AttributeSpec> attributes() const { return {}; }

    /// Called by sample() after parameters have been validated.
    virtual SampleSet run(const QuboInstance& q, const SamplerParams& params) const = 0;

    bool supports(Domain domain) const;
};

class SamplerRegistry {
 public:
    void add(std::unique_ptr<Sampler> sampler);
    bool contains(std::string_view name) const;
    const Sampler& get(std::string_view name) const;
    std::vector<std::string> names() const;

    /// Registry preloaded with exact, random, identity and sa.
    static SamplerRegistry with_builtins();
    static SamplerRegistry& global();

 private:
    std::map<std::string, std::unique_ptr<Sampler>, std::less<>> samplers_;
};

/// Throws InvalidArgument on unknown or mistyped attributes, or an
/// unsupported domain.
void validate_params(const Sampler& sampler, const QuboInstance& q, const SamplerParams& params);

SampleSet sample(const Sampler& sampler, const QuboInstance& q, const SamplerParams& params);
SampleSet sample(std::string_view name, const QuboInstance& q, const SamplerParams& params,
                 const SamplerRegistry& registry = SamplerRegistry::global());

std::unique_ptr<Sampler> make_exact_sampler();
std::unique_ptr<Sampler> make_random_sampler();
std::unique_ptr<Sampler> make_identity_sampler();
std::unique_ptr<Sampler> make_simulated_annealing_sampler();

SampleSet exact_sample(const QuboInstance& q, const SamplerParams& params = {});
SampleSet random_sample(const QuboInstance& q, const SamplerParams& params);
SampleSet identity_sample(const QuboInstance& q, const SamplerParams& params);
SampleSet simulated_annealing(const QuboInstance& q, const SamplerParams& params);

inline constexpr std::int64_t kDefaultExactCap = 24;
inline constexpr std::int64_t kDefaultSweeps = 1000;
inline constexpr double kDefaultBetaMin = 0.1;
inline constexpr double kDefaultBetaMax = 10.0;

/// Seed used when the caller gives none.
std::uint64_t resolve_seed(const SamplerParams& params);

namespace detail {

/// Adjacency view of an instance over state indices.
struct LocalFields {
    explicit LocalFields(const QuboInstance& q);

    struct Edge {
        std::size_t j;
        double weight;
    };

    std::vector<double> bias;
    std::vector<std::vector<Edge>> neighbors;

    /// field_i = bias_i + sum_j w_ij v_j
    std::vector<double> fields(const std::vector<std::int8_t>& state) const;
};

}  // namespace detail

}  // namespace quboforge

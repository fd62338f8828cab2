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

#include "quboforge/samplers.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "quboforge/errors.hpp"
#include "quboforge/random.hpp"

namespace quboforge {

bool Sampler::supports(Domain domain) const {
    const auto d = domains();
    return std::find(d.begin(), d.end(), domain) != d.end();
}

void SamplerRegistry::add(std::unique_ptr<Sampler> sampler) {
    if (!sampler) throw InvalidArgument("sampler registry: null sampler");
    std::string key(sampler->name());
    if (samplers_.count(key)) throw InvalidArgument("sampler '" + key + "' is already registered");
    samplers_.emplace(std::move(key), std::move(sampler));
}

bool SamplerRegistry::contains(std::string_view name) const { return samplers_.find(name) != samplers_.end(); }

const Sampler& SamplerRegistry::get(std::string_view name) const {
    auto it = samplers_.find(name);
    if (it == samplers_.end()) {
        std::string known;
        for (const auto& [key, _] : samplers_) known += (known.empty() ? "" : ", ") + key;
        throw InvalidArgument("unknown sampler '" + std::string(name) + "' (registered: " + known + ")");
    }
    return *it->second;
}

std::vector<std::string> SamplerRegistry::names() const {
    std::vector<std::string> out;
    for (const auto& [key, _] : samplers_) out.push_back(key);
    return out;
}

SamplerRegistry SamplerRegistry::with_builtins() {
    SamplerRegistry r;
    r.add(make_exact_sampler());
    r.add(make_random_sampler());
    r.add(make_identity_sampler());
    r.add(make_simulated_annealing_sampler());
    return r;
}

SamplerRegistry& SamplerRegistry::global() {
    static SamplerRegistry registry = with_builtins();
    return registry;
}

namespace {

bool matches(AttributeType type, const AttributeValue& value) {
    switch (type) {
        case AttributeType::Integer: return std::holds_alternative<std::int64_t>(value);
        case AttributeType::Real:
            return std::holds_alternative<double>(value) || std::holds_alternative<std::int64_t>(value);
        case AttributeType::Text: return std::holds_alternative<std::string>(value);
        case AttributeType::State: return std::holds_alternative<std::vector<std::int8_t>>(value);
    }
    return false;
}

}  // namespace

void validate_params(const Sampler& sampler, const QuboInstance& q, const SamplerParams& params) {
    if (params.num_reads < 1) throw InvalidArgument("num_reads must be at least 1");
    if (!sampler.supports(q.domain)) {
        throw InvalidArgument("sampler '" + std::string(sampler.name()) + "' does not support the " +
                              std::string(to_string(q.domain)) + " domain");
    }
    const auto schema = sampler.attributes();
    for (const auto& [name, value] : params.attributes) {
        auto it = std::find_if(schema.begin(), schema.end(), [&](const AttributeSpec& s) { return s.name == name; });
        if (it == schema.end()) {
            throw InvalidArgument("sampler '" + std::string(sampler.name()) + "' has no attribute '" + name + "'");
        }
        if (!matches(it->type, value)) {
            throw InvalidArgument("attribute '" + name + "' has the wrong type");
        }
    }
}

SampleSet sample(const Sampler& sampler, const QuboInstance& q, const SamplerParams& params) {
    q.validate();
    validate_params(sampler, q, params);
    const auto start = std::chrono::steady_clock::now();
    SampleSet result = sampler.run(q, params);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    result.timing().total_seconds = elapsed.count();
    result.metadata()["sampler"] = std::string(sampler.name());
    return result;
}

SampleSet sample(std::string_view name, const QuboInstance& q, const SamplerParams& params,
                 const SamplerRegistry& registry) {
    return sample(registry.get(name), q, params);
}

std::uint64_t resolve_seed(const SamplerParams& params) {
    if (params.seed) return *params.seed;
    std::random_device device;
    return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

namespace detail {

LocalFields::LocalFields(const QuboInstance& q)
    : bias(q.variable_ids.size(), 0.0), neighbors(q.variable_ids.size()) {
    for (const auto& [v, c] : q.linear) bias[q.index_of(v)] += c;
    for (const auto& [ij, c] : q.quadratic) {
        const std::size_t i = q.index_of(ij.first), j = q.index_of(ij.second);
        neighbors[i].push_back({j, c});
        neighbors[j].push_back({i, c});
    }
}

std::vector<double> LocalFields::fields(const std::vector<std::int8_t>& state) const {
    std::vector<double> f(bias);
    for (std::size_t i = 0; i < neighbors.size(); ++i) {
        for (const Edge& e : neighbors[i]) f[i] += e.weight * state[e.j];
    }
    return f;
}

}  // namespace detail

// ---------------------------------------------------------------------------

namespace {

std::int64_t integer_attribute(const SamplerParams& p, const std::string& name, std::int64_t fallback) {
    auto it = p.attributes.find(name);
    return it == p.attributes.end() ? fallback : std::get<std::int64_t>(it->second);
}

std::int8_t low_value(Domain d) { return d == Domain::Boolean ? 0 : -1; }

class ExactSampler final : public Sampler {
 public:
    std::string_view name() const noexcept override { return "exact"; }
    std::vector<Domain> domains() const override { return {Domain::Boolean, Domain::Spin}; }
    std::vector<AttributeSpec> attributes() const override {
        return {{"max_variables", AttributeType::Integer, "refuse instances above this size"}};
    }

    SampleSet run(const QuboInstance& q, const SamplerParams& params) const override {
        const std::int64_t cap = integer_attribute(params, "max_variables", kDefaultExactCap);
        const std::size_t n = q.variable_ids.size();
        if (cap < 0 || cap > 62) throw InvalidArgument("exact: max_variables must be in [0, 62]");
        if (n > static_cast<std::size_t>(cap)) {
            throw CapacityError("exact: instance has " + std::to_string(n) + " variables, cap is " +
                                    std::to_string(cap) + " (2^" + std::to_string(n) + " states)",
                                n, static_cast<std::size_t>(cap));
        }
        const std::uint64_t count = std::uint64_t{1} << n;
        std::vector<Sample> samples;
        samples.reserve(count);
        const std::int8_t lo = low_value(q.domain);
        std::vector<std::int8_t> state(n, lo);
        for (std::uint64_t k = 0; k < count; ++k) {
            for (std::size_t i = 0; i < n; ++i) state[i] = (k >> (n - 1 - i)) & 1 ? 1 : lo;
            samples.push_back({state, energy(q, state), 1});
        }
        return SampleSet(q.domain, q.variable_ids, std::move(samples));
    }
};

class RandomSampler final : public Sampler {
 public:
    std::string_view name() const noexcept override { return "random"; }
    std::vector<Domain> domains() const override { return {Domain::Boolean, Domain::Spin}; }

    SampleSet run(const QuboInstance& q, const SamplerParams& params) const override {
        Rng rng(resolve_seed(params));
        const std::size_t n = q.variable_ids.size();
        const std::int8_t lo = low_value(q.domain);
        std::vector<Sample> samples;
        samples.reserve(params.num_reads);
        std::vector<std::int8_t> state(n);
        for (std::uint64_t r = 0; r < params.num_reads; ++r) {
            for (auto& v : state) v = rng.below(2) ? 1 : lo;
            samples.push_back({state, energy(q, state), 1});
        }
        return SampleSet(q.domain, q.variable_ids, std::move(samples));
    }
};

class IdentitySampler final : public Sampler {
 public:
    std::string_view name() const noexcept override { return "identity"; }
    std::vector<Domain> domains() const override { return {Domain::Boolean, Domain::Spin}; }
    std::vector<AttributeSpec> attributes() const override {
        return {{"initial_state", AttributeType::State, "state echoed back, aligned with variable_ids"}};
    }

    SampleSet run(const QuboInstance& q, const SamplerParams& params) const override {
        auto it = params.attributes.find("initial_state");
        if (it == params.attributes.end()) throw InvalidArgument("identity: 'initial_state' is required");
        const auto& state = std::get<std::vector<std::int8_t>>(it->second);
        if (state.size() != q.variable_ids.size()) {
            throw InvalidArgument("identity: initial_state has " + std::to_string(state.size()) +
                                  " entries, instance has " + std::to_string(q.variable_ids.size()) +
                                  " variables");
        }
        for (std::int8_t v : state) {
            if (!in_domain(q.domain, v)) throw InvalidArgument("identity: initial_state value outside the domain");
        }
        return SampleSet(q.domain, q.variable_ids, {{state, energy(q, state), params.num_reads}});
    }
};

}  // namespace

std::unique_ptr<Sampler> make_exact_sampler() { return std::make_unique<ExactSampler>(); }
std::unique_ptr<Sampler> make_random_sampler() { return std::make_unique<RandomSampler>(); }
std::unique_ptr<Sampler> make_identity_sampler() { return std::make_unique<IdentitySampler>(); }

SampleSet exact_sample(const QuboInstance& q, const SamplerParams& params) {
    return sample(ExactSampler{}, q, params);
}
SampleSet random_sample(const QuboInstance& q, const SamplerParams& params) {
    return sample(RandomSampler{}, q, params);
}
SampleSet identity_sample(const QuboInstance& q, const SamplerParams& params) {
    return sample(IdentitySampler{}, q, params);
}

}  // namespace quboforge

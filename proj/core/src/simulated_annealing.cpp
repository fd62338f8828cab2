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

#include <cmath>

#include "quboforge/errors.hpp"
#include "quboforge/random.hpp"
#include "quboforge/samplers.hpp"

namespace quboforge {

namespace {

double real_attribute(const SamplerParams& p, const std::string& name, double fallback) {
    auto it = p.attributes.find(name);
    if (it == p.attributes.end()) return fallback;
    if (const auto* i = std::get_if<std::int64_t>(&it->second)) return static_cast<double>(*i);
    return std::get<double>(it->second);
}

class SimulatedAnnealingSampler final : public Sampler {
 public:
    std::string_view name() const noexcept override { return "sa"; }
    std::vector<Domain> domains() const override { return {Domain::Boolean, Domain::Spin}; }
    std::vector<AttributeSpec> attributes() const override {
        return {{"sweeps", AttributeType::Integer, "full passes per read"},
                {"beta_min", AttributeType::Real, "initial inverse temperature"},
                {"beta_max", AttributeType::Real, "final inverse temperature"}};
    }

    SampleSet run(const QuboInstance& q, const SamplerParams& params) const override {
        auto it = params.attributes.find("sweeps");
        const std::int64_t sweeps = it == params.attributes.end() ? kDefaultSweeps : std::get<std::int64_t>(it->second);
        const double beta_min = real_attribute(params, "beta_min", kDefaultBetaMin);
        const double beta_max = real_attribute(params, "beta_max", kDefaultBetaMax);
        if (sweeps < 1) throw InvalidArgument("sa: sweeps must be at least 1");
        if (!(beta_min > 0.0) || !(beta_min <= beta_max) || !std::isfinite(beta_max)) {
            throw InvalidArgument("sa: need 0 < beta_min <= beta_max");
        }

        // geometric schedule, one beta per sweep
        std::vector<double> betas(static_cast<std::size_t>(sweeps));
        for (std::int64_t s = 0; s < sweeps; ++s) {
            const double t = sweeps == 1 ? 1.0 : static_cast<double>(s) / static_cast<double>(sweeps - 1);
            betas[static_cast<std::size_t>(s)] = beta_min * std::pow(beta_max / beta_min, t);
        }

        const detail::LocalFields graph(q);
        const std::size_t n = q.variable_ids.size();
        const bool spin = q.domain == Domain::Spin;
        const std::uint64_t seed = resolve_seed(params);

        std::vector<Sample> samples;
        samples.reserve(params.num_reads);
        std::vector<std::int8_t> state(n);
        for (std::uint64_t r = 0; r < params.num_reads; ++r) {
            Rng rng = Rng::stream(seed, r);
            for (auto& v : state) v = rng.below(2) ? 1 : (spin ? -1 : 0);
            std::vector<double> field = graph.fields(state);

            for (double beta : betas) {
                for (std::size_t i = 0; i < n; ++i) {
                    const int next = spin ? -state[i] : 1 - state[i];
                    const double dv = next - state[i];
                    const double delta = q.scale * dv * field[i];
                    if (delta > 0.0 && !(rng.uniform() < std::exp(-beta * delta))) continue;
                    state[i] = static_cast<std::int8_t>(next);
                    for (const auto& e : graph.neighbors[i]) field[e.j] += e.weight * dv;
                }
            }
            samples.push_back({state, energy(q, state), 1});
        }
        return SampleSet(q.domain, q.variable_ids, std::move(samples));
    }
};

}  // namespace

std::unique_ptr<Sampler> make_simulated_annealing_sampler() {
    return std::make_unique<SimulatedAnnealingSampler>();
}

SampleSet simulated_annealing(const QuboInstance& q, const SamplerParams& params) {
    return sample(SimulatedAnnealingSampler{}, q, params);
}

}  // namespace quboforge

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

#include "quboforge/qubo_instance.hpp"

#include <algorithm>

namespace quboforge {

void QuboInstance::validate() const {
    for (std::size_t i = 1; i < variable_ids.size(); ++i) {
        if (variable_ids[i - 1] == variable_ids[i]) {
            throw DataError("duplicate variable id " + std::to_string(variable_ids[i]));
        }
        if (variable_ids[i - 1] > variable_ids[i]) throw DataError("variable_ids are not sorted");
    }
    if (!(scale > 0.0)) throw DataError("scale must be positive");
    auto declared = [this](VarId v) {
        return std::binary_search(variable_ids.begin(), variable_ids.end(), v);
    };
    for (const auto& [v, c] : linear) {
        if (!declared(v)) throw DataError("linear term on undeclared variable " + std::to_string(v));
    }
    for (const auto& [ij, c] : quadratic) {
        if (ij.first >= ij.second) {
            throw DataError("quadratic term (" + std::to_string(ij.first) + ", " +
                            std::to_string(ij.second) + ") is not strictly ordered");
        }
        if (!declared(ij.first) || !declared(ij.second)) {
            throw DataError("quadratic term on undeclared variable");
        }
    }
    if (solutions && solutions->variable_ids() != variable_ids) {
        throw DataError("solutions are not aligned with the instance variables");
    }
}

std::size_t QuboInstance::index_of(VarId v) const {
    auto it = std::lower_bound(variable_ids.begin(), variable_ids.end(), v);
    if (it == variable_ids.end() || *it != v) {
        throw DataError("unknown variable id " + std::to_string(v));
    }
    return static_cast<std::size_t>(it - variable_ids.begin());
}

PseudoBooleanFunction QuboInstance::to_pbf() const {
    QuadraticForm form;
    form.linear = linear;
    form.quadratic = quadratic;
    form.constant = offset;
    return PseudoBooleanFunction::from_qubo_form(form);
}

QuboInstance QuboInstance::from_pbf(const PseudoBooleanFunction& f, Domain domain,
                                    const std::vector<VarId>& extra_ids) {
    QuadraticForm form = f.to_qubo_form();
    QuboInstance q;
    q.domain = domain;
    q.linear = std::move(form.linear);
    q.quadratic = std::move(form.quadratic);
    q.offset = form.constant;
    q.variable_ids = f.variables();
    q.variable_ids.insert(q.variable_ids.end(), extra_ids.begin(), extra_ids.end());
    std::sort(q.variable_ids.begin(), q.variable_ids.end());
    q.variable_ids.erase(std::unique(q.variable_ids.begin(), q.variable_ids.end()),
                         q.variable_ids.end());
    return q;
}

double energy(const QuboInstance& q, std::span<const std::int8_t> state) {
    if (state.size() != q.variable_ids.size()) {
        throw DataError("state has " + std::to_string(state.size()) + " values for " +
                        std::to_string(q.variable_ids.size()) + " variables");
    }
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (!in_domain(q.domain, state[i])) {
            throw DataError("value " + std::to_string(state[i]) + " of variable " +
                            std::to_string(q.variable_ids[i]) + " is outside the " +
                            std::string(to_string(q.domain)) + " domain");
        }
    }
    double total = q.offset;
    for (const auto& [v, c] : q.linear) total += c * state[q.index_of(v)];
    for (const auto& [ij, c] : q.quadratic) {
        total += c * state[q.index_of(ij.first)] * state[q.index_of(ij.second)];
    }
    return q.scale * total;
}

double energy(const QuboInstance& q, const Assignment& state) {
    std::vector<std::int8_t> aligned(q.variable_ids.size());
    for (std::size_t i = 0; i < q.variable_ids.size(); ++i) {
        auto it = state.find(q.variable_ids[i]);
        if (it == state.end()) throw MissingAssignment(q.variable_ids[i]);
        const double v = it->second;
        if (v != -1.0 && v != 0.0 && v != 1.0) {
            throw DataError("value of variable " + std::to_string(q.variable_ids[i]) +
                            " is outside the " + std::string(to_string(q.domain)) + " domain");
        }
        aligned[i] = static_cast<std::int8_t>(v);
    }
    return energy(q, aligned);
}

namespace {

void accumulate(std::map<VarId, double>& m, VarId v, double c) {
    if (c == 0.0) return;
    auto [it, inserted] = m.try_emplace(v, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0.0) m.erase(it);
    }
}

QuboInstance with_converted_solutions(QuboInstance out, const QuboInstance& in) {
    if (in.solutions) {
        std::vector<Sample> samples;
        for (const Sample& s : in.solutions->samples()) {
            samples.push_back({convert_state(s.state, in.domain, out.domain), s.value, s.reads});
        }
        SampleSet converted(out.domain, in.solutions->variable_ids(), std::move(samples));
        converted.timing() = in.solutions->timing();
        converted.metadata() = in.solutions->metadata();
        out.solutions = std::move(converted);
    }
    return out;
}

}  // namespace

QuboInstance to_spin(const QuboInstance& q) {
    if (q.domain != Domain::Boolean) throw InvalidArgument("to_spin expects a boolean instance");
    QuboInstance out;
    out.domain = Domain::Spin;
    out.variable_ids = q.variable_ids;
    out.scale = q.scale;
    out.id = q.id;
    out.metadata = q.metadata;
    double offset = q.offset;
    // a*x = a/2*s + a/2
    for (const auto& [v, a] : q.linear) {
        accumulate(out.linear, v, a / 2.0);
        offset += a / 2.0;
    }
    // b*x_i*x_j = b/4*(s_i*s_j + s_i + s_j + 1)
    for (const auto& [ij, b] : q.quadratic) {
        if (b == 0.0) continue;
        out.quadratic[ij] += b / 4.0;
        accumulate(out.linear, ij.first, b / 4.0);
        accumulate(out.linear, ij.second, b / 4.0);
        offset += b / 4.0;
    }
    std::erase_if(out.quadratic, [](const auto& kv) { return kv.second == 0.0; });
    out.offset = offset;
    return with_converted_solutions(std::move(out), q);
}

QuboInstance to_boolean(const QuboInstance& q) {
    if (q.domain != Domain::Spin) throw InvalidArgument("to_boolean expects a spin instance");
    QuboInstance out;
    out.domain = Domain::Boolean;
    out.variable_ids = q.variable_ids;
    out.scale = q.scale;
    out.id = q.id;
    out.metadata = q.metadata;
    double offset = q.offset;
    // h*s = 2h*x - h
    for (const auto& [v, h] : q.linear) {
        accumulate(out.linear, v, 2.0 * h);
        offset -= h;
    }
    // J*s_i*s_j = J*(4 x_i x_j - 2 x_i - 2 x_j + 1)
    for (const auto& [ij, J] : q.quadratic) {
        if (J == 0.0) continue;
        out.quadratic[ij] += 4.0 * J;
        accumulate(out.linear, ij.first, -2.0 * J);
        accumulate(out.linear, ij.second, -2.0 * J);
        offset += J;
    }
    std::erase_if(out.quadratic, [](const auto& kv) { return kv.second == 0.0; });
    out.offset = offset;
    return with_converted_solutions(std::move(out), q);
}

QuboInstance to_domain(const QuboInstance& q, Domain target) {
    if (q.domain == target) return q;
    return target == Domain::Spin ? to_spin(q) : to_boolean(q);
}

std::vector<std::int8_t> convert_state(std::span<const std::int8_t> state, Domain from, Domain to) {
    std::vector<std::int8_t> out(state.begin(), state.end());
    if (from == to) return out;
    for (auto& v : out) {
        if (from == Domain::Boolean) v = static_cast<std::int8_t>(2 * v - 1);
        else v = static_cast<std::int8_t>((v + 1) / 2);
    }
    return out;
}

}  // namespace quboforge

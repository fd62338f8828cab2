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

#include "quboforge/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace quboforge {

namespace {

std::string constraint_label(const Constraint& c, std::size_t index) {
    std::string label = "constraint " + std::to_string(index);
    if (c.name) label += " (" + *c.name + ")";
    return label;
}

std::string encoding_label(const Variable& v) {
    std::string label = "encoding of variable " + std::to_string(v.id);
    if (v.name) label += " (" + *v.name + ")";
    return label;
}

VariableEncoding encode_variable(const Variable& v, const CompilationSettings& settings,
                                 IdAllocator& fresh) {
    VariableEncoding e;
    switch (v.kind) {
        case VarKind::Binary:
            e = encode_binary(0, 1, fresh);
            break;
        case VarKind::Integer: {
            if (!std::isfinite(v.lower) || !std::isfinite(v.upper)) {
                throw InvalidArgument("compile: integer variable " + std::to_string(v.id) +
                                      " is unbounded");
            }
            auto it = settings.variable_encodings.find(v.id);
            const EncodingSpec& spec =
                it == settings.variable_encodings.end() ? settings.default_encoding : it->second;
            e = encode_integer(static_cast<std::int64_t>(std::ceil(v.lower)),
                               static_cast<std::int64_t>(std::floor(v.upper)), spec, fresh);
            break;
        }
        case VarKind::Continuous: {
            if (!std::isfinite(v.lower) || !std::isfinite(v.upper)) {
                throw InvalidArgument("compile: continuous variable " + std::to_string(v.id) +
                                      " is unbounded");
            }
            auto it = settings.variable_encodings.find(v.id);
            const EncodingSpec& spec =
                it == settings.variable_encodings.end() ? settings.continuous_encoding : it->second;
            e = encode_continuous(v.lower, v.upper, settings.continuous_bits, spec, fresh);
            break;
        }
    }
    e.source_id = v.id;
    return e;
}

double coefficient_ratio(const QuboInstance& q) {
    double hi = 0.0, lo = 0.0;
    auto visit = [&](double c) {
        const double a = std::abs(c);
        if (a == 0.0) return;
        hi = std::max(hi, a);
        lo = lo == 0.0 ? a : std::min(lo, a);
    };
    for (const auto& [v, c] : q.linear) visit(c);
    for (const auto& [ij, c] : q.quadratic) visit(c);
    return lo == 0.0 ? 0.0 : hi / lo;
}

}  // namespace

const VariableEncoding& VariableMap::encoding_of(VarId source_id) const {
    for (const VariableEncoding& e : encodings) {
        if (e.source_id == source_id) return e;
    }
    throw DataError("variable map has no encoding for variable " + std::to_string(source_id));
}

std::vector<VarId> VariableMap::encoding_bits() const {
    std::vector<VarId> out;
    for (const VariableEncoding& e : encodings) out.insert(out.end(), e.bits.begin(), e.bits.end());
    return out;
}

std::vector<VarId> VariableMap::slack_bits() const {
    std::vector<VarId> out;
    for (const ConstraintRecord& c : constraints) {
        if (c.slack) out.insert(out.end(), c.slack->bits.begin(), c.slack->bits.end());
    }
    return out;
}

bool VariableMap::ids_disjoint() const {
    std::set<VarId> seen;
    auto claim = [&seen](const std::vector<VarId>& ids) {
        for (VarId v : ids) {
            if (!seen.insert(v).second) return false;
        }
        return true;
    };
    std::vector<VarId> sources;
    for (const Variable& v : source.variables()) sources.push_back(v.id);
    return claim(sources) && claim(encoding_bits()) && claim(slack_bits()) && claim(auxiliaries);
}

double CompilationResult::source_value(double qubo_energy) const {
    return map.source.sense() == Sense::Max ? -qubo_energy : qubo_energy;
}

CompilationResult compile(const Model& model, const CompilationSettings& settings) {
    if (const auto diagnostics = validate(model); !diagnostics.empty()) {
        std::string message = "compile: model does not validate:";
        for (const Diagnostic& d : diagnostics) message += "\n  " + d.message;
        throw DataError(message);
    }

    CompilationResult result;
    VariableMap& map = result.map;
    CompilationReport& report = result.report;
    map.source = model;

    VarId first_fresh = 0;
    for (const Variable& v : model.variables()) first_fresh = std::max(first_fresh, v.id + 1);
    IdAllocator fresh(first_fresh);

    // Encode every source variable, binaries included, so that source ids
    // and bit ids never overlap.
    std::map<VarId, PseudoBooleanFunction> image;
    for (const Variable& v : model.variables()) {
        map.encodings.push_back(encode_variable(v, settings, fresh));
        image.emplace(v.id, map.encodings.back().expression());
        report.encoded_bits += map.encodings.back().bits.size();
    }
    auto lower = [&image](const Polynomial& p) {
        return p.lower([&image](VarId v) -> const PseudoBooleanFunction& { return image.at(v); });
    };

    PseudoBooleanFunction objective = lower(model.objective());
    if (model.sense() == Sense::Max) objective *= -1.0;
    report.stage_delta["objective"] = objective.delta();

    PseudoBooleanFunction encoding_penalties;
    for (std::size_t i = 0; i < map.encodings.size(); ++i) {
        const VariableEncoding& e = map.encodings[i];
        double rho = 0.0;
        if (!e.penalty.is_zero()) {
            rho = estimate_penalty_factor(objective, e.penalty, settings.penalty);
            encoding_penalties += rho * e.penalty;
        }
        map.encoding_rho.push_back(rho);
    }

    PseudoBooleanFunction constraint_penalties;
    for (std::size_t i = 0; i < model.constraints().size(); ++i) {
        const Constraint& c = model.constraints()[i];
        ConstraintRecord record;
        record.index = i;
        record.label = constraint_label(c, i);
        record.relation = c.relation;

        if (c.relation == Relation::SOS1) {
            std::vector<VarId> bits;
            for (VarId m : c.members) {
                const Variable& v = model.variable(m);
                if (v.kind != VarKind::Binary) {
                    throw InvalidArgument("compile: " + record.label + ": SOS1 member " +
                                          std::to_string(m) + " is not binary");
                }
                bits.push_back(map.encoding_of(m).bits.front());
            }
            record.penalty = penalize_sos1(bits);
        } else {
            const PseudoBooleanFunction g = lower(c.residual());
            try {
                InequalityPenalty p;
                if (c.lhs.degree() <= 1 && g.degree() <= 1) {
                    if (c.relation == Relation::EQ) {
                        const auto [lo, hi] = interval_bounds(g);
                        if (lo > 0.0 || hi < 0.0) {
                            throw InfeasibleError("equality cannot hold anywhere on the box");
                        }
                        p.penalty = penalize_linear_eq(g);
                    } else {
                        p = penalize_linear_ineq(g, c.relation, fresh, settings.default_encoding);
                    }
                } else {
                    p = penalize_quadratic(g, c.relation, fresh, settings.default_encoding);
                }
                record.penalty = std::move(p.penalty);
                record.slack = std::move(p.slack);
            } catch (const InfeasibleError& e) {
                throw InfeasibleError("compile: " + record.label + ": " + e.what());
            }
        }

        if (auto it = settings.constraint_penalties.find(i); it != settings.constraint_penalties.end()) {
            record.rho = estimate_penalty_factor(objective, record.penalty, PenaltyMode::fixed(it->second));
        } else {
            record.rho = estimate_penalty_factor(objective, record.penalty, settings.penalty);
        }
        constraint_penalties += record.rho * record.penalty;
        if (record.slack) {
            report.slack_bits += record.slack->bits.size();
            if (!record.slack->penalty.is_zero()) {
                record.slack_rho =
                    estimate_penalty_factor(objective, record.slack->penalty, settings.penalty);
                encoding_penalties += record.slack_rho * record.slack->penalty;
            }
        }
        report.constraint_rho.push_back(record.rho);
        map.constraints.push_back(std::move(record));
    }
    report.stage_delta["encoding_penalties"] = encoding_penalties.delta();
    report.stage_delta["constraint_penalties"] = constraint_penalties.delta();

    PseudoBooleanFunction total = objective + encoding_penalties + constraint_penalties;
    report.degree_before_quadratization = total.degree();
    report.delta_before = total.delta();
    report.stage_delta["before_quadratization"] = report.delta_before;

    Quadratization q = quadratize(total, fresh, settings.quadratization);
    if (q.auxiliaries.size() > settings.max_auxiliaries) {
        throw CapacityError("compile: quadratization needs " + std::to_string(q.auxiliaries.size()) +
                                " auxiliary variables, above the limit of " +
                                std::to_string(settings.max_auxiliaries),
                            q.auxiliaries.size(), settings.max_auxiliaries);
    }
    map.auxiliaries = q.auxiliaries;

    std::vector<VarId> declared = map.encoding_bits();
    const std::vector<VarId> slacks = map.slack_bits();
    declared.insert(declared.end(), slacks.begin(), slacks.end());
    declared.insert(declared.end(), q.auxiliaries.begin(), q.auxiliaries.end());
    QuboInstance qubo = QuboInstance::from_pbf(q.polynomial, Domain::Boolean, declared);
    qubo.metadata = model.metadata();
    qubo.metadata["quboforge.sense"] = std::string(to_string(model.sense()));
    result.qubo = to_domain(qubo, settings.target_domain);

    report.source_variables = model.variables().size();
    report.constraints = model.constraints().size();
    report.auxiliaries = q.auxiliaries.size();
    report.qubo_variables = result.qubo.variable_ids.size();
    report.linear_terms = result.qubo.linear.size();
    report.quadratic_terms = result.qubo.quadratic.size();
    report.delta_after = result.qubo.to_pbf().delta();
    report.stage_delta["after_quadratization"] = q.polynomial.delta();
    report.coefficient_ratio = coefficient_ratio(result.qubo);
    report.encoding_rho = map.encoding_rho;
    return result;
}

DecodedSolution decode_solution(const VariableMap& map, const Assignment& bits) {
    DecodedSolution out;
    const auto& variables = map.source.variables();
    for (std::size_t i = 0; i < map.encodings.size(); ++i) {
        const VariableEncoding& e = map.encodings[i];
        const DecodedValue d = decode(e, bits);
        out.values[e.source_id] = d.value;
        if (!d.admissible) {
            out.feasible = false;
            out.violations.push_back({encoding_label(variables[i]), e.penalty.evaluate(bits), true});
        }
    }
    Assignment source_values(out.values.begin(), out.values.end());
    for (const ConstraintRecord& record : map.constraints) {
        const double penalty = record.penalty.evaluate(bits);
        const Constraint& c = map.source.constraints()[record.index];
        Model single;
        single.add_constraint(c);
        const bool holds = is_feasible(single, source_values);
        if (!holds) out.feasible = false;
        if (penalty != 0.0 || !holds) out.violations.push_back({record.label, penalty, !holds});
        if (record.slack && !record.slack->penalty.is_zero() &&
            !decode(*record.slack, bits).admissible) {
            out.violations.push_back({"slack of " + record.label,
                                      record.slack->penalty.evaluate(bits), false});
        }
    }
    out.objective = map.source.objective().evaluate(source_values);
    return out;
}

DecodedSolution decode_sample(const CompilationResult& result, const SampleSet& samples,
                              const Sample& sample) {
    const std::vector<std::int8_t> state =
        convert_state(sample.state, samples.domain(), Domain::Boolean);
    Assignment bits;
    for (std::size_t i = 0; i < samples.variable_ids().size(); ++i) {
        bits[samples.variable_ids()[i]] = state[i];
    }
    return decode_solution(result.map, bits);
}

std::vector<std::int8_t> encode_solution(const CompilationResult& result,
                                         const std::map<VarId, double>& values) {
    const QuboInstance boolean = to_domain(result.qubo, Domain::Boolean);
    Assignment bits;
    for (VarId v : boolean.variable_ids) bits[v] = 0.0;

    Assignment source_values;
    for (const VariableEncoding& e : result.map.encodings) {
        auto it = values.find(e.source_id);
        if (it == values.end()) throw MissingAssignment(e.source_id);
        source_values[e.source_id] = it->second;
        const auto code = e.canonical_codeword(it->second);
        for (std::size_t i = 0; i < e.bits.size(); ++i) bits[e.bits[i]] = code[i];
    }
    for (const ConstraintRecord& record : result.map.constraints) {
        if (!record.slack) continue;
        const Constraint& c = result.map.source.constraints()[record.index];
        double residual = c.residual().evaluate(source_values);
        if (c.relation == Relation::GE) residual = -residual;
        const VariableEncoding& s = *record.slack;
        const double witness = std::clamp(-residual, s.lower, s.upper);
        const auto code = s.canonical_codeword(witness);
        for (std::size_t i = 0; i < s.bits.size(); ++i) bits[s.bits[i]] = code[i];
    }

    // Coordinate descent over the auxiliaries. The built-in rules never
    // multiply two auxiliaries, so one pass is exact for them.
    const PseudoBooleanFunction f = boolean.to_pbf();
    for (int pass = 0; pass < 8; ++pass) {
        bool changed = false;
        for (VarId w : result.map.auxiliaries) {
            const double before = bits[w];
            bits[w] = 0.0;
            const double off = f.evaluate(bits);
            bits[w] = 1.0;
            const double on = f.evaluate(bits);
            bits[w] = on < off ? 1.0 : 0.0;
            changed = changed || bits[w] != before;
        }
        if (!changed) break;
    }

    std::vector<std::int8_t> state;
    for (VarId v : boolean.variable_ids) state.push_back(static_cast<std::int8_t>(bits[v]));
    return convert_state(state, Domain::Boolean, result.qubo.domain);
}

}  // namespace quboforge

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

#include "format_util.hpp"
#include "quboforge/compiler.hpp"

namespace quboforge {

std::pair<double, double> interval_bounds(const PseudoBooleanFunction& g) {
    double lo = 0.0, hi = 0.0;
    for (const auto& [term, coeff] : g.terms()) {
        if (term.empty()) {
            lo += coeff;
            hi += coeff;
        } else if (coeff < 0.0) {
            lo += coeff;
        } else {
            hi += coeff;
        }
    }
    return {lo, hi};
}

PseudoBooleanFunction penalize_linear_eq(const PseudoBooleanFunction& g) {
    if (g.degree() > 1) {
        throw InvalidArgument("penalize_linear_eq: constraint function has degree " +
                              std::to_string(g.degree()) + "; use penalize_quadratic");
    }
    return g * g;
}

namespace {

bool integral(double v) { return std::floor(v) == v; }

bool has_integral_coefficients(const PseudoBooleanFunction& g) {
    for (const auto& [term, coeff] : g.terms()) {
        if (!integral(coeff)) return false;
    }
    return true;
}

/// (g + s)^2 for g <= 0, with s ranging over [0, -min g].
InequalityPenalty slack_penalty(PseudoBooleanFunction g, Relation relation, IdAllocator& fresh,
                                const EncodingSpec& slack_encoding, const char* who) {
    if (relation == Relation::GE) g *= -1.0;
    else if (relation != Relation::LE) {
        throw InvalidArgument(std::string(who) + ": relation must be LE or GE");
    }
    const auto [lo, hi] = interval_bounds(g);
    if (lo > 0.0) {
        throw InfeasibleError(std::string(who) + ": constraint is infeasible, its left side is at least " +
                              detail::format_double(lo) + " above the bound everywhere");
    }
    InequalityPenalty out;
    const double range = -lo;
    if (range > 0.0) {
        if (has_integral_coefficients(g)) {
            const auto top = static_cast<std::int64_t>(std::floor(range));
            if (has_structural_penalty(slack_encoding.method) || top > 0) {
                out.slack = encode_integer(0, top, slack_encoding, fresh);
            }
        } else {
            // Fractional data: the slack is discretized and the penalty may
            // not vanish exactly on feasible points.
            EncodingSpec base = has_structural_penalty(slack_encoding.method)
                                    ? EncodingSpec{Encoding::ArithmeticProgression}
                                    : slack_encoding;
            out.slack = encode_continuous(0.0, range, std::nullopt, base, fresh);
        }
    }
    PseudoBooleanFunction residual = g;
    if (out.slack) residual += out.slack->expression();
    out.penalty = residual * residual;
    return out;
}

}  // namespace

InequalityPenalty penalize_linear_ineq(const PseudoBooleanFunction& g, Relation relation,
                                       IdAllocator& fresh, const EncodingSpec& slack_encoding) {
    if (g.degree() > 1) {
        throw InvalidArgument("penalize_linear_ineq: constraint function has degree " +
                              std::to_string(g.degree()) + "; use penalize_quadratic");
    }
    return slack_penalty(g, relation, fresh, slack_encoding, "penalize_linear_ineq");
}

InequalityPenalty penalize_quadratic(const PseudoBooleanFunction& g, Relation relation,
                                     IdAllocator& fresh, const EncodingSpec& slack_encoding) {
    if (g.degree() > 2) {
        throw InvalidArgument("penalize_quadratic: constraint function has degree " +
                              std::to_string(g.degree()));
    }
    if (relation == Relation::EQ) {
        const auto [lo, hi] = interval_bounds(g);
        if (lo > 0.0 || hi < 0.0) {
            throw InfeasibleError("penalize_quadratic: equality cannot hold anywhere on the box");
        }
        return {g * g, std::nullopt};
    }
    return slack_penalty(g, relation, fresh, slack_encoding, "penalize_quadratic");
}

PseudoBooleanFunction penalize_sos1(const std::vector<VarId>& members) {
    if (members.empty()) throw InvalidArgument("penalize_sos1: member list is empty");
    PseudoBooleanFunction out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (members[i] == members[j]) {
                throw InvalidArgument("penalize_sos1: duplicate member x" + std::to_string(members[i]));
            }
            out.add_term(Term{members[i], members[j]}, 1.0);
        }
    }
    return out;
}

PenaltyMode PenaltyMode::fixed(double rho) {
    if (!(rho > 0.0)) throw InvalidArgument("penalty factor must be positive");
    return {Kind::Fixed, rho};
}

double estimate_penalty_factor(const PseudoBooleanFunction& objective,
                               const PseudoBooleanFunction& /*constraint_penalty*/,
                               const PenaltyMode& mode) {
    if (mode.kind == PenaltyMode::Kind::Fixed) {
        if (!(mode.rho > 0.0)) throw InvalidArgument("penalty factor must be positive");
        return mode.rho;
    }
    double total = 1.0;
    for (const auto& [term, coeff] : objective.terms()) {
        if (!term.empty()) total += std::abs(coeff);
    }
    return total;
}

}  // namespace quboforge

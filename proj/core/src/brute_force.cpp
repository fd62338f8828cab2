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

#include <algorithm>
#include <cmath>

#include "quboforge/model.hpp"

namespace quboforge {

namespace {

/// Polynomial rewritten over dense variable positions.
struct IndexedPolynomial {
    struct Entry {
        std::vector<std::size_t> factors;
        double coeff;
    };
    std::vector<Entry> entries;

    IndexedPolynomial(const Polynomial& p, const std::vector<VarId>& ids) {
        for (const auto& [mono, coeff] : p.terms()) {
            Entry e{{}, coeff};
            for (VarId v : mono) {
                auto it = std::lower_bound(ids.begin(), ids.end(), v);
                e.factors.push_back(static_cast<std::size_t>(it - ids.begin()));
            }
            entries.push_back(std::move(e));
        }
    }

    double operator()(const std::vector<double>& x) const {
        double total = 0.0;
        for (const Entry& e : entries) {
            double product = e.coeff;
            for (std::size_t f : e.factors) product *= x[f];
            total += product;
        }
        return total;
    }
};

struct IndexedConstraint {
    IndexedPolynomial lhs;
    Relation relation;
    double rhs;
    std::vector<std::size_t> members;
};

constexpr double kTol = 1e-9;

bool satisfied(const IndexedConstraint& c, const std::vector<double>& x) {
    if (c.relation == Relation::SOS1) {
        int nonzero = 0;
        for (std::size_t m : c.members) nonzero += x[m] != 0.0;
        return nonzero <= 1;
    }
    const double lhs = c.lhs(x);
    const double slack = kTol * std::max(1.0, std::abs(c.rhs));
    switch (c.relation) {
        case Relation::EQ: return std::abs(lhs - c.rhs) <= slack;
        case Relation::LE: return lhs <= c.rhs + slack;
        case Relation::GE: return lhs >= c.rhs - slack;
        case Relation::SOS1: break;
    }
    return true;
}

}  // namespace

std::uint64_t brute_force_space(const Model& model) {
    std::uint64_t space = 1;
    constexpr std::uint64_t kSaturated = std::uint64_t{1} << 62;
    for (const Variable& v : model.variables()) {
        std::uint64_t size = 2;
        if (v.kind == VarKind::Continuous) {
            throw InvalidArgument("brute_force_solve: continuous variable " + std::to_string(v.id) +
                                  " is not supported");
        }
        if (v.kind == VarKind::Integer) {
            if (!std::isfinite(v.lower) || !std::isfinite(v.upper)) {
                throw InvalidArgument("brute_force_solve: unbounded integer variable " +
                                      std::to_string(v.id));
            }
            const double width = std::floor(v.upper) - std::ceil(v.lower) + 1.0;
            if (width < 1.0) return 0;
            size = width >= static_cast<double>(kSaturated) ? kSaturated
                                                            : static_cast<std::uint64_t>(width);
        }
        space = space > kSaturated / size ? kSaturated : space * size;
    }
    return space;
}

BruteForceResult brute_force_solve(const Model& model, std::uint64_t cap) {
    const std::uint64_t space = brute_force_space(model);
    if (space > cap) {
        throw CapacityError("brute_force_solve: search space of " + std::to_string(space) +
                                " assignments exceeds the cap of " + std::to_string(cap),
                            space, cap);
    }

    BruteForceResult result;
    std::vector<const Variable*> vars;
    for (const Variable& v : model.variables()) vars.push_back(&v);
    std::sort(vars.begin(), vars.end(),
              [](const Variable* a, const Variable* b) { return a->id < b->id; });
    for (const Variable* v : vars) result.variable_ids.push_back(v->id);
    if (space == 0) return result;

    std::vector<double> lo(vars.size()), hi(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        lo[i] = vars[i]->kind == VarKind::Binary ? 0.0 : std::ceil(vars[i]->lower);
        hi[i] = vars[i]->kind == VarKind::Binary ? 1.0 : std::floor(vars[i]->upper);
    }

    const IndexedPolynomial objective(model.objective(), result.variable_ids);
    const double sign = model.sense() == Sense::Min ? 1.0 : -1.0;
    std::vector<IndexedConstraint> constraints;
    for (const Constraint& c : model.constraints()) {
        IndexedConstraint ic{IndexedPolynomial(c.lhs, result.variable_ids), c.relation, c.rhs, {}};
        for (VarId m : c.members) {
            auto it = std::lower_bound(result.variable_ids.begin(), result.variable_ids.end(), m);
            ic.members.push_back(static_cast<std::size_t>(it - result.variable_ids.begin()));
        }
        constraints.push_back(std::move(ic));
    }

    // Odometer over the box, last variable fastest, so assignments are visited
    // in lexicographic order and the first optimum found is the smallest.
    std::vector<double> x = lo;
    double best = 0.0;
    for (;;) {
        ++result.searched;
        const bool ok = std::all_of(constraints.begin(), constraints.end(),
                                    [&x](const IndexedConstraint& c) { return satisfied(c, x); });
        if (ok) {
            ++result.feasible_count;
            const double value = sign * objective(x);
            if (!result.feasible || value < best - kTol * std::max(1.0, std::abs(best))) {
                result.feasible = true;
                best = value;
                result.optima.clear();
                result.optima.push_back(x);
            } else if (std::abs(value - best) <= kTol * std::max(1.0, std::abs(best))) {
                result.optima.push_back(x);
            }
        }
        std::size_t i = x.size();
        while (i > 0) {
            --i;
            if (x[i] < hi[i]) {
                x[i] += 1.0;
                break;
            }
            x[i] = lo[i];
            if (i == 0) {
                i = x.size() + 1;
                break;
            }
        }
        if (i == x.size() + 1 || x.empty()) break;
    }
    if (result.feasible) result.objective = sign * best;
    return result;
}

}  // namespace quboforge

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

#include "quboforge/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>


namespace quboforge {

std::string_view to_string(VarKind kind) noexcept {
    switch (kind) {
        case VarKind::Binary: return "binary";
        case VarKind::Integer: return "integer";
        case VarKind::Continuous: return "continuous";
    }
    return "?";
}

std::string_view to_string(Relation relation) noexcept {
    switch (relation) {
        case Relation::EQ: return "eq";
        case Relation::LE: return "le";
        case Relation::GE: return "ge";
        case Relation::SOS1: return "sos1";
    }
    return "?";
}

std::string_view to_string(Sense sense) noexcept { return sense == Sense::Min ? "min" : "max"; }

VarKind parse_var_kind(std::string_view text) {
    if (text == "binary") return VarKind::Binary;
    if (text == "integer") return VarKind::Integer;
    if (text == "continuous") return VarKind::Continuous;
    throw DataError("unknown variable kind '" + std::string(text) + "'");
}

Relation parse_relation(std::string_view text) {
    if (text == "eq") return Relation::EQ;
    if (text == "le") return Relation::LE;
    if (text == "ge") return Relation::GE;
    if (text == "sos1") return Relation::SOS1;
    throw DataError("unknown constraint relation '" + std::string(text) + "'");
}

Sense parse_sense(std::string_view text) {
    if (text == "min") return Sense::Min;
    if (text == "max") return Sense::Max;
    throw DataError("unknown objective sense '" + std::string(text) + "'");
}

VarId Model::next_id() const noexcept {
    VarId next = 0;
    for (const Variable& v : variables_) next = std::max(next, v.id + 1);
    return next;
}

VarId Model::add_binary(std::optional<std::string> name) {
    const VarId id = next_id();
    variables_.push_back({id, VarKind::Binary, 0.0, 1.0, std::move(name)});
    return id;
}

VarId Model::add_integer(double lower, double upper, std::optional<std::string> name) {
    const VarId id = next_id();
    variables_.push_back({id, VarKind::Integer, lower, upper, std::move(name)});
    return id;
}

VarId Model::add_continuous(double lower, double upper, std::optional<std::string> name) {
    const VarId id = next_id();
    variables_.push_back({id, VarKind::Continuous, lower, upper, std::move(name)});
    return id;
}

void Model::add_variable(Variable variable) { variables_.push_back(std::move(variable)); }

void Model::set_objective(Polynomial objective, Sense sense) {
    objective_ = std::move(objective);
    sense_ = sense;
}

void Model::add_constraint(Constraint constraint) { constraints_.push_back(std::move(constraint)); }

void Model::add_constraint(Polynomial lhs, Relation relation, double rhs,
                           std::optional<std::string> name) {
    Constraint c;
    c.lhs = std::move(lhs);
    c.relation = relation;
    c.rhs = rhs;
    c.name = std::move(name);
    constraints_.push_back(std::move(c));
}

void Model::add_sos1(std::vector<VarId> members, std::optional<std::string> name) {
    Constraint c;
    c.relation = Relation::SOS1;
    c.members = std::move(members);
    c.name = std::move(name);
    constraints_.push_back(std::move(c));
}

const Variable* Model::find(VarId id) const noexcept {
    for (const Variable& v : variables_) {
        if (v.id == id) return &v;
    }
    return nullptr;
}

const Variable& Model::variable(VarId id) const {
    const Variable* v = find(id);
    if (!v) throw DataError("undeclared variable " + std::to_string(id));
    return *v;
}

std::vector<Diagnostic> validate(const Model& model) {
    using Code = Diagnostic::Code;
    std::vector<Diagnostic> out;
    std::set<VarId> declared;
    for (const Variable& v : model.variables()) {
        const std::string label = "variable " + std::to_string(v.id);
        if (!declared.insert(v.id).second) {
            out.push_back({Code::DuplicateId, "duplicate variable id " + std::to_string(v.id)});
        }
        if (v.kind == VarKind::Binary) {
            if (v.lower != 0.0 || v.upper != 1.0) {
                out.push_back({Code::InvalidBounds, label + ": binary bounds must be [0, 1]"});
            }
            continue;
        }
        if (!std::isfinite(v.lower) || !std::isfinite(v.upper)) {
            out.push_back({Code::InfiniteBounds, label + ": infinite bounds on a " +
                                                     std::string(to_string(v.kind)) + " variable"});
            continue;
        }
        if (v.lower > v.upper) {
            out.push_back({Code::InvalidBounds, label + ": lower bound exceeds upper bound"});
        }
        if (v.kind == VarKind::Integer &&
            (std::floor(v.lower) != v.lower || std::floor(v.upper) != v.upper)) {
            out.push_back({Code::InvalidBounds, label + ": integer bounds must be integral"});
        }
    }

    auto check_expression = [&](const Polynomial& p, const std::string& where) {
        std::set<VarId> reported;
        for (VarId v : p.variables()) {
            if (!declared.count(v) && reported.insert(v).second) {
                out.push_back({Code::UndeclaredVariable, "undeclared variable " + std::to_string(v) +
                                                             " in " + where});
            }
        }
        if (p.degree() > 2) {
            out.push_back({Code::DegreeTooHigh, "degree " + std::to_string(p.degree()) +
                                                    " exceeds quadratic IR in " + where});
        }
    };

    check_expression(model.objective(), "objective");
    for (std::size_t i = 0; i < model.constraints().size(); ++i) {
        const Constraint& c = model.constraints()[i];
        const std::string where = "constraint " + std::to_string(i);
        if (c.relation != Relation::SOS1) {
            check_expression(c.lhs, where);
            continue;
        }
        if (c.members.empty()) {
            out.push_back({Code::InvalidSos1, where + ": SOS1 member list is empty"});
        }
        std::set<VarId> seen;
        for (VarId v : c.members) {
            if (!seen.insert(v).second) {
                out.push_back({Code::InvalidSos1, where + ": duplicate SOS1 member " +
                                                      std::to_string(v)});
            }
            if (!declared.count(v)) {
                out.push_back({Code::UndeclaredVariable,
                               "undeclared variable " + std::to_string(v) + " in " + where});
            }
        }
    }
    return out;
}

bool is_feasible(const Model& model, const Assignment& values, double tol) {
    for (const Constraint& c : model.constraints()) {
        if (c.relation == Relation::SOS1) {
            int nonzero = 0;
            for (VarId v : c.members) {
                auto it = values.find(v);
                if (it == values.end()) throw MissingAssignment(v);
                if (std::abs(it->second) > tol) ++nonzero;
            }
            if (nonzero > 1) return false;
            continue;
        }
        const double lhs = c.lhs.evaluate(values);
        const double slack = tol * std::max(1.0, std::abs(c.rhs));
        switch (c.relation) {
            case Relation::EQ:
                if (std::abs(lhs - c.rhs) > slack) return false;
                break;
            case Relation::LE:
                if (lhs > c.rhs + slack) return false;
                break;
            case Relation::GE:
                if (lhs < c.rhs - slack) return false;
                break;
            case Relation::SOS1:
                break;
        }
    }
    return true;
}

}  // namespace quboforge

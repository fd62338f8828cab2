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
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quboforge/polynomial.hpp"

namespace quboforge {

enum class VarKind { Binary, Integer, Continuous };
enum class Relation { EQ, LE, GE, SOS1 };
enum class Sense { Min, Max };

std::string_view to_string(VarKind kind) noexcept;
std::string_view to_string(Relation relation) noexcept;
std::string_view to_string(Sense sense) noexcept;
VarKind parse_var_kind(std::string_view text);
Relation parse_relation(std::string_view text);
Sense parse_sense(std::string_view text);

struct Variable {
    VarId id = 0;
    VarKind kind = VarKind::Binary;
    double lower = 0.0;
    double upper = 1.0;
    std::optional<std::string> name;

    friend bool operator==(const Variable&, const Variable&) = default;
};

/// `lhs relation rhs`, or an SOS1 set over `members` (lhs and rhs unused).
struct Constraint {
    Polynomial lhs;
    Relation relation = Relation::EQ;
    double rhs = 0.0;
    std::vector<VarId> members;
    std::optional<std::string> name;

    /// lhs - rhs, the function whose sign the relation constrains.
    Polynomial residual() const { return lhs - Polynomial::constant(rhs); }

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct Diagnostic {
    enum class Code {
        DuplicateId,
        UndeclaredVariable,
        DegreeTooHigh,
        InfiniteBounds,
        InvalidBounds,
        InvalidSos1,
    };
    Code code;
    std::string message;
};

/// Constrained mixed-integer quadratic program: typed, bounded variables, a
/// quadratic objective and a list of constraints.
class Model {
 public:
    Model() = default;

    VarId add_binary(std::optional<std::string> name = std::nullopt);
    VarId add_integer(double lower, double upper, std::optional<std::string> name = std::nullopt);
    VarId add_continuous(double lower, double upper,
                         std::optional<std::string> name = std::nullopt);
    /// Adds a variable with an explicit id. Validation catches clashes.
    void add_variable(Variable variable);

    void set_objective(Polynomial objective, Sense sense = Sense::Min);
    void add_constraint(Constraint constraint);
    void add_constraint(Polynomial lhs, Relation relation, double rhs,
                        std::optional<std::string> name = std::nullopt);
    void add_sos1(std::vector<VarId> members, std::optional<std::string> name = std::nullopt);

    const std::vector<Variable>& variables() const noexcept { return variables_; }
    const Polynomial& objective() const noexcept { return objective_; }
    Sense sense() const noexcept { return sense_; }
    const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
    std::map<std::string, std::string>& metadata() noexcept { return metadata_; }
    const std::map<std::string, std::string>& metadata() const noexcept { return metadata_; }

    const Variable* find(VarId id) const noexcept;
    const Variable& variable(VarId id) const;

    friend bool operator==(const Model&, const Model&) = default;

 private:
    VarId next_id() const noexcept;

    std::vector<Variable> variables_;
    Polynomial objective_;
    Sense sense_ = Sense::Min;
    std::vector<Constraint> constraints_;
    std::map<std::string, std::string> metadata_;
};

/// Structural diagnostics; an empty result means the model is well formed.
std::vector<Diagnostic> validate(const Model& model);

/// Travelling salesman over an n x n distance matrix. Variable x[i][k]
/// (city i in slot k) has id i*n + k. Slots wrap around.
Model tsp_model(std::size_t n, const std::vector<std::vector<double>>& distances);

/// Number partitioning, min (sum_i w_i (2 x_i - 1))^2.
Model npp_model(const std::vector<double>& weights);

struct BruteForceResult {
    /// Variable ids in ascending order; every optimum lists values in this order.
    std::vector<VarId> variable_ids;
    /// All optimal assignments, lexicographically smallest first.
    std::vector<std::vector<double>> optima;
    double objective = std::numeric_limits<double>::quiet_NaN();
    bool feasible = false;
    std::uint64_t feasible_count = 0;
    std::uint64_t searched = 0;
};

/// Size of the exhaustive search space; throws for continuous variables.
std::uint64_t brute_force_space(const Model& model);

/// Exhaustive reference solver for binary/integer models. Refuses with a
/// CapacityError when the search space exceeds `cap`.
BruteForceResult brute_force_solve(const Model& model, std::uint64_t cap = std::uint64_t{1} << 24);

/// True when `values` (one per variable, in model order) satisfies every
/// constraint within `tol`.
bool is_feasible(const Model& model, const Assignment& values, double tol = 1e-9);

}  // namespace quboforge

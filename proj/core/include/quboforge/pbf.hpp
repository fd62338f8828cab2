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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quboforge/errors.hpp"

namespace quboforge {

/// Opaque non-negative variable identifier. Ids are handed out by the owning
/// model or compilation; polynomials never invent them.
using VarId = std::uint32_t;

/// A set of variables, kept sorted ascending and duplicate-free. The empty
/// term is the constant monomial.
class Term {
 public:
    Term() = default;
    Term(std::initializer_list<VarId> vars);
    explicit Term(std::vector<VarId> vars);

    std::size_t degree() const noexcept { return vars_.size(); }
    bool empty() const noexcept { return vars_.empty(); }
    bool contains(VarId v) const noexcept;

    const std::vector<VarId>& variables() const noexcept { return vars_; }
    auto begin() const noexcept { return vars_.begin(); }
    auto end() const noexcept { return vars_.end(); }
    VarId operator[](std::size_t i) const { return vars_[i]; }

    /// Set union; this is where x*x = x happens.
    Term merged(const Term& other) const;
    Term without(VarId v) const;

    std::string to_string() const;

    friend auto operator<=>(const Term&, const Term&) = default;
    friend bool operator==(const Term&, const Term&) = default;

 private:
    std::vector<VarId> vars_;
};

using Assignment = std::map<VarId, double>;

/// Raised when evaluation meets a variable the assignment does not cover.
class MissingAssignment : public DataError {
 public:
    explicit MissingAssignment(VarId variable);
    VarId variable() const noexcept { return variable_; }

 private:
    VarId variable_;
};

struct DegreeAndDelta {
    std::size_t degree = 0;
    double delta = 0.0;
};

/// Degree-2 view of a polynomial: diagonal, strictly ordered off-diagonal
/// pairs and the constant.
struct QuadraticForm {
    std::map<VarId, double> linear;
    std::map<std::pair<VarId, VarId>, double> quadratic;
    double constant = 0.0;
};

/// Multilinear real polynomial over binary variables,
///
///     f(x) = sum_w c_w prod_{j in w} x_j,
///
/// stored sparsely as Term -> coefficient. Coefficients that are exactly zero
/// are never stored; no epsilon pruning is done so tiny coefficients survive.
class PseudoBooleanFunction {
 public:
    using TermMap = std::map<Term, double>;

    PseudoBooleanFunction() = default;

    static PseudoBooleanFunction constant(double value);
    static PseudoBooleanFunction variable(VarId v, double coeff = 1.0);
    static PseudoBooleanFunction monomial(Term term, double coeff);

    /// Adds coeff to the coefficient of term, erasing it if the sum is zero.
    void add_term(const Term& term, double coeff);

    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    double coefficient(const Term& term) const;
    double constant_term() const { return coefficient(Term{}); }

    /// Sorted list of every variable that appears in some term.
    std::vector<VarId> variables() const;

    double evaluate(const Assignment& x) const;

    /// Evaluates with a caller-supplied lookup `value_of(VarId) -> double`.
    template <class ValueOf>
    double evaluate_with(ValueOf&& value_of) const {
        double total = 0.0;
        for (const auto& [term, coeff] : terms_) {
            double product = coeff;
            for (VarId v : term) {
                product *= value_of(v);
                if (product == 0.0) break;
            }
            total += product;
        }
        return total;
    }

    std::size_t degree() const noexcept;
    /// Largest coefficient magnitude, constant included.
    double delta() const noexcept;
    DegreeAndDelta degree_and_delta() const noexcept { return {degree(), delta()}; }

    /// Replaces v by a polynomial of degree <= 1 that does not mention v.
    PseudoBooleanFunction substitute(VarId v, const PseudoBooleanFunction& affine) const;

    /// Requires degree <= 2.
    QuadraticForm to_qubo_form() const;
    static PseudoBooleanFunction from_qubo_form(const QuadraticForm& form);

    std::string to_string() const;

    PseudoBooleanFunction& operator+=(const PseudoBooleanFunction& other);
    PseudoBooleanFunction& operator-=(const PseudoBooleanFunction& other);
    PseudoBooleanFunction& operator*=(double scalar);

    friend PseudoBooleanFunction operator+(PseudoBooleanFunction a, const PseudoBooleanFunction& b) {
        return a += b;
    }
    friend PseudoBooleanFunction operator-(PseudoBooleanFunction a, const PseudoBooleanFunction& b) {
        return a -= b;
    }
    friend PseudoBooleanFunction operator*(PseudoBooleanFunction f, double s) { return f *= s; }
    friend PseudoBooleanFunction operator*(double s, PseudoBooleanFunction f) { return f *= s; }
    friend PseudoBooleanFunction operator*(const PseudoBooleanFunction& f,
                                           const PseudoBooleanFunction& g);

    friend bool operator==(const PseudoBooleanFunction&, const PseudoBooleanFunction&) = default;

 private:
    TermMap terms_;
};

using PBF = PseudoBooleanFunction;

/// a*f + b*g with exact term merging.
PseudoBooleanFunction combine(double a, const PseudoBooleanFunction& f, double b,
                              const PseudoBooleanFunction& g);

/// Product with idempotent reduction (keys merge by set union).
PseudoBooleanFunction multiply(const PseudoBooleanFunction& f, const PseudoBooleanFunction& g);

}  // namespace quboforge

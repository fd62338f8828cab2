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

#include "quboforge/pbf.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <sstream>

#include "format_util.hpp"

namespace quboforge {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : DataError(message), line_(line), column_(column) {}

Term::Term(std::initializer_list<VarId> vars) : Term(std::vector<VarId>(vars)) {}

Term::Term(std::vector<VarId> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

bool Term::contains(VarId v) const noexcept {
    return std::binary_search(vars_.begin(), vars_.end(), v);
}

Term Term::merged(const Term& other) const {
    Term out;
    out.vars_.reserve(vars_.size() + other.vars_.size());
    std::set_union(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(),
                   std::back_inserter(out.vars_));
    return out;
}

Term Term::without(VarId v) const {
    Term out;
    out.vars_.reserve(vars_.size());
    std::copy_if(vars_.begin(), vars_.end(), std::back_inserter(out.vars_),
                 [v](VarId u) { return u != v; });
    return out;
}

std::string Term::to_string() const {
    if (vars_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) out += '*';
        out += 'x';
        out += std::to_string(vars_[i]);
    }
    return out;
}

MissingAssignment::MissingAssignment(VarId variable)
    : DataError("missing assignment for variable " + std::to_string(variable)),
      variable_(variable) {}

PseudoBooleanFunction PseudoBooleanFunction::constant(double value) {
    PseudoBooleanFunction f;
    f.add_term(Term{}, value);
    return f;
}

PseudoBooleanFunction PseudoBooleanFunction::variable(VarId v, double coeff) {
    PseudoBooleanFunction f;
    f.add_term(Term{v}, coeff);
    return f;
}

PseudoBooleanFunction PseudoBooleanFunction::monomial(Term term, double coeff) {
    PseudoBooleanFunction f;
    f.add_term(term, coeff);
    return f;
}

void PseudoBooleanFunction::add_term(const Term& term, double coeff) {
    if (coeff == 0.0) return;
    auto [it, inserted] = terms_.try_emplace(term, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0.0) terms_.erase(it);
    }
}

double PseudoBooleanFunction::coefficient(const Term& term) const {
    auto it = terms_.find(term);
    return it == terms_.end() ? 0.0 : it->second;
}

std::vector<VarId> PseudoBooleanFunction::variables() const {
    std::vector<VarId> out;
    for (const auto& [term, coeff] : terms_) out.insert(out.end(), term.begin(), term.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double PseudoBooleanFunction::evaluate(const Assignment& x) const {
    double total = 0.0;
    for (const auto& [term, coeff] : terms_) {
        double product = coeff;
        // Every variable is looked up, even after a zero factor, so that an
        // incomplete assignment is always reported.
        for (VarId v : term) {
            auto it = x.find(v);
            if (it == x.end()) throw MissingAssignment(v);
            product *= it->second;
        }
        total += product;
    }
    return total;
}

std::size_t PseudoBooleanFunction::degree() const noexcept {
    std::size_t d = 0;
    for (const auto& [term, coeff] : terms_) d = std::max(d, term.degree());
    return d;
}

double PseudoBooleanFunction::delta() const noexcept {
    double d = 0.0;
    for (const auto& [term, coeff] : terms_) d = std::max(d, std::abs(coeff));
    return d;
}

PseudoBooleanFunction PseudoBooleanFunction::substitute(VarId v,
                                                        const PseudoBooleanFunction& affine) const {
    if (affine.degree() > 1) {
        throw InvalidArgument("substitute: replacement for x" + std::to_string(v) +
                              " has degree " + std::to_string(affine.degree()) +
                              "; at most 1 is allowed");
    }
    for (const auto& [term, coeff] : affine.terms()) {
        if (term.contains(v)) {
            throw InvalidArgument("substitute: replacement for x" + std::to_string(v) +
                                  " refers to x" + std::to_string(v));
        }
    }
    PseudoBooleanFunction out;
    for (const auto& [term, coeff] : terms_) {
        if (!term.contains(v)) {
            out.add_term(term, coeff);
            continue;
        }
        const Term rest = term.without(v);
        for (const auto& [aterm, acoeff] : affine.terms()) {
            out.add_term(rest.merged(aterm), coeff * acoeff);
        }
    }
    return out;
}

QuadraticForm PseudoBooleanFunction::to_qubo_form() const {
    QuadraticForm form;
    for (const auto& [term, coeff] : terms_) {
        switch (term.degree()) {
            case 0:
                form.constant = coeff;
                break;
            case 1:
                form.linear.emplace(term[0], coeff);
                break;
            case 2:
                form.quadratic.emplace(std::pair{term[0], term[1]}, coeff);
                break;
            default:
                throw InvalidArgument("polynomial is not quadratic: term " + term.to_string() +
                                      " has degree " + std::to_string(term.degree()));
        }
    }
    return form;
}

PseudoBooleanFunction PseudoBooleanFunction::from_qubo_form(const QuadraticForm& form) {
    PseudoBooleanFunction f;
    f.add_term(Term{}, form.constant);
    for (const auto& [v, c] : form.linear) f.add_term(Term{v}, c);
    for (const auto& [ij, c] : form.quadratic) f.add_term(Term{ij.first, ij.second}, c);
    return f;
}

std::string PseudoBooleanFunction::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [term, coeff] : terms_) {
        if (!first) out += coeff < 0 ? " - " : " + ";
        else if (coeff < 0) out += "-";
        first = false;
        const double mag = std::abs(coeff);
        if (term.empty()) {
            out += detail::format_double(mag);
        } else {
            if (mag != 1.0) out += detail::format_double(mag) + "*";
            out += term.to_string();
        }
    }
    return out;
}

PseudoBooleanFunction& PseudoBooleanFunction::operator+=(const PseudoBooleanFunction& other) {
    for (const auto& [term, coeff] : other.terms_) add_term(term, coeff);
    return *this;
}

PseudoBooleanFunction& PseudoBooleanFunction::operator-=(const PseudoBooleanFunction& other) {
    for (const auto& [term, coeff] : other.terms_) add_term(term, -coeff);
    return *this;
}

PseudoBooleanFunction& PseudoBooleanFunction::operator*=(double scalar) {
    if (scalar == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= scalar;
        // Underflow can produce an exact zero.
        if (it->second == 0.0) it = terms_.erase(it);
        else ++it;
    }
    return *this;
}

PseudoBooleanFunction operator*(const PseudoBooleanFunction& f, const PseudoBooleanFunction& g) {
    PseudoBooleanFunction out;
    for (const auto& [tf, cf] : f.terms_) {
        for (const auto& [tg, cg] : g.terms_) out.add_term(tf.merged(tg), cf * cg);
    }
    return out;
}

PseudoBooleanFunction combine(double a, const PseudoBooleanFunction& f, double b,
                              const PseudoBooleanFunction& g) {
    PseudoBooleanFunction out;
    if (a != 0.0) {
        for (const auto& [term, coeff] : f.terms()) out.add_term(term, a * coeff);
    }
    if (b != 0.0) {
        for (const auto& [term, coeff] : g.terms()) out.add_term(term, b * coeff);
    }
    return out;
}

PseudoBooleanFunction multiply(const PseudoBooleanFunction& f, const PseudoBooleanFunction& g) {
    return f * g;
}

}  // namespace quboforge

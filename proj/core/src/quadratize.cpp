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

#include "quboforge/compiler.hpp"

namespace quboforge {

PseudoBooleanFunction quadratize_ntr_kzfd(const Term& term, double coeff, IdAllocator& fresh) {
    if (term.degree() < 3) return PseudoBooleanFunction::monomial(term, coeff);
    if (!(coeff < 0.0)) {
        throw InvalidArgument("NTR-KZFD applies to negative monomials; " + term.to_string() +
                              " has a non-negative coefficient");
    }
    const double k = static_cast<double>(term.degree());
    const double magnitude = -coeff;
    const VarId w = fresh.next();
    PseudoBooleanFunction out;
    out.add_term(Term{w}, magnitude * (k - 1.0));
    for (VarId x : term) out.add_term(Term{x, w}, -magnitude);
    return out;
}

PseudoBooleanFunction quadratize_ptr_bg(const Term& term, double coeff, IdAllocator& fresh) {
    if (term.degree() < 3) return PseudoBooleanFunction::monomial(term, coeff);
    if (!(coeff > 0.0)) {
        throw InvalidArgument("PTR-BG applies to positive monomials; " + term.to_string() +
                              " has a non-positive coefficient");
    }
    const std::size_t k = term.degree();
    const auto& x = term.variables();
    PseudoBooleanFunction out;
    // Indices are 0-based here: auxiliary i pairs with x[i] and x[i+1..k-1].
    for (std::size_t i = 0; i + 2 < k; ++i) {
        const VarId w = fresh.next();
        out.add_term(Term{w}, coeff * static_cast<double>(k - i - 2));
        out.add_term(Term{w, x[i]}, coeff);
        for (std::size_t j = i + 1; j < k; ++j) out.add_term(Term{w, x[j]}, -coeff);
    }
    out.add_term(Term{x[k - 2], x[k - 1]}, coeff);
    return out;
}

namespace {

PseudoBooleanFunction ntr_ptr(const Term& term, double coeff, IdAllocator& fresh) {
    if (term.degree() < 3) return PseudoBooleanFunction::monomial(term, coeff);
    return coeff < 0.0 ? quadratize_ntr_kzfd(term, coeff, fresh)
                       : quadratize_ptr_bg(term, coeff, fresh);
}

}  // namespace

QuadratizationRegistry::QuadratizationRegistry() {
    add("ntr-ptr", ntr_ptr);
    add("default", ntr_ptr);
    add("ptr-bg", ntr_ptr);
}

void QuadratizationRegistry::add(std::string name, TermQuadratizer method) {
    if (!method) throw InvalidArgument("quadratization method '" + name + "' is empty");
    auto [it, inserted] = methods_.emplace(std::move(name), std::move(method));
    if (!inserted) {
        throw InvalidArgument("quadratization method '" + it->first + "' is already registered");
    }
}

const TermQuadratizer& QuadratizationRegistry::get(std::string_view name) const {
    auto it = methods_.find(name);
    if (it == methods_.end()) {
        std::string known;
        for (const auto& [n, m] : methods_) known += (known.empty() ? "" : ", ") + n;
        throw InvalidArgument("unknown quadratization method '" + std::string(name) +
                              "' (known: " + known + ")");
    }
    return it->second;
}

bool QuadratizationRegistry::contains(std::string_view name) const {
    return methods_.find(name) != methods_.end();
}

std::vector<std::string> QuadratizationRegistry::names() const {
    std::vector<std::string> out;
    for (const auto& [name, method] : methods_) out.push_back(name);
    return out;
}

QuadratizationRegistry& QuadratizationRegistry::global() {
    static QuadratizationRegistry registry;
    return registry;
}

Quadratization quadratize(const PseudoBooleanFunction& f, IdAllocator& fresh,
                          std::string_view method, const QuadratizationRegistry& registry) {
    const TermQuadratizer& reduce = registry.get(method);
    Quadratization out;
    const VarId first_aux = fresh.peek();
    for (const auto& [term, coeff] : f.terms()) {
        if (term.degree() <= 2) {
            out.polynomial.add_term(term, coeff);
            continue;
        }
        PseudoBooleanFunction reduced = reduce(term, coeff, fresh);
        if (reduced.degree() > 2) {
            throw InvalidArgument("quadratization method '" + std::string(method) +
                                  "' returned a polynomial of degree " +
                                  std::to_string(reduced.degree()));
        }
        out.polynomial += reduced;
    }
    for (VarId v = first_aux; v < fresh.peek(); ++v) out.auxiliaries.push_back(v);
    return out;
}

}  // namespace quboforge

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

#include "quboforge/polynomial.hpp"

#include <algorithm>

#include "format_util.hpp"

namespace quboforge {

Polynomial Polynomial::constant(double value) {
    Polynomial p;
    p.add_term({}, value);
    return p;
}

Polynomial Polynomial::variable(VarId v, double coeff) {
    Polynomial p;
    p.add_term({v}, coeff);
    return p;
}

void Polynomial::add_term(Monomial factors, double coeff) {
    if (coeff == 0.0) return;
    std::sort(factors.begin(), factors.end());
    auto [it, inserted] = terms_.try_emplace(std::move(factors), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0.0) terms_.erase(it);
    }
}

std::size_t Polynomial::degree() const noexcept {
    std::size_t d = 0;
    for (const auto& [mono, coeff] : terms_) d = std::max(d, mono.size());
    return d;
}

double Polynomial::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? 0.0 : it->second;
}

std::vector<VarId> Polynomial::variables() const {
    std::vector<VarId> out;
    for (const auto& [mono, coeff] : terms_) out.insert(out.end(), mono.begin(), mono.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double Polynomial::evaluate(const Assignment& x) const {
    return evaluate_with([&x](VarId v) {
        auto it = x.find(v);
        if (it == x.end()) throw MissingAssignment(v);
        return it->second;
    });
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [mono, coeff] : other.terms_) add_term(mono, coeff);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [mono, coeff] : other.terms_) add_term(mono, -coeff);
    return *this;
}

Polynomial& Polynomial::operator*=(double scalar) {
    if (scalar == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= scalar;
        if (it->second == 0.0) it = terms_.erase(it);
        else ++it;
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Polynomial::Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.add_term(std::move(m), ca * cb);
        }
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += detail::format_double(coeff);
        for (VarId v : mono) out += "*x" + std::to_string(v);
    }
    return out;
}

}  // namespace quboforge

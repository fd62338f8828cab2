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

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "quboforge/pbf.hpp"

namespace quboforge {

/// Polynomial over model variables. Unlike PseudoBooleanFunction a monomial
/// may repeat a factor (z*z for an integer z), so squares of non-binary
/// variables are representable. Monomials are kept as sorted factor lists.
class Polynomial {
 public:
    using Monomial = std::vector<VarId>;
    using TermMap = std::map<Monomial, double>;

    Polynomial() = default;

    static Polynomial constant(double value);
    static Polynomial variable(VarId v, double coeff = 1.0);

    void add_term(Monomial factors, double coeff);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t degree() const noexcept;
    double constant_term() const;
    std::vector<VarId> variables() const;

    double evaluate(const Assignment& x) const;

    template <class ValueOf>
    double evaluate_with(ValueOf&& value_of) const {
        double total = 0.0;
        for (const auto& [mono, coeff] : terms_) {
            double product = coeff;
            for (VarId v : mono) product *= value_of(v);
            total += product;
        }
        return total;
    }

    /// Replaces every factor by the polynomial `image(v)` and expands. Binary
    /// reduction happens inside PseudoBooleanFunction multiplication.
    template <class Image>
    PseudoBooleanFunction lower(Image&& image) const {
        PseudoBooleanFunction out;
        for (const auto& [mono, coeff] : terms_) {
            PseudoBooleanFunction product = PseudoBooleanFunction::constant(coeff);
            for (VarId v : mono) product = product * image(v);
            out += product;
        }
        return out;
    }

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(double scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
    friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string() const;

 private:
    TermMap terms_;
};

}  // namespace quboforge

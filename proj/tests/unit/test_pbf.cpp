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

#include <bit>

#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "quboforge/pbf.hpp"

using namespace quboforge;
using Catch::Matchers::ContainsSubstring;

namespace {

PBF x(VarId v) { return PBF::variable(v); }
PBF one() { return PBF::constant(1.0); }

Assignment point(std::uint64_t k, std::size_t n) {
    Assignment a;
    for (std::size_t i = 0; i < n; ++i) a[static_cast<VarId>(i)] = (k >> i) & 1U;
    return a;
}

std::map<VarId, int> int_point(std::uint64_t k, std::size_t n) {
    std::map<VarId, int> a;
    for (std::size_t i = 0; i < n; ++i) a[static_cast<VarId>(i)] = (k >> i) & 1U;
    return a;
}

}  // namespace

TEST_CASE("evaluate") {
    CHECK(PBF{}.evaluate({{1, 1.0}}) == 0.0);

    const PBF f = one() - x(1) - x(2) + 2.0 * x(1) * x(2);
    CHECK(f.evaluate({{1, 1}, {2, 1}}) == 1.0);
    const double table[4] = {1, 0, 0, 1};
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) CHECK(f.evaluate({{1, a}, {2, b}}) == table[2 * a + b]);
    }

    const PBF g = PBF::monomial(Term{1, 2, 3}, 3.0);
    CHECK(g.evaluate({{1, 1}, {2, 1}, {3, 0}}) == 0.0);
}

TEST_CASE("evaluate names the missing variable") {
    const PBF f = x(1) + x(7);
    try {
        (void)f.evaluate({{1, 1}});
        FAIL("expected MissingAssignment");
    } catch (const MissingAssignment& e) {
        CHECK(e.variable() == 7);
        CHECK_THAT(e.what(), ContainsSubstring("7"));
    }
}

TEST_CASE("combine") {
    CHECK(combine(1, x(1), 1, -1.0 * x(1)).is_zero());
    CHECK(combine(2, x(1) + x(2), 0, x(5) * x(6)) == 2.0 * x(1) + 2.0 * x(2));

    const PBF a = one() + x(1) * x(2);
    const PBF b = x(1) * x(2);
    const PBF c = combine(1, a, 1, b);
    PBF expected = one();
    expected.add_term(Term{1, 2}, 2.0);
    CHECK(c == expected);
    for (std::uint64_t k = 0; k < 4; ++k) {
        Assignment p{{1, k & 1U}, {2, (k >> 1) & 1U}};
        CHECK(c.evaluate(p) == a.evaluate(p) + b.evaluate(p));
    }
}

TEST_CASE("multiply") {
    CHECK(x(1) * x(1) == x(1));
    const PBF g = x(1) + x(2) - one();
    CHECK(multiply(g, g) == one() - x(1) - x(2) + 2.0 * x(1) * x(2));
    CHECK(multiply(x(1) * x(2), x(2) * x(3)) == PBF::monomial(Term{1, 2, 3}, 1.0));
}

TEST_CASE("linear structure and products hold pointwise") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng.below(10);
        const PBF f = oracle::random_pbf(rng, n, 4, 6);
        const PBF g = oracle::random_pbf(rng, n, 4, 6);
        const PBF s = combine(1.5, f, -2.0, g);
        const PBF p = multiply(f, g);
        CHECK(p.degree() <= f.degree() + g.degree());
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
            const auto a = int_point(k, n);
            const double fv = oracle::evaluate(f, a), gv = oracle::evaluate(g, a);
            REQUIRE(oracle::close(oracle::evaluate(s, a), 1.5 * fv - 2.0 * gv));
            REQUIRE(oracle::close(oracle::evaluate(p, a), fv * gv));
        }
    }
}

TEST_CASE("polynomials equal on the cube have identical term tables") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng.below(8);
        const PBF f = oracle::random_pbf(rng, n, 3, 5);
        const PBF g = oracle::random_pbf(rng, n, 3, 5);
        // (f + g) - g rebuilt through a different order of operations
        const PBF h = (g + f) - g;
        CHECK(h == f);
        // Moebius inversion from the value table reproduces f exactly
        PBF rebuilt;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
            double c = 0.0;
            for (std::uint64_t t = s;; t = (t - 1) & s) {
                const int sign = (std::popcount(s) - std::popcount(t)) % 2 ? -1 : 1;
                c += sign * oracle::evaluate(f, int_point(t, n));
                if (t == 0) break;
            }
            std::vector<VarId> vars;
            for (std::size_t i = 0; i < n; ++i) {
                if ((s >> i) & 1U) vars.push_back(static_cast<VarId>(i));
            }
            if (std::abs(c) > 1e-12) rebuilt.add_term(Term(vars), c);
        }
        CHECK(rebuilt == f);
    }
}

TEST_CASE("substitute") {
    CHECK(x(1).substitute(1, one() - x(9)) == one() - x(9));
    const PBF f = x(1) * x(2);
    const PBF g = f.substitute(2, x(3) + 2.0 * x(4));
    CHECK(g == x(1) * x(3) + 2.0 * x(1) * x(4));
    for (std::uint64_t k = 0; k < 8; ++k) {
        Assignment a{{1, k & 1U}, {3, (k >> 1) & 1U}, {4, (k >> 2) & 1U}};
        CHECK(g.evaluate(a) == a[1] * (a[3] + 2 * a[4]));
    }
    CHECK((2.0 * x(1)).substitute(1, PBF{}).is_zero());

    CHECK_THROWS_AS(f.substitute(1, x(3) * x(4)), InvalidArgument);
    CHECK_THROWS_AS(f.substitute(1, x(1) + one()), InvalidArgument);
}

TEST_CASE("degree and delta") {
    CHECK(PBF{}.degree_and_delta().degree == 0);
    CHECK(PBF{}.degree_and_delta().delta == 0.0);
    const auto dd = (one() - x(1) - x(2) + 2.0 * x(1) * x(2)).degree_and_delta();
    CHECK(dd.degree == 2);
    CHECK(dd.delta == 2.0);
    const auto dd3 = (PBF::monomial(Term{1, 2, 3}, 5.0) - x(1)).degree_and_delta();
    CHECK(dd3.degree == 3);
    CHECK(dd3.delta == 5.0);
}

TEST_CASE("to_qubo_form") {
    const auto empty = PBF{}.to_qubo_form();
    CHECK(empty.linear.empty());
    CHECK(empty.quadratic.empty());
    CHECK(empty.constant == 0.0);

    const PBF f = one() - x(1) - x(2) + 2.0 * x(1) * x(2);
    const auto form = f.to_qubo_form();
    CHECK(form.linear == std::map<VarId, double>{{1, -1.0}, {2, -1.0}});
    CHECK(form.quadratic.at({1, 2}) == 2.0);
    CHECK(form.constant == 1.0);
    CHECK(PBF::from_qubo_form(form) == f);

    try {
        (void)PBF::monomial(Term{1, 2, 3}, 1.0).to_qubo_form();
        FAIL("expected InvalidArgument");
    } catch (const InvalidArgument& e) {
        CHECK_THAT(e.what(), ContainsSubstring("x1*x2*x3"));
    }
}

TEST_CASE("zero coefficients are never stored but tiny ones are") {
    PBF f;
    f.add_term(Term{1}, 1e-300);
    CHECK(f.size() == 1);
    f.add_term(Term{1}, -1e-300);
    CHECK(f.is_zero());
    f.add_term(Term{2, 2, 1}, 3.0);
    CHECK(f.terms().begin()->first == Term{1, 2});
}

TEST_CASE("exhaustive evaluation agrees with the reference evaluator") {
    Rng rng(3);
    const PBF f = oracle::random_pbf(rng, 6, 6, 12);
    for (std::uint64_t k = 0; k < 64; ++k) CHECK(f.evaluate(point(k, 6)) == oracle::evaluate(f, int_point(k, 6)));
}

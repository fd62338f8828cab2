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

#include <catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "quboforge/generators.hpp"
#include "quboforge/model.hpp"
#include "quboforge/model_io.hpp"

using namespace quboforge;
using Catch::Matchers::ContainsSubstring;

namespace {

Polynomial var(VarId v, double c = 1.0) { return Polynomial::variable(v, c); }

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("validate") {
    CHECK(validate(Model{}).empty());

    Model undeclared;
    undeclared.add_binary();
    undeclared.set_objective(var(7));
    const auto d1 = validate(undeclared);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].code == Diagnostic::Code::UndeclaredVariable);
    CHECK_THAT(d1[0].message, ContainsSubstring("undeclared variable 7"));

    Model cubic;
    const VarId a = cubic.add_binary(), b = cubic.add_binary(), c = cubic.add_binary();
    Polynomial p;
    p.add_term({a, b, c}, 1.0);
    cubic.set_objective(p);
    const auto d2 = validate(cubic);
    REQUIRE(d2.size() == 1);
    CHECK_THAT(d2[0].message, ContainsSubstring("degree 3 exceeds quadratic IR"));

    Model unbounded;
    unbounded.add_integer(0, INFINITY);
    CHECK(validate(unbounded).at(0).code == Diagnostic::Code::InfiniteBounds);

    Model dup;
    dup.add_variable({3, VarKind::Binary, 0, 1, std::nullopt});
    dup.add_variable({3, VarKind::Binary, 0, 1, std::nullopt});
    CHECK(validate(dup).at(0).code == Diagnostic::Code::DuplicateId);
}

TEST_CASE("tsp_model") {
    const Model m = tsp_model(5, random_distances(5, 1));
    CHECK(m.variables().size() == 25);
    CHECK(m.constraints().size() == 10);
    for (const auto& c : m.constraints()) CHECK(c.relation == Relation::EQ);
    CHECK(validate(m).empty());

    const Model two = tsp_model(2, {{0, 1}, {1, 0}});
    const auto r = brute_force_solve(two);
    CHECK(r.feasible);
    CHECK(r.objective == 2.0);

    const Model zero = tsp_model(3, std::vector<std::vector<double>>(3, std::vector<double>(3, 0.0)));
    const auto rz = brute_force_solve(zero);
    CHECK(rz.objective == 0.0);
    CHECK(rz.optima.size() == rz.feasible_count);

    CHECK_THROWS_AS(tsp_model(1, {{0}}), InvalidArgument);
    CHECK_THROWS_AS(tsp_model(3, {{0, 1}, {1, 0}}), InvalidArgument);
}

TEST_CASE("tsp feasible points are exactly the permutation matrices") {
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto r = brute_force_solve(tsp_model(n, random_distances(n, 7)));
        CHECK(r.feasible_count == factorial(n));
        for (const auto& opt : r.optima) CHECK(oracle::is_permutation_matrix(opt, n));
    }
}

TEST_CASE("npp_model") {
    const auto r11 = brute_force_solve(npp_model({1, 1}));
    CHECK(r11.objective == 0.0);
    CHECK(r11.optima == std::vector<std::vector<double>>{{0, 1}, {1, 0}});

    const auto r3 = brute_force_solve(npp_model({3}));
    CHECK(r3.objective == 9.0);
    CHECK(r3.optima.size() == 2);

    const auto r123 = brute_force_solve(npp_model({1, 2, 3}));
    CHECK(r123.objective == 0.0);
    CHECK(r123.optima == std::vector<std::vector<double>>{{0, 0, 1}, {1, 1, 0}});

    CHECK_THROWS_AS(npp_model({}), InvalidArgument);
}

TEST_CASE("npp objective is symmetric under a global flip") {
    for (std::size_t n = 1; n <= 10; ++n) {
        const Model m = npp_model(npp_benchmark_weights(n));
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
            Assignment x, flipped;
            double direct = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double b = (k >> i) & 1U;
                x[m.variables()[i].id] = b;
                flipped[m.variables()[i].id] = 1.0 - b;
                direct += static_cast<double>(i + 1) * (2 * b - 1);
            }
            REQUIRE(m.objective().evaluate(x) == m.objective().evaluate(flipped));
            REQUIRE(m.objective().evaluate(x) == direct * direct);
        }
    }
}

TEST_CASE("brute_force_solve") {
    Model contradictory;
    const VarId a = contradictory.add_binary();
    contradictory.add_constraint(var(a), Relation::EQ, 1);
    contradictory.add_constraint(var(a), Relation::EQ, 0);
    CHECK_FALSE(brute_force_solve(contradictory).feasible);

    Model simple;
    const VarId x = simple.add_binary();
    simple.set_objective(var(x));
    const auto r = brute_force_solve(simple);
    CHECK(r.objective == 0.0);
    CHECK(r.optima == std::vector<std::vector<double>>{{0}});

    Model big;
    for (int i = 0; i < 30; ++i) big.add_binary();
    CHECK_THROWS_AS(brute_force_solve(big), CapacityError);

    Model cont;
    cont.add_continuous(0, 1);
    CHECK_THROWS_AS(brute_force_solve(cont), InvalidArgument);

    Model maxi;
    const VarId z = maxi.add_integer(-2, 3);
    maxi.set_objective(var(z), Sense::Max);
    CHECK(brute_force_solve(maxi).objective == 3.0);
}

TEST_CASE("SOS1 feasibility") {
    Model m;
    const VarId a = m.add_binary(), b = m.add_binary(), c = m.add_binary();
    m.add_sos1({a, b, c});
    const auto r = brute_force_solve(m);
    CHECK(r.feasible_count == 4);
}

TEST_CASE("random_qubo") {
    const QuboInstance one = random_qubo(1, 1.0, 3);
    CHECK(one.linear.size() == 1);
    CHECK(one.quadratic.empty());
    CHECK(random_qubo(8, 0.5, 9) == random_qubo(8, 0.5, 9));
    CHECK_THROWS_AS(random_qubo(4, 0.0, 1), InvalidArgument);
    CHECK_THROWS_AS(random_qubo(4, 0.5, 1, {1.0, -1.0}), InvalidArgument);

    const QuboInstance q = random_qubo(10, 1.0, 4, {-2.0, 3.0});
    for (const auto& [v, c] : q.linear) CHECK((c >= -2.0 && c <= 3.0));
}

TEST_CASE("random_qubo term count matches the density on average") {
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const QuboInstance q = random_qubo(50, 0.5, seed);
        total += static_cast<double>(q.linear.size() + q.quadratic.size());
    }
    const double mean = total / 1000.0;
    CHECK(std::abs(mean - 0.5 * 1275) <= 0.05 * 0.5 * 1275);
}

TEST_CASE("model JSON round trip") {
    Model m = tsp_model(3, random_distances(3, 2));
    const VarId z = m.add_integer(-1, 4, "z");
    const VarId y = m.add_continuous(-0.5, 2.0);
    Polynomial lhs = var(z, 2.0) + var(y);
    lhs.add_term({z, z}, 1.0);
    m.add_constraint(lhs, Relation::LE, 3.5, "mixed");
    m.add_sos1({0, 1}, "first row");
    m.metadata()["origin"] = "test";
    const std::string text = write_model_json(m);
    CHECK(text.back() == '\n');
    const Model back = read_model_json(text);
    CHECK(back == m);
    CHECK(write_model_json(back) == text);

    Model unbounded;
    unbounded.add_integer(0, INFINITY);
    CHECK(std::isinf(read_model_json(write_model_json(unbounded)).variables()[0].upper));
}

TEST_CASE("model JSON errors") {
    CHECK_THROWS_AS(read_model_json("{\"variables\": ["), ParseError);
    try {
        (void)read_model_json("{\n  \"variables\": [1,\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() >= 2);
    }
    CHECK_THROWS_AS(read_model_json("{\"sense\": \"min\"}"), DataError);
}

TEST_CASE("is_feasible") {
    Model m;
    const VarId a = m.add_binary(), b = m.add_binary();
    m.add_constraint(var(a) + var(b), Relation::LE, 1);
    CHECK(is_feasible(m, {{a, 1}, {b, 0}}));
    CHECK_FALSE(is_feasible(m, {{a, 1}, {b, 1}}));
}

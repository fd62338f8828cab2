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

#include "oracles.hpp"
#include "quboforge/formats.hpp"
#include "quboforge/generators.hpp"
#include "quboforge/samplers.hpp"

using namespace quboforge;
using Catch::Matchers::ContainsSubstring;

namespace {

void check_energies(const QuboInstance& q, const SampleSet& s) {
    for (const Sample& x : s.samples()) {
        REQUIRE(oracle::close(x.value, oracle::energy(q, x.state)));
    }
    for (std::size_t i = 1; i < s.size(); ++i) REQUIRE(s.samples()[i - 1].value <= s.samples()[i].value);
    std::set<std::vector<std::int8_t>> states;
    for (const Sample& x : s.samples()) REQUIRE(states.insert(x.state).second);
}

SamplerParams reads(std::uint64_t n, std::uint64_t seed) {
    SamplerParams p;
    p.num_reads = n;
    p.seed = seed;
    return p;
}

}  // namespace

TEST_CASE("every builtin returns one aggregated sample for one read") {
    const QuboInstance q = random_qubo(5, 0.6, 1);
    for (const std::string name : {"random", "sa"}) {
        const SampleSet s = sample(name, q, reads(1, 3));
        CHECK(s.size() == 1);
        CHECK(s.total_reads() == 1);
    }
    SamplerParams p = reads(1, 3);
    p.attributes["initial_state"] = std::vector<std::int8_t>(5, 0);
    CHECK(sample("identity", q, p).size() == 1);
}

TEST_CASE("fixed seeds give identical sample sets") {
    const QuboInstance q = random_qubo(10, 0.5, 2);
    for (const std::string name : {"random", "sa"}) {
        const std::string a = write_sample_set_json(sample(name, q, reads(50, 77)));
        const std::string b = write_sample_set_json(sample(name, q, reads(50, 77)));
        CHECK(a == b);
    }
}

TEST_CASE("exact sampler") {
    QuboInstance empty;
    empty.offset = 2.0;
    empty.scale = 3.0;
    const SampleSet e = exact_sample(empty);
    REQUIRE(e.size() == 1);
    CHECK(e.best().state.empty());
    CHECK(e.best().value == 6.0);

    QuboInstance q;
    q.variable_ids = {1, 2};
    q.linear = {{1, -1.0}, {2, -1.0}};
    q.quadratic = {{{1, 2}, 2.0}};
    q.offset = 1.0;
    const SampleSet s = exact_sample(q);
    REQUIRE(s.size() == 4);
    CHECK(s.samples()[0].value == 0.0);
    CHECK(s.samples()[1].value == 0.0);
    CHECK(s.samples()[0].state == std::vector<std::int8_t>{0, 1});
    CHECK(s.samples()[1].state == std::vector<std::int8_t>{1, 0});
    CHECK(s.samples()[2].value == 1.0);
    CHECK(s.samples()[3].value == 1.0);

    const QuboInstance r = random_qubo(12, 0.5, 5);
    const SampleSet full = exact_sample(r);
    CHECK(full.total_reads() == 4096);
    CHECK(oracle::close(full.best().value, oracle::minimize(r).value));
    check_energies(r, full);

    SamplerParams capped;
    capped.attributes["max_variables"] = std::int64_t{8};
    try {
        (void)exact_sample(r, capped);
        FAIL("expected CapacityError");
    } catch (const CapacityError& err) {
        CHECK(err.requested() == 12);
        CHECK(err.limit() == 8);
    }
}

TEST_CASE("exact sampler works in the spin domain") {
    const QuboInstance q = to_spin(random_qubo(6, 0.8, 7));
    const SampleSet s = exact_sample(q);
    CHECK(s.total_reads() == 64);
    check_energies(q, s);
}

TEST_CASE("random sampler") {
    const QuboInstance q = random_qubo(10, 0.5, 3);
    const SampleSet s = random_sample(q, reads(1000, 1));
    CHECK(s.total_reads() == 1000);
    check_energies(q, s);

    QuboInstance single;
    single.variable_ids = {0};
    single.linear = {{0, 1.0}};
    const SampleSet split = random_sample(single, reads(1000, 12345));
    REQUIRE(split.size() == 2);
    CHECK(split.total_reads() == 1000);
    // frozen from a seeded run
    CHECK(split.samples()[0].reads == 499);
    for (const Sample& x : split.samples()) CHECK((x.reads >= 400 && x.reads <= 600));

    const SampleSet none = random_sample(QuboInstance{}, reads(7, 1));
    REQUIRE(none.size() == 1);
    CHECK(none.best().reads == 7);
}

TEST_CASE("identity sampler") {
    QuboInstance q = random_qubo(4, 1.0, 9);
    q.offset = 1.25;
    q.scale = 2.0;
    SamplerParams p = reads(5, 0);
    p.attributes["initial_state"] = std::vector<std::int8_t>(4, 0);
    const SampleSet s = identity_sample(q, p);
    REQUIRE(s.size() == 1);
    CHECK(s.best().reads == 5);
    CHECK(s.best().value == 2.5);

    SamplerParams missing = reads(1, 0);
    CHECK_THROWS_AS(identity_sample(q, missing), InvalidArgument);
    p.attributes["initial_state"] = std::vector<std::int8_t>{0, 1, 2, 0};
    CHECK_THROWS_AS(identity_sample(q, p), InvalidArgument);
    p.attributes["initial_state"] = std::vector<std::int8_t>{0, 1};
    CHECK_THROWS_AS(identity_sample(q, p), InvalidArgument);
}

TEST_CASE("simulated annealing") {
    QuboInstance zero;
    zero.variable_ids = {0, 1, 2};
    zero.offset = 0.5;
    zero.scale = 2.0;
    const SampleSet z = simulated_annealing(zero, reads(10, 1));
    for (const Sample& x : z.samples()) CHECK(x.value == 1.0);
    CHECK(z.total_reads() == 10);

    QuboInstance ferro;
    ferro.domain = Domain::Spin;
    ferro.variable_ids = {0, 1};
    ferro.quadratic = {{{0, 1}, -1.0}};
    SamplerParams p = reads(20, 4);
    p.attributes["sweeps"] = std::int64_t{50};
    const SampleSet f = simulated_annealing(ferro, p);
    CHECK(f.best().value == -1.0);
    for (const Sample& x : f.samples()) {
        if (x.value == -1.0) CHECK(x.state[0] == x.state[1]);
    }

    SamplerParams bad = reads(1, 1);
    bad.attributes["sweeps"] = std::int64_t{0};
    CHECK_THROWS_AS(simulated_annealing(ferro, bad), InvalidArgument);
    bad.attributes["sweeps"] = std::int64_t{10};
    bad.attributes["beta_min"] = 2.0;
    bad.attributes["beta_max"] = 1.0;
    CHECK_THROWS_AS(simulated_annealing(ferro, bad), InvalidArgument);
}

TEST_CASE("simulated annealing finds the greedy minimum of one variable when cold") {
    QuboInstance one;
    one.variable_ids = {0};
    one.linear = {{0, -1.0}};
    SamplerParams p = reads(200, 8);
    p.attributes["sweeps"] = std::int64_t{20};
    p.attributes["beta_min"] = 50.0;
    p.attributes["beta_max"] = 50.0;
    const SampleSet s = simulated_annealing(one, p);
    REQUIRE(s.size() == 1);
    CHECK(s.best().state == std::vector<std::int8_t>{1});
}

TEST_CASE("simulated annealing on a 16 variable instance") {
    const QuboInstance q = random_qubo(16, 0.5, 20);
    const double optimum = oracle::minimize(q).value;
    SamplerParams p = reads(100, 42);
    p.attributes["sweeps"] = std::int64_t{1000};
    const SampleSet s = simulated_annealing(q, p);
    check_energies(q, s);
    std::uint64_t hits = 0;
    for (const Sample& x : s.samples()) {
        if (oracle::close(x.value, optimum)) hits += x.reads;
    }
    CHECK(hits >= 90);
}

TEST_CASE("registry") {
    SamplerRegistry r = SamplerRegistry::with_builtins();
    CHECK(r.names() == std::vector<std::string>{"exact", "identity", "random", "sa"});
    CHECK_THROWS_AS(r.add(make_exact_sampler()), InvalidArgument);
    CHECK_THROWS_WITH(r.get("nosuch"), ContainsSubstring("registered: exact, identity, random, sa"));

    struct Constant final : Sampler {
        std::string_view name() const noexcept override { return "constant"; }
        std::vector<Domain> domains() const override { return {Domain::Boolean}; }
        SampleSet run(const QuboInstance& q, const SamplerParams& p) const override {
            std::vector<std::int8_t> s(q.variable_ids.size(), 1);
            return SampleSet(q.domain, q.variable_ids, {{s, energy(q, s), p.num_reads}});
        }
    };
    r.add(std::make_unique<Constant>());
    const QuboInstance q = random_qubo(3, 1.0, 1);
    const SampleSet s = sample("constant", q, reads(4, 0), r);
    CHECK(s.best().state == std::vector<std::int8_t>{1, 1, 1});
    CHECK(s.metadata().at("sampler") == "constant");
    CHECK_THROWS_AS(sample("constant", to_spin(q), reads(1, 0), r), InvalidArgument);

    SamplerParams unknown = reads(1, 0);
    unknown.attributes["temperature"] = 1.0;
    CHECK_THROWS_WITH(sample("sa", q, unknown), ContainsSubstring("temperature"));
    SamplerParams mistyped = reads(1, 0);
    mistyped.attributes["sweeps"] = std::string("many");
    CHECK_THROWS_AS(sample("sa", q, mistyped), InvalidArgument);
}

TEST_CASE("sample sets merge in any order") {
    const QuboInstance q = random_qubo(6, 0.7, 2);
    SampleSet a = random_sample(q, reads(30, 1));
    const SampleSet b = random_sample(q, reads(30, 2));
    const SampleSet c = random_sample(q, reads(30, 3));
    SampleSet ab_c = a;
    ab_c.merge(b);
    ab_c.merge(c);
    SampleSet c_ba = c;
    c_ba.merge(b);
    c_ba.merge(a);
    CHECK(ab_c.samples() == c_ba.samples());
    CHECK(ab_c.total_reads() == 90);
}

TEST_CASE("sample set rejects malformed samples") {
    CHECK_THROWS_AS(SampleSet(Domain::Boolean, {0, 1}, {{{0}, 0.0, 1}}), DataError);
    CHECK_THROWS_AS(SampleSet(Domain::Boolean, {0}, {{{-1}, 0.0, 1}}), DataError);
    CHECK_THROWS_AS(SampleSet(Domain::Boolean, {0}, {{{1}, 0.0, 0}}), DataError);
}

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

#include "json.hpp"
#include "oracles.hpp"
#include "quboforge/formats.hpp"
#include "quboforge/generators.hpp"

using namespace quboforge;
using Catch::Matchers::ContainsSubstring;

namespace {

QuboInstance golden() {
    QuboInstance q;
    q.variable_ids = {0, 1};
    q.linear = {{0, -1.0}};
    q.quadratic = {{{0, 1}, 2.0}};
    return q;
}

QuboInstance random_instance(Rng& rng, Domain domain, std::size_t max_n = 12) {
    const std::size_t n = 1 + rng.below(max_n);
    QuboInstance q = random_qubo(n, 0.2 + 0.8 * rng.uniform(), rng());
    if (domain == Domain::Spin) {
        q.domain = Domain::Spin;
    }
    q.scale = 0.5 + rng.uniform();
    q.offset = rng.uniform(-3, 3);
    return q;
}

void check_same_spectrum(const QuboInstance& a, const QuboInstance& b, double shift = 0.0) {
    const auto sa = oracle::spectrum(a);
    const auto sb = oracle::spectrum(b);
    REQUIRE(sa.size() == sb.size());
    for (std::size_t k = 0; k < sa.size(); ++k) REQUIRE(oracle::close(sa[k], sb[k] + shift));
}

const char* kMinimalBqp = R"({
  "id": 0,
  "version": "1.0.0",
  "variable_ids": [3],
  "variable_domain": "boolean",
  "scale": 1.0,
  "offset": 0.0,
  "linear_terms": [{"id": 3, "coeff": -1.5}],
  "quadratic_terms": [],
  "metadata": {}
})";

}  // namespace

TEST_CASE("energy") {
    CHECK(energy(QuboInstance{}, std::vector<std::int8_t>{}) == 0.0);

    QuboInstance q;
    q.variable_ids = {1, 2};
    q.linear = {{1, 1.0}};
    q.quadratic = {{{1, 2}, 2.0}};
    CHECK(energy(q, std::vector<std::int8_t>{1, 1}) == 3.0);

    QuboInstance s;
    s.domain = Domain::Spin;
    s.variable_ids = {1, 2};
    s.linear = {{1, 1.0}, {2, 0.5}};
    s.quadratic = {{{1, 2}, 0.5}};
    s.offset = 1.0;
    CHECK(energy(s, std::vector<std::int8_t>{-1, -1}) == 0.0);

    CHECK_THROWS_AS(energy(q, std::vector<std::int8_t>{1, -1}), DataError);
    CHECK_THROWS_AS(energy(q, std::vector<std::int8_t>{1}), DataError);
    CHECK_THROWS_AS(energy(q, Assignment{{1, 1}}), DataError);

    QuboInstance scaled = q;
    scaled.scale = 2.5;
    CHECK(energy(scaled, std::vector<std::int8_t>{1, 1}) == 2.5 * 3.0);
}

TEST_CASE("to_spin worked example") {
    QuboInstance q;
    q.variable_ids = {1, 2};
    q.linear = {{1, 1.0}};
    q.quadratic = {{{1, 2}, 2.0}};
    const QuboInstance s = to_spin(q);
    CHECK(s.domain == Domain::Spin);
    CHECK(s.linear == std::map<VarId, double>{{1, 1.0}, {2, 0.5}});
    CHECK(s.quadratic.at({1, 2}) == 0.5);
    CHECK(s.offset == 1.0);
    check_same_spectrum(q, s);
    CHECK(to_spin(QuboInstance{}).linear.empty());
}

TEST_CASE("domain bijection on random instances") {
    Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const QuboInstance q = random_instance(rng, trial % 2 ? Domain::Spin : Domain::Boolean, 8);
        const QuboInstance other = q.domain == Domain::Boolean ? to_spin(q) : to_boolean(q);
        check_same_spectrum(q, other);
        const QuboInstance back = to_domain(other, q.domain);
        for (const auto& [v, c] : q.linear) CHECK(oracle::close(back.linear.count(v) ? back.linear.at(v) : 0.0, c));
        for (const auto& [ij, c] : q.quadratic) CHECK(oracle::close(back.quadratic.at(ij), c));
        CHECK(oracle::close(back.offset, q.offset));
    }
}

TEST_CASE("bqpjson") {
    const QuboInstance q = read_bqpjson(kMinimalBqp);
    CHECK(q.variable_ids == std::vector<VarId>{3});
    CHECK(q.linear.at(3) == -1.5);
    const std::string text = write_bqpjson(q);
    CHECK(read_bqpjson(text) == q);
    CHECK(write_bqpjson(read_bqpjson(text)) == text);
    // fixed key order
    CHECK(text.find("\"id\"") < text.find("\"version\""));
    CHECK(text.find("\"version\"") < text.find("\"variable_ids\""));
    CHECK(text.find("\"linear_terms\"") < text.find("\"quadratic_terms\""));
}

TEST_CASE("bqpjson diagnostics") {
    using nlohmann::json;
    const json base = json::parse(kMinimalBqp);
    auto with = [&](auto&& edit) {
        json doc = base;
        edit(doc);
        return doc.dump();
    };
    auto message = [](const std::string& text) {
        try {
            (void)read_bqpjson(text);
        } catch (const DataError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK_THAT(message(with([](json& d) { d.erase("scale"); })), ContainsSubstring("missing required key 'scale'"));
    CHECK_THAT(message(with([](json& d) { d["variable_ids"] = {3, 3}; })), ContainsSubstring("duplicate variable id"));
    CHECK_THAT(message(with([](json& d) {
                   d["variable_ids"] = {3, 4};
                   d["quadratic_terms"] = json::parse(R"([{"id_head": 4, "id_tail": 4, "coeff": 1}])");
               })),
               ContainsSubstring("id_head"));
    CHECK_THAT(message(with([](json& d) { d["scale"] = 0; })), ContainsSubstring("scale must be positive"));
    CHECK_THAT(message(with([](json& d) { d["version"] = "2.0.0"; })), ContainsSubstring("unsupported version"));
    CHECK_THAT(message(with([](json& d) { d["linear_terms"][0]["id"] = 9; })), ContainsSubstring("undeclared"));
    CHECK_THROWS_AS(read_bqpjson("{\"id\": 0,"), ParseError);
}

TEST_CASE("bqpjson solutions are re-verified") {
    QuboInstance q = golden();
    q.solutions = SampleSet(Domain::Boolean, q.variable_ids, {{{1, 0}, -1.0, 1}, {{1, 1}, 1.0, 3}});
    const std::string text = write_bqpjson(q);
    const QuboInstance back = read_bqpjson(text);
    REQUIRE(back.solutions);
    CHECK(back.solutions->total_reads() == 4);
    CHECK(back == q);

    std::string tampered = text;
    tampered.replace(tampered.find("\"evaluation\": -1.0"), 18, "\"evaluation\": -2.0");
    CHECK_THROWS_WITH(read_bqpjson(tampered), ContainsSubstring("does not match"));
}

TEST_CASE("qubo format") {
    CHECK(write_qubo(golden()) == "p qubo 0 2 1 1\n0 0 -1\n0 1 2\n");
    CHECK(write_qubo(QuboInstance{}) == "p qubo 0 0 0 0\n");
    CHECK(read_qubo("p qubo 0 2 1 1\n0 0 -1\n0 1 2\n") == golden());
    CHECK(read_qubo("c hello\np qubo 0 2 1 1\nc between\n0 0 -1\n\n0 1 2\nc end\n") == golden());

    CHECK_THROWS_AS(read_qubo("p qubo 0 2 1 2\n0 0 -1\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(read_qubo("p qubo 0 2 1 1\n0 0 -1\n1 0 2\n"), ParseError);
    CHECK_THROWS_AS(read_qubo("p qubo 0 2 1 1\n0 0 -1\n-1 1 2\n"), ParseError);
    CHECK_THROWS_AS(read_qubo("p qubo 0 2 1 1\n0 0 x\n0 1 2\n"), ParseError);
    try {
        (void)read_qubo("p qubo 0 2 1 1\n0 0 -1\n0 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("qubo format keeps scale and offset") {
    QuboInstance q = golden();
    q.scale = 2.0;
    q.offset = -0.75;
    const std::string text = write_qubo(q);
    CHECK_THAT(text, ContainsSubstring("c scale 2\n"));
    CHECK(read_qubo(text) == q);
}

TEST_CASE("qubist format") {
    QuboInstance s;
    s.domain = Domain::Spin;
    s.variable_ids = {0, 1};
    s.linear = {{0, 1.0}};
    s.quadratic = {{{0, 1}, -1.0}};
    CHECK(write_qubist(s) == "2 2\n0 0 1\n0 1 -1\n");
    CHECK(read_qubist("2 2\n0 0 1\n0 1 -1\n") == s);
    QuboInstance empty;
    empty.domain = Domain::Spin;
    CHECK(write_qubist(empty) == "0 0\n");

    CHECK_THROWS_AS(read_qubist("2 3\n0 0 1\n0 1 -1\n"), ParseError);
    CHECK_THROWS_AS(read_qubist("2 1\n1 0 1\n"), ParseError);
    CHECK_THROWS_AS(read_qubist("2 1\n0 2 1\n"), ParseError);
}

TEST_CASE("write -> read -> write is a fixed point") {
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        QuboInstance b = random_instance(rng, Domain::Boolean);
        b.metadata["trial"] = std::to_string(trial);
        const std::string jb = write_bqpjson(b);
        CHECK(write_bqpjson(read_bqpjson(jb)) == jb);
        CHECK(read_bqpjson(jb) == b);

        const std::string tq = write_qubo(b);
        CHECK(write_qubo(read_qubo(tq)) == tq);

        QuboInstance s = random_instance(rng, Domain::Spin);
        s.offset = 0.0;
        s.scale = 1.0;
        s.metadata.clear();
        const std::string ts = write_qubist(s);
        CHECK(write_qubist(read_qubist(ts)) == ts);
        CHECK(read_qubist(ts) == s);
    }
}

TEST_CASE("convert") {
    Rng rng(4);
    const std::vector<FileFormat> formats = {FileFormat::BqpJson, FileFormat::Qubo, FileFormat::Qubist};
    for (int trial = 0; trial < 30; ++trial) {
        const QuboInstance q = random_instance(rng, Domain::Boolean, 10);
        const std::string source = write_bqpjson(q);
        for (FileFormat to : formats) {
            const auto r = convert(source, FileFormat::BqpJson, to);
            const QuboInstance out = read_instance(r.text, to);
            check_same_spectrum(to_domain(q, out.domain), out, r.dropped_offset);
        }
    }

    const QuboInstance q = random_instance(rng, Domain::Boolean, 6);
    const auto to_qubist = convert(write_bqpjson(q), FileFormat::BqpJson, FileFormat::Qubist, Domain::Spin);
    const auto back = convert(to_qubist.text, FileFormat::Qubist, FileFormat::BqpJson, Domain::Boolean);
    QuboInstance returned = read_bqpjson(back.text);
    CHECK(returned.metadata.at("source_format") == "qubist");
    check_same_spectrum(q, returned, to_qubist.dropped_offset);
    CHECK_FALSE(to_qubist.warnings.empty());

    const auto from_qubo = convert(write_qubo(golden()), FileFormat::Qubo, FileFormat::BqpJson);
    const QuboInstance fq = read_bqpjson(from_qubo.text);
    CHECK(fq.metadata.at("source_format") == "qubo");
    CHECK(fq.linear == golden().linear);
    CHECK(fq.quadratic == golden().quadratic);

    CHECK_THROWS_AS(parse_file_format("mps"), InvalidArgument);
    CHECK(format_from_extension("a/b.qubo") == FileFormat::Qubo);
}

TEST_CASE("sample set files") {
    SampleSet s(Domain::Spin, {4, 9}, {{{1, -1}, 0.5, 2}, {{-1, -1}, -1.0, 1}, {{1, -1}, 0.5, 1}});
    s.metadata()["sampler"] = "x";
    const std::string text = write_sample_set_json(s);
    CHECK(text.find("timing") == std::string::npos);
    const SampleSet back = read_sample_set_json(text);
    CHECK(back == s);
    CHECK(back.size() == 2);
    CHECK(back.samples()[0].value == -1.0);
    CHECK(back.samples()[1].reads == 3);

    s.timing().total_seconds = 0.25;
    const SampleSet timed = read_sample_set_json(write_sample_set_json(s, true));
    CHECK(timed.timing().total_seconds == 0.25);
}

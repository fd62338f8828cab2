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

#include <bit>
#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "quboforge/encoder.hpp"

using namespace quboforge;

namespace {

using Coeffs = std::vector<double>;

std::set<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
    std::set<std::int64_t> s;
    for (std::int64_t v = lo; v <= hi; ++v) s.insert(v);
    return s;
}

std::size_t quadratic_terms(const PBF& f) {
    std::size_t n = 0;
    for (const auto& [t, c] : f.terms()) n += t.degree() == 2;
    return n;
}

std::vector<std::uint8_t> codeword(std::initializer_list<int> bits) {
    return std::vector<std::uint8_t>(bits.begin(), bits.end());
}

VariableEncoding encode(const std::string& spec, std::int64_t lo, std::int64_t hi) {
    IdAllocator fresh(100);
    return encode_integer(lo, hi, EncodingSpec::parse(spec), fresh);
}

}  // namespace

TEST_CASE("binary") {
    IdAllocator fresh(10);
    CHECK(encode_binary(0, 7, fresh).coefficients == Coeffs{1, 2, 4});
    CHECK(encode_binary(0, 6, fresh).coefficients == Coeffs{1, 2, 3});
    const auto e = encode_binary(5, 5, fresh);
    CHECK(e.bits.empty());
    CHECK(e.offset == 5.0);
    CHECK(oracle::integer_image(encode_binary(0, 7, fresh)) == range(0, 7));
    CHECK(oracle::integer_image(encode_binary(-3, 3, fresh)) == range(-3, 3));
}

TEST_CASE("unary") {
    IdAllocator fresh;
    CHECK(encode_unary(0, 3, fresh).coefficients == Coeffs{1, 1, 1});
    CHECK(encode_unary(4, 5, fresh).coefficients == Coeffs{1});
    const auto e = encode_unary(0, 5, fresh);
    CHECK(oracle::integer_image(e) == range(0, 5));
    CHECK(e.expression().delta() == 1.0);
}

TEST_CASE("one-hot") {
    IdAllocator fresh;
    const auto e = encode_one_hot(2, 4, fresh);
    CHECK(e.coefficients == Coeffs{2, 3, 4});
    CHECK(e.offset == 0.0);
    for (std::uint64_t k = 0; k < 8; ++k) {
        Assignment a;
        for (std::size_t i = 0; i < 3; ++i) a[e.bits[i]] = (k >> i) & 1U;
        const double p = e.penalty.evaluate(a);
        const double s = a[e.bits[0]] + a[e.bits[1]] + a[e.bits[2]];
        CHECK(p == (s - 1) * (s - 1));
        CHECK((p == 0.0) == (std::popcount(k) == 1));
    }
    const auto single = encode_one_hot(0, 0, fresh);
    CHECK(single.bits.size() == 1);
    CHECK(single.penalty.evaluate({{single.bits[0], 0}}) == 1.0);
    CHECK(single.penalty.evaluate({{single.bits[0], 1}}) == 0.0);
    CHECK(quadratic_terms(encode_one_hot(0, 3, fresh).penalty) == 6);
}

TEST_CASE("domain-wall") {
    IdAllocator fresh;
    const auto e = encode_domain_wall(10, 13, fresh);
    REQUIRE(e.bits.size() == 3);
    const auto ok = decode(e, codeword({1, 1, 0}));
    CHECK(ok.value == 12.0);
    CHECK(ok.admissible);
    CHECK(e.penalty.evaluate({{e.bits[0], 0}, {e.bits[1], 1}, {e.bits[2], 0}}) == 1.0);
    CHECK_FALSE(decode(e, codeword({0, 1, 0})).admissible);

    const auto one = encode_domain_wall(4, 5, fresh);
    CHECK(one.penalty.is_zero());
    CHECK(oracle::integer_image(one) == range(4, 5));

    const auto none = encode_domain_wall(4, 4, fresh);
    CHECK(none.bits.empty());
    CHECK(quadratic_terms(encode_domain_wall(0, 9, fresh).penalty) == 8);
}

TEST_CASE("bounded coefficient") {
    IdAllocator fresh;
    const auto e = encode_bounded_coefficient(0, 20, 4, Encoding::Binary, fresh);
    CHECK(e.coefficients == Coeffs{1, 2, 4, 4, 4, 4, 1});
    CHECK(oracle::integer_image(e) == range(0, 20));
    CHECK(e.max_coefficient() == 4.0);

    for (std::int64_t n = 1; n <= 12; ++n) {
        CHECK(encode_bounded_coefficient(0, n, static_cast<double>(n), Encoding::Binary, fresh).coefficients ==
              encode_binary(0, n, fresh).coefficients);
        CHECK(encode_bounded_coefficient(0, n, 1.5, Encoding::Unary, fresh).coefficients ==
              encode_unary(0, n, fresh).coefficients);
    }
    CHECK(oracle::integer_image(encode_bounded_coefficient(0, 30, 5, Encoding::ArithmeticProgression, fresh)) ==
          range(0, 30));
}

TEST_CASE("arithmetic progression") {
    IdAllocator fresh;
    CHECK(encode_arithmetic_progression(0, 6, fresh).coefficients == Coeffs{1, 2, 3});
    CHECK(encode_arithmetic_progression(0, 1, fresh).coefficients == Coeffs{1});
    CHECK(encode_arithmetic_progression(0, 7, fresh).coefficients == Coeffs{1, 2, 3, 1});
    CHECK(oracle::integer_image(encode_arithmetic_progression(0, 7, fresh)) == range(0, 7));
}

TEST_CASE("AP final coefficient never exceeds the bit count") {
    for (std::int64_t n = 1; n <= 1'000'000; ++n) {
        const std::int64_t bits = arithmetic_progression_bits(n);
        REQUIRE(bits == oracle::ap_bits_closed_form(n));
        REQUIRE(n - bits * (bits - 1) / 2 <= bits);
        REQUIRE(n - bits * (bits - 1) / 2 >= 1);
    }
}

TEST_CASE("every method covers its range exactly") {
    for (const auto& name : oracle::encoding_names()) {
        for (std::int64_t n = 0; n <= 64; ++n) {
            const auto e = encode(name, -3, -3 + n);
            if (e.bits.size() > 16) continue;
            INFO(name << " n=" << n);
            REQUIRE(oracle::integer_image(e) == range(-3, -3 + n));
        }
    }
}

TEST_CASE("penalty vanishes exactly on admissible codewords") {
    for (const auto& name : oracle::encoding_names()) {
        for (std::int64_t n = 0; n <= 8; ++n) {
            const auto e = encode(name, 0, n);
            for (std::uint64_t k = 0; k < (std::uint64_t{1} << e.bits.size()); ++k) {
                Assignment a;
                for (std::size_t i = 0; i < e.bits.size(); ++i) a[e.bits[i]] = (k >> i) & 1U;
                const double p = e.penalty.evaluate(a);
                REQUIRE(p >= 0.0);
                REQUIRE((p == 0.0) == oracle::shape_admissible(e, k));
            }
        }
    }
}

TEST_CASE("canonical codewords decode back") {
    for (const auto& name : oracle::encoding_names()) {
        for (std::int64_t n = 0; n <= 20; ++n) {
            const auto e = encode(name, 2, 2 + n);
            for (std::int64_t v = 2; v <= 2 + n; ++v) {
                const auto d = decode(e, e.canonical_codeword(static_cast<double>(v)));
                REQUIRE(d.value == static_cast<double>(v));
                REQUIRE(d.admissible);
            }
        }
    }
}

TEST_CASE("decode") {
    IdAllocator fresh;
    const auto e = encode_one_hot(2, 4, fresh);
    const auto a = decode(e, codeword({0, 1, 0}));
    CHECK(a.value == 3.0);
    CHECK(a.admissible);
    const auto b = decode(e, codeword({1, 1, 0}));
    CHECK(b.value == 5.0);
    CHECK_FALSE(b.admissible);
    const auto z = encode_binary(7, 12, fresh);
    CHECK(decode(z, std::vector<std::uint8_t>(z.bits.size(), 0)).value == 7.0);
    CHECK_THROWS_AS(decode(z, Assignment{}), MissingAssignment);
}

TEST_CASE("continuous") {
    IdAllocator fresh;
    const EncodingSpec binary{Encoding::Binary};
    const auto a = encode_continuous(0, 1, 1, binary, fresh);
    CHECK(a.coefficients == Coeffs{1});
    CHECK_FALSE(a.is_exact);

    auto values = [](const VariableEncoding& e) {
        std::set<double> out;
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << e.bits.size()); ++k) {
            double v = e.offset;
            for (std::size_t i = 0; i < e.bits.size(); ++i) v += ((k >> i) & 1U) ? e.coefficients[i] : 0.0;
            out.insert(std::round(v * 1e12) / 1e12);
        }
        return out;
    };
    const auto u = encode_continuous(0, 1, 3, EncodingSpec{Encoding::Unary}, fresh);
    CHECK(values(u) == std::set<double>{0.0, std::round(1e12 / 3) / 1e12, std::round(2e12 / 3) / 1e12, 1.0});
    const auto b = encode_continuous(-1, 1, 2, binary, fresh);
    CHECK(values(b) == std::set<double>{-1.0, std::round(-1e12 / 3) / 1e12, std::round(1e12 / 3) / 1e12, 1.0});

    const auto d = encode_continuous(0, 10, std::nullopt, EncodingSpec{Encoding::ArithmeticProgression}, fresh);
    CHECK(d.step <= 0.1 + 1e-12);
    CHECK_THROWS_AS(encode_continuous(0, 1, 3, EncodingSpec{Encoding::OneHot}, fresh), InvalidArgument);
    CHECK_THROWS_AS(encode_continuous(0, 1, 3, EncodingSpec{Encoding::DomainWall}, fresh), InvalidArgument);
}

TEST_CASE("encoding names") {
    CHECK(EncodingSpec::parse("bounded:4").mu == 4.0);
    CHECK(EncodingSpec::parse("bounded:4:ap").base == Encoding::ArithmeticProgression);
    CHECK(EncodingSpec::parse("one-hot").method == Encoding::OneHot);
    CHECK(EncodingSpec::parse("bounded:3").to_string() == "bounded:3");
    CHECK_THROWS_AS(EncodingSpec::parse("gray"), InvalidArgument);
    CHECK_THROWS_AS(EncodingSpec::parse("bounded:0.5"), InvalidArgument);
    CHECK_THROWS_AS(EncodingSpec::parse("binary:2"), InvalidArgument);
}

TEST_CASE("fresh ids are never shared") {
    IdAllocator fresh(50);
    const auto a = encode_one_hot(0, 3, fresh);
    const auto b = encode_arithmetic_progression(0, 9, fresh);
    std::set<VarId> ids(a.bits.begin(), a.bits.end());
    for (VarId v : b.bits) CHECK(ids.insert(v).second);
    CHECK(*ids.begin() == 50);
}

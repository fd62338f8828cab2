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

#include "quboforge/encoder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "format_util.hpp"

namespace quboforge {

std::string_view to_string(Encoding method) noexcept {
    switch (method) {
        case Encoding::Binary: return "binary";
        case Encoding::Unary: return "unary";
        case Encoding::OneHot: return "one-hot";
        case Encoding::DomainWall: return "domain-wall";
        case Encoding::BoundedCoefficient: return "bounded";
        case Encoding::ArithmeticProgression: return "ap";
    }
    return "?";
}

bool has_structural_penalty(Encoding method) noexcept {
    return method == Encoding::OneHot || method == Encoding::DomainWall;
}

namespace {

Encoding parse_method(std::string_view name) {
    if (name == "binary") return Encoding::Binary;
    if (name == "unary") return Encoding::Unary;
    if (name == "one-hot" || name == "onehot") return Encoding::OneHot;
    if (name == "domain-wall" || name == "domainwall") return Encoding::DomainWall;
    if (name == "bounded") return Encoding::BoundedCoefficient;
    if (name == "ap" || name == "arithmetic-progression") return Encoding::ArithmeticProgression;
    throw InvalidArgument("unknown encoding '" + std::string(name) +
                          "' (expected binary, unary, one-hot, domain-wall, bounded[:mu] or ap)");
}

constexpr double kDefaultMu = 4.0;

}  // namespace

EncodingSpec EncodingSpec::parse(std::string_view text) {
    EncodingSpec spec;
    const auto colon = text.find(':');
    spec.method = parse_method(text.substr(0, colon));
    if (spec.method != Encoding::BoundedCoefficient) {
        if (colon != std::string_view::npos) {
            throw InvalidArgument("encoding '" + std::string(text.substr(0, colon)) +
                                  "' takes no parameters");
        }
        return spec;
    }
    spec.mu = kDefaultMu;
    if (colon == std::string_view::npos) return spec;
    std::string_view rest = text.substr(colon + 1);
    const auto second = rest.find(':');
    const std::string mu_text(rest.substr(0, second));
    try {
        std::size_t used = 0;
        spec.mu = std::stod(mu_text, &used);
        if (used != mu_text.size()) throw std::invalid_argument(mu_text);
    } catch (const std::exception&) {
        throw InvalidArgument("bounded encoding: invalid mu '" + mu_text + "'");
    }
    if (!(spec.mu >= 1.0)) throw InvalidArgument("bounded encoding: mu must be at least 1");
    if (second != std::string_view::npos) {
        spec.base = parse_method(rest.substr(second + 1));
        if (spec.base != Encoding::Binary && spec.base != Encoding::Unary &&
            spec.base != Encoding::ArithmeticProgression) {
            throw InvalidArgument("bounded encoding: base must be binary, unary or ap");
        }
    }
    return spec;
}

std::string EncodingSpec::to_string() const {
    std::string out(quboforge::to_string(method));
    if (method == Encoding::BoundedCoefficient) {
        out += ":" + detail::format_double(mu);
        if (base != Encoding::Binary) out += ":" + std::string(quboforge::to_string(base));
    }
    return out;
}

PseudoBooleanFunction VariableEncoding::expression() const {
    PseudoBooleanFunction f = PseudoBooleanFunction::constant(offset);
    for (std::size_t i = 0; i < bits.size(); ++i) f.add_term(Term{bits[i]}, coefficients[i]);
    return f;
}

double VariableEncoding::value(std::span<const std::uint8_t> codeword) const {
    double v = offset;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (codeword[i]) v += coefficients[i];
    }
    return v;
}

double VariableEncoding::max_coefficient() const noexcept {
    double m = 0.0;
    for (double c : coefficients) m = std::max(m, std::abs(c));
    return m;
}

std::vector<std::uint8_t> VariableEncoding::canonical_codeword(double target) const {
    std::vector<std::uint8_t> code(bits.size(), 0);
    const double tol = 1e-9 * std::max(1.0, std::abs(upper - lower));
    if (target < lower - tol || target > upper + tol) {
        throw InvalidArgument("canonical_codeword: " + detail::format_double(target) +
                              " lies outside [" + detail::format_double(lower) + ", " +
                              detail::format_double(upper) + "]");
    }
    if (method == Encoding::OneHot) {
        const auto k = static_cast<std::size_t>(std::llround(target - lower));
        code.at(k) = 1;
        return code;
    }
    std::int64_t units = step > 0.0 ? std::llround((target - offset) / step) : 0;
    if (method == Encoding::Unary || method == Encoding::DomainWall) {
        for (std::size_t i = 0; i < code.size() && units > 0; ++i, --units) code[i] = 1;
        return code;
    }
    // Greedy, largest coefficient first.
    std::vector<std::size_t> order(bits.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
        return integer_coefficients[a] > integer_coefficients[b];
    });
    std::int64_t remaining = units;
    for (std::size_t i : order) {
        if (integer_coefficients[i] <= remaining) {
            code[i] = 1;
            remaining -= integer_coefficients[i];
        }
    }
    if (remaining == 0) return code;

    // Greedy can miss for irregular coefficient lists; exact subset sum.
    std::vector<std::int64_t> from(static_cast<std::size_t>(units) + 1, -2);
    from[0] = -1;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const std::int64_t c = integer_coefficients[i];
        for (std::int64_t s = units; s >= c; --s) {
            if (from[static_cast<std::size_t>(s)] == -2 && from[static_cast<std::size_t>(s - c)] != -2 &&
                from[static_cast<std::size_t>(s - c)] != static_cast<std::int64_t>(i)) {
                from[static_cast<std::size_t>(s)] = static_cast<std::int64_t>(i);
            }
        }
    }
    if (from[static_cast<std::size_t>(units)] == -2) {
        throw InvalidArgument("canonical_codeword: value is not representable");
    }
    std::fill(code.begin(), code.end(), 0);
    for (std::int64_t s = units; s > 0;) {
        const auto i = static_cast<std::size_t>(from[static_cast<std::size_t>(s)]);
        code[i] = 1;
        s -= integer_coefficients[i];
    }
    return code;
}

DecodedValue decode(const VariableEncoding& e, std::span<const std::uint8_t> codeword) {
    if (codeword.size() != e.bits.size()) {
        throw DataError("decode: codeword has " + std::to_string(codeword.size()) +
                        " bits, encoding has " + std::to_string(e.bits.size()));
    }
    DecodedValue out;
    out.value = e.value(codeword);
    if (!e.penalty.is_zero()) {
        const double p = e.penalty.evaluate_with([&](VarId v) {
            const auto it = std::find(e.bits.begin(), e.bits.end(), v);
            return static_cast<double>(codeword[static_cast<std::size_t>(it - e.bits.begin())]);
        });
        out.admissible = p == 0.0;
    }
    return out;
}

DecodedValue decode(const VariableEncoding& e, const Assignment& bits) {
    std::vector<std::uint8_t> code(e.bits.size());
    for (std::size_t i = 0; i < e.bits.size(); ++i) {
        auto it = bits.find(e.bits[i]);
        if (it == bits.end()) throw MissingAssignment(e.bits[i]);
        code[i] = it->second != 0.0;
    }
    return decode(e, code);
}

std::vector<std::int64_t> binary_coefficients(std::int64_t n) {
    std::vector<std::int64_t> c;
    std::int64_t covered = 0;  // 2^k - 1
    for (std::int64_t p = 1; covered + p <= n; p *= 2) {
        c.push_back(p);
        covered += p;
    }
    if (n > covered) c.push_back(n - covered);
    return c;
}

std::vector<std::int64_t> unary_coefficients(std::int64_t n) {
    return std::vector<std::int64_t>(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)), 1);
}

std::int64_t arithmetic_progression_bits(std::int64_t n) {
    if (n <= 0) return 0;
    // Smallest N with N(N+1)/2 >= n, i.e. ceil(sqrt(1 + 8n)/2 - 1/2).
    auto N = static_cast<std::int64_t>(std::ceil(std::sqrt(1.0 + 8.0 * static_cast<double>(n)) / 2.0 - 0.5));
    while (N > 0 && (N - 1) * N / 2 >= n) --N;
    while (N * (N + 1) / 2 < n) ++N;
    return N;
}

std::vector<std::int64_t> arithmetic_progression_coefficients(std::int64_t n) {
    const std::int64_t N = arithmetic_progression_bits(n);
    std::vector<std::int64_t> c;
    for (std::int64_t i = 1; i < N; ++i) c.push_back(i);
    if (N > 0) c.push_back(n - N * (N - 1) / 2);
    return c;
}

namespace {

std::vector<std::int64_t> base_coefficients(std::int64_t n, Encoding base) {
    switch (base) {
        case Encoding::Binary: return binary_coefficients(n);
        case Encoding::Unary: return unary_coefficients(n);
        case Encoding::ArithmeticProgression: return arithmetic_progression_coefficients(n);
        default:
            throw InvalidArgument("bounded-coefficient base must be binary, unary or ap, not " +
                                  std::string(to_string(base)));
    }
}

std::int64_t coefficient_cap(double mu) {
    if (!(mu >= 1.0)) throw InvalidArgument("bounded-coefficient: mu must be at least 1");
    return static_cast<std::int64_t>(std::floor(std::min(mu, 9.0e15)));
}

std::int64_t range_width(std::int64_t lower, std::int64_t upper) {
    if (lower > upper) {
        throw InvalidArgument("encoding: lower bound " + std::to_string(lower) +
                              " exceeds upper bound " + std::to_string(upper));
    }
    return upper - lower;
}

VariableEncoding affine_encoding(Encoding method, std::int64_t lower, std::int64_t upper,
                                 const std::vector<std::int64_t>& units, IdAllocator& fresh) {
    VariableEncoding e;
    e.method = method;
    e.offset = static_cast<double>(lower);
    e.lower = static_cast<double>(lower);
    e.upper = static_cast<double>(upper);
    e.integer_coefficients = units;
    for (std::int64_t c : units) {
        e.bits.push_back(fresh.next());
        e.coefficients.push_back(static_cast<double>(c));
    }
    return e;
}

}  // namespace

std::vector<std::int64_t> bounded_coefficients(std::int64_t n, double mu, Encoding base) {
    const std::int64_t cap = coefficient_cap(mu);
    std::vector<std::int64_t> c;
    std::int64_t covered = 0;
    for (std::int64_t k : base_coefficients(n, base)) {
        if (k > cap) break;
        c.push_back(k);
        covered += k;
    }
    const std::int64_t rest = n - covered;
    for (std::int64_t i = 0; i < rest / cap; ++i) c.push_back(cap);
    if (rest % cap != 0) c.push_back(rest % cap);
    return c;
}

VariableEncoding encode_binary(std::int64_t lower, std::int64_t upper, IdAllocator& fresh) {
    return affine_encoding(Encoding::Binary, lower, upper,
                           binary_coefficients(range_width(lower, upper)), fresh);
}

VariableEncoding encode_unary(std::int64_t lower, std::int64_t upper, IdAllocator& fresh) {
    return affine_encoding(Encoding::Unary, lower, upper,
                           unary_coefficients(range_width(lower, upper)), fresh);
}

VariableEncoding encode_arithmetic_progression(std::int64_t lower, std::int64_t upper,
                                               IdAllocator& fresh) {
    return affine_encoding(Encoding::ArithmeticProgression, lower, upper,
                           arithmetic_progression_coefficients(range_width(lower, upper)), fresh);
}

VariableEncoding encode_bounded_coefficient(std::int64_t lower, std::int64_t upper, double mu,
                                            Encoding base, IdAllocator& fresh) {
    return affine_encoding(Encoding::BoundedCoefficient, lower, upper,
                           bounded_coefficients(range_width(lower, upper), mu, base), fresh);
}

VariableEncoding encode_one_hot(std::int64_t lower, std::int64_t upper, IdAllocator& fresh) {
    const std::int64_t n = range_width(lower, upper);
    VariableEncoding e;
    e.method = Encoding::OneHot;
    e.offset = 0.0;
    e.lower = static_cast<double>(lower);
    e.upper = static_cast<double>(upper);
    for (std::int64_t k = 0; k <= n; ++k) {
        e.bits.push_back(fresh.next());
        e.integer_coefficients.push_back(lower + k);
        e.coefficients.push_back(static_cast<double>(lower + k));
    }
    // (sum_k y_k - 1)^2 = 1 - sum_k y_k + 2 sum_{i<j} y_i y_j
    e.penalty.add_term(Term{}, 1.0);
    for (std::size_t i = 0; i < e.bits.size(); ++i) {
        e.penalty.add_term(Term{e.bits[i]}, -1.0);
        for (std::size_t j = i + 1; j < e.bits.size(); ++j) {
            e.penalty.add_term(Term{e.bits[i], e.bits[j]}, 2.0);
        }
    }
    return e;
}

VariableEncoding encode_domain_wall(std::int64_t lower, std::int64_t upper, IdAllocator& fresh) {
    VariableEncoding e = affine_encoding(Encoding::DomainWall, lower, upper,
                                         unary_coefficients(range_width(lower, upper)), fresh);
    // A wall is admissible when no 0 is followed by a 1: y_{i+1} (1 - y_i).
    for (std::size_t i = 0; i + 1 < e.bits.size(); ++i) {
        e.penalty.add_term(Term{e.bits[i + 1]}, 1.0);
        e.penalty.add_term(Term{e.bits[i], e.bits[i + 1]}, -1.0);
    }
    return e;
}

VariableEncoding encode_integer(std::int64_t lower, std::int64_t upper, const EncodingSpec& spec,
                                IdAllocator& fresh) {
    switch (spec.method) {
        case Encoding::Binary: return encode_binary(lower, upper, fresh);
        case Encoding::Unary: return encode_unary(lower, upper, fresh);
        case Encoding::OneHot: return encode_one_hot(lower, upper, fresh);
        case Encoding::DomainWall: return encode_domain_wall(lower, upper, fresh);
        case Encoding::BoundedCoefficient:
            return encode_bounded_coefficient(lower, upper, spec.mu, spec.base, fresh);
        case Encoding::ArithmeticProgression:
            return encode_arithmetic_progression(lower, upper, fresh);
    }
    throw InvalidArgument("unknown encoding");
}

namespace {

/// Integer coefficients of a penalty-free rule with exactly `bits` bits.
std::vector<std::int64_t> fixed_width_coefficients(const EncodingSpec& spec, std::int64_t bits) {
    std::vector<std::int64_t> c;
    switch (spec.method) {
        case Encoding::Binary:
            for (std::int64_t i = 0; i < bits; ++i) c.push_back(std::int64_t{1} << std::min<std::int64_t>(i, 62));
            return c;
        case Encoding::Unary:
            return unary_coefficients(bits);
        case Encoding::ArithmeticProgression:
            return arithmetic_progression_coefficients(bits * (bits + 1) / 2);
        case Encoding::BoundedCoefficient: {
            const std::int64_t cap = coefficient_cap(spec.mu);
            EncodingSpec base{spec.base, spec.mu, spec.base};
            for (std::int64_t k : fixed_width_coefficients(base, bits)) {
                if (k > cap) break;
                c.push_back(k);
            }
            while (static_cast<std::int64_t>(c.size()) < bits) c.push_back(cap);
            return c;
        }
        case Encoding::OneHot:
        case Encoding::DomainWall:
            break;
    }
    throw InvalidArgument("continuous variables need a penalty-free encoding, not " +
                          std::string(to_string(spec.method)));
}

std::int64_t sum_of(const std::vector<std::int64_t>& c) {
    return std::accumulate(c.begin(), c.end(), std::int64_t{0});
}

}  // namespace

std::int64_t default_continuous_bits(const EncodingSpec& base) {
    // Fewest bits with at least 100 quantization steps.
    for (std::int64_t bits = 1; bits <= 128; ++bits) {
        if (sum_of(fixed_width_coefficients(base, bits)) >= 100) return bits;
    }
    return 128;
}

VariableEncoding encode_continuous(double lower, double upper,
                                   std::optional<std::int64_t> bit_budget,
                                   const EncodingSpec& base, IdAllocator& fresh) {
    if (!std::isfinite(lower) || !std::isfinite(upper)) {
        throw InvalidArgument("encode_continuous: bounds must be finite");
    }
    if (lower > upper) throw InvalidArgument("encode_continuous: lower bound exceeds upper bound");
    if (has_structural_penalty(base.method)) {
        throw InvalidArgument("continuous variables need a penalty-free encoding, not " +
                              std::string(to_string(base.method)));
    }
    const std::int64_t bits = bit_budget.value_or(default_continuous_bits(base));
    if (bits < 1) throw InvalidArgument("encode_continuous: bit budget must be at least 1");

    VariableEncoding e;
    e.method = base.method;
    e.is_exact = false;
    e.offset = lower;
    e.lower = lower;
    e.upper = upper;
    if (lower == upper) return e;
    e.integer_coefficients = fixed_width_coefficients(base, bits);
    e.step = (upper - lower) / static_cast<double>(sum_of(e.integer_coefficients));
    for (std::int64_t c : e.integer_coefficients) {
        e.bits.push_back(fresh.next());
        e.coefficients.push_back(static_cast<double>(c) * e.step);
    }
    return e;
}

}  // namespace quboforge

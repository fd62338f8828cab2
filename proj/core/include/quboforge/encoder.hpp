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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quboforge/pbf.hpp"

namespace quboforge {

enum class Encoding {
    Binary,
    Unary,
    OneHot,
    DomainWall,
    BoundedCoefficient,
    ArithmeticProgression,
};

std::string_view to_string(Encoding method) noexcept;

/// True for encodings that need a structural penalty (one-hot, domain-wall).
bool has_structural_penalty(Encoding method) noexcept;

/// An encoding method plus its parameters, as named on the command line:
/// binary | unary | one-hot | domain-wall | bounded[:mu] | ap.
struct EncodingSpec {
    Encoding method = Encoding::Binary;
    /// Coefficient cap for bounded-coefficient.
    double mu = 1.0;
    /// Base of bounded-coefficient (binary, unary or ap).
    Encoding base = Encoding::Binary;

    static EncodingSpec parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const EncodingSpec&, const EncodingSpec&) = default;
};

/// Hands out fresh variable ids, monotonically.
class IdAllocator {
 public:
    explicit IdAllocator(VarId first = 0) : next_(first) {}
    VarId next() { return next_++; }
    VarId peek() const noexcept { return next_; }

 private:
    VarId next_;
};

/// One source variable written as offset + sum_i coefficients[i] * bits[i],
/// together with the penalty that singles out admissible codewords.
struct VariableEncoding {
    VarId source_id = 0;
    Encoding method = Encoding::Binary;
    std::vector<VarId> bits;
    std::vector<double> coefficients;
    double offset = 0.0;
    /// Zero on admissible codewords, positive elsewhere. Zero polynomial
    /// when every codeword is admissible.
    PseudoBooleanFunction penalty;
    /// Coefficients in units of `step`; value = offset + step * sum k_i y_i.
    std::vector<std::int64_t> integer_coefficients;
    double step = 1.0;
    /// False for discretized continuous variables.
    bool is_exact = true;
    double lower = 0.0;
    double upper = 0.0;

    /// The affine expression offset + sum c_i y_i.
    PseudoBooleanFunction expression() const;
    double value(std::span<const std::uint8_t> codeword) const;
    /// Codeword for `target`, chosen greedily (see canonical_codeword).
    std::vector<std::uint8_t> canonical_codeword(double target) const;
    double max_coefficient() const noexcept;
};

struct DecodedValue {
    double value = 0.0;
    bool admissible = true;
};

/// Reads the encoding's bits from `bits`; throws MissingAssignment.
DecodedValue decode(const VariableEncoding& e, const Assignment& bits);
DecodedValue decode(const VariableEncoding& e, std::span<const std::uint8_t> codeword);

// Integer coefficient rules over the range {0..n}.

/// 1, 2, 4, ..., 2^(k-1), then the residual n - (2^k - 1) if non-zero, with k
/// the largest power such that 2^k - 1 <= n.
std::vector<std::int64_t> binary_coefficients(std::int64_t n);
std::vector<std::int64_t> unary_coefficients(std::int64_t n);
/// N = ceil(sqrt(1 + 8n)/2 - 1/2) bits: 1, 2, ..., N-1 and n - N(N-1)/2.
std::vector<std::int64_t> arithmetic_progression_coefficients(std::int64_t n);
/// The base rule truncated at its first coefficient above floor(mu); the
/// remainder is filled with copies of floor(mu) and a final residual.
std::vector<std::int64_t> bounded_coefficients(std::int64_t n, double mu, Encoding base);
std::int64_t arithmetic_progression_bits(std::int64_t n);

VariableEncoding encode_binary(std::int64_t lower, std::int64_t upper, IdAllocator& fresh);
VariableEncoding encode_unary(std::int64_t lower, std::int64_t upper, IdAllocator& fresh);
VariableEncoding encode_one_hot(std::int64_t lower, std::int64_t upper, IdAllocator& fresh);
VariableEncoding encode_domain_wall(std::int64_t lower, std::int64_t upper, IdAllocator& fresh);
VariableEncoding encode_bounded_coefficient(std::int64_t lower, std::int64_t upper, double mu,
                                            Encoding base, IdAllocator& fresh);
VariableEncoding encode_arithmetic_progression(std::int64_t lower, std::int64_t upper,
                                               IdAllocator& fresh);

/// Dispatches on spec.method for an integer range.
VariableEncoding encode_integer(std::int64_t lower, std::int64_t upper, const EncodingSpec& spec,
                                IdAllocator& fresh);

/// Discretizes [lower, upper] with `bit_budget` bits of a penalty-free base
/// encoding, rescaled onto the interval. Without a budget, picks the fewest
/// bits whose quantization step is at most 1/100 of the range.
VariableEncoding encode_continuous(double lower, double upper,
                                   std::optional<std::int64_t> bit_budget,
                                   const EncodingSpec& base, IdAllocator& fresh);

/// Bit count used for continuous variables when no budget is given.
std::int64_t default_continuous_bits(const EncodingSpec& base);

}  // namespace quboforge

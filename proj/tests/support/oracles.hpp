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

// Reference computations for the test suites. Everything here is written
// from the definitions, without going through the library code it checks.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quboforge/compiler.hpp"
#include "quboforge/model.hpp"
#include "quboforge/pbf.hpp"
#include "quboforge/qubo_instance.hpp"
#include "quboforge/random.hpp"

namespace quboforge::oracle {

bool close(double a, double b, double rel = 1e-9);

/// State number k, bit i -> variable i (0/1 or -1/+1 by domain).
std::vector<std::int8_t> state_of(std::uint64_t k, std::size_t n, Domain domain);

/// scale * (sum h s + sum J s s + offset) straight from the maps.
double energy(const QuboInstance& q, const std::vector<std::int8_t>& state);

/// Energy of every state, indexed as in state_of.
std::vector<double> spectrum(const QuboInstance& q);

struct Minimum {
    double value = 0.0;
    std::vector<std::uint64_t> argmins;
};

/// Exhaustive minimum; ties within 1e-9 relative.
Minimum minimize(const QuboInstance& q);

/// Value of a polynomial at a 0/1 point given as a map.
double evaluate(const PseudoBooleanFunction& f, const std::map<VarId, int>& x);

/// min over every assignment of `aux` with the rest of f fixed by x.
double min_over(const PseudoBooleanFunction& f, std::map<VarId, int> x, const std::vector<VarId>& aux);

/// Same value using that f is affine in each auxiliary and no term holds two
/// auxiliaries: min = f(x, 0) + sum_w min(0, coefficient of w). Throws if the
/// structural assumption does not hold.
double min_over_separable(const PseudoBooleanFunction& f, const std::map<VarId, int>& x,
                          const std::vector<VarId>& aux);

/// Positive-term reduction with the trailing sum added instead of
/// subtracted: c (sum_i w_i (k - i - 1 + x_i + sum_{j>i} x_j) + x_{k-1} x_k).
PseudoBooleanFunction ptr_bg_plus_sign(const Term& term, double coeff, IdAllocator& fresh);

/// Registry whose "plus-sign" method uses ptr_bg_plus_sign for positive terms.
QuadratizationRegistry registry_with_plus_sign();

/// Random multilinear polynomial over ids [0, nvars).
PseudoBooleanFunction random_pbf(Rng& rng, std::size_t nvars, std::size_t max_degree, std::size_t max_terms);

/// AP bit count from the closed form, evaluated in floating point.
std::int64_t ap_bits_closed_form(std::int64_t n);

/// {value(y) : y admissible} by enumeration; admissibility decided from the
/// method's codeword shape, not from the penalty polynomial.
std::set<std::int64_t> integer_image(const VariableEncoding& e);
bool shape_admissible(const VariableEncoding& e, std::uint64_t codeword);

/// Small random constrained model over binaries and short-range integers.
Model random_constrained_model(Rng& rng);

/// Encoding names used when sweeping compile settings.
const std::vector<std::string>& encoding_names();

/// Compiles with the given settings and compares the decoded QUBO argmin set
/// against brute force. Returns an empty string on agreement, otherwise a
/// description of the mismatch. `infeasible_minimizer` is set when some
/// global minimizer decodes to an infeasible source point.
struct OracleCheck {
    std::string mismatch;
    bool infeasible_minimizer = false;
    std::size_t qubo_variables = 0;
};
OracleCheck check_against_brute_force(const Model& model, const CompilationSettings& settings);

/// True if `values` (row-major n x n 0/1) is a permutation matrix.
bool is_permutation_matrix(const std::vector<double>& values, std::size_t n);

}  // namespace quboforge::oracle

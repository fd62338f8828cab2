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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quboforge/encoder.hpp"
#include "quboforge/model.hpp"
#include "quboforge/pbf.hpp"
#include "quboforge/qubo_instance.hpp"

namespace quboforge {

// ---------------------------------------------------------------------------
// Penalties

/// Interval bounds of a polynomial over binary variables:
/// constant + sum of negative coefficients, constant + sum of positive ones.
std::pair<double, double> interval_bounds(const PseudoBooleanFunction& g);

/// Penalty for the affine equality g = 0: g^2, zero exactly on its solutions.
PseudoBooleanFunction penalize_linear_eq(const PseudoBooleanFunction& g);

struct InequalityPenalty {
    PseudoBooleanFunction penalty;
    /// Encoded slack s, present unless the slack range collapses to {0}.
    std::optional<VariableEncoding> slack;
};

/// g <= 0 (or g >= 0, normalized by negation) as (g + s)^2 with slack
/// s in [0, max(0, -min g)], encoded with `slack_encoding`. Throws
/// InfeasibleError when min g > 0 over the box.
InequalityPenalty penalize_linear_ineq(const PseudoBooleanFunction& g, Relation relation,
                                       IdAllocator& fresh, const EncodingSpec& slack_encoding);

/// Quadratic constraints: EQ gives g^2 (degree up to 4), LE/GE add a slack
/// as in the linear case with bounds from interval arithmetic.
InequalityPenalty penalize_quadratic(const PseudoBooleanFunction& g, Relation relation,
                                     IdAllocator& fresh, const EncodingSpec& slack_encoding);

/// sum_{i<j} x_i x_j, zero iff at most one member is 1.
PseudoBooleanFunction penalize_sos1(const std::vector<VarId>& members);

struct PenaltyMode {
    enum class Kind { Auto, Fixed };
    Kind kind = Kind::Auto;
    double rho = 0.0;

    static PenaltyMode automatic() { return {}; }
    static PenaltyMode fixed(double rho);
};

/// Auto: sum of |c| over the non-constant objective terms, plus one. This
/// exceeds the spread of the objective over all binary points, so any
/// violation costing at least 1 can never pay off. Fixed: rho verbatim.
double estimate_penalty_factor(const PseudoBooleanFunction& objective,
                               const PseudoBooleanFunction& constraint_penalty,
                               const PenaltyMode& mode);

// ---------------------------------------------------------------------------
// Quadratization

/// -c x_1...x_k -> c ((k-1) w - sum_i x_i w), one auxiliary. Requires k >= 3,
/// c < 0; lower degrees are returned unchanged.
PseudoBooleanFunction quadratize_ntr_kzfd(const Term& term, double coeff, IdAllocator& fresh);

/// c x_1...x_k -> c (sum_{i=1}^{k-2} w_i (k - i - 1 + x_i - sum_{j>i} x_j) + x_{k-1} x_k),
/// k - 2 auxiliaries. Requires k >= 3, c > 0.
PseudoBooleanFunction quadratize_ptr_bg(const Term& term, double coeff, IdAllocator& fresh);

/// Rewrites one monomial of degree >= 3 into a quadratic polynomial with
/// fresh auxiliaries such that the minimum over the auxiliaries equals the
/// monomial at every point.
using TermQuadratizer =
    std::function<PseudoBooleanFunction(const Term& term, double coeff, IdAllocator& fresh)>;

/// Named quadratization methods. "ntr-ptr" (aliases "default", "ptr-bg")
/// sends negative monomials to NTR-KZFD and positive ones to PTR-BG.
class QuadratizationRegistry {
 public:
    QuadratizationRegistry();

    /// Throws InvalidArgument on a duplicate name.
    void add(std::string name, TermQuadratizer method);
    const TermQuadratizer& get(std::string_view name) const;
    bool contains(std::string_view name) const;
    std::vector<std::string> names() const;

    static QuadratizationRegistry& global();

 private:
    std::map<std::string, TermQuadratizer, std::less<>> methods_;
};

struct Quadratization {
    PseudoBooleanFunction polynomial;
    std::vector<VarId> auxiliaries;
};

/// Degree <= 2 terms pass through; every higher term goes through `method`.
Quadratization quadratize(const PseudoBooleanFunction& f, IdAllocator& fresh,
                          std::string_view method = "ntr-ptr",
                          const QuadratizationRegistry& registry = QuadratizationRegistry::global());

// ---------------------------------------------------------------------------
// Compilation

struct CompilationSettings {
    /// Encoding of integer variables and of inequality slacks.
    EncodingSpec default_encoding{Encoding::Binary};
    /// Per-variable overrides.
    std::map<VarId, EncodingSpec> variable_encodings;
    EncodingSpec continuous_encoding{Encoding::ArithmeticProgression};
    std::optional<std::int64_t> continuous_bits;
    PenaltyMode penalty;
    /// Fixed rho per constraint index, overriding `penalty`.
    std::map<std::size_t, double> constraint_penalties;
    std::string quadratization = "ntr-ptr";
    Domain target_domain = Domain::Boolean;
    std::size_t max_auxiliaries = 1'000'000;
};

struct ConstraintRecord {
    std::size_t index = 0;
    std::string label;
    Relation relation = Relation::EQ;
    /// Constraint penalty in bit space (before rho, before quadratization).
    PseudoBooleanFunction penalty;
    double rho = 0.0;
    std::optional<VariableEncoding> slack;
    double slack_rho = 0.0;
};

/// Links the compiled QUBO back to the source model.
struct VariableMap {
    Model source;
    /// One encoding per source variable, in model order.
    std::vector<VariableEncoding> encodings;
    /// Penalty factor applied to each encoding's structural penalty (0 if none).
    std::vector<double> encoding_rho;
    std::vector<ConstraintRecord> constraints;
    std::vector<VarId> auxiliaries;

    const VariableEncoding& encoding_of(VarId source_id) const;
    std::vector<VarId> encoding_bits() const;
    std::vector<VarId> slack_bits() const;
    /// Source, encoding-bit, slack and auxiliary id sets are pairwise disjoint.
    bool ids_disjoint() const;
};

struct CompilationReport {
    std::size_t source_variables = 0;
    std::size_t constraints = 0;
    std::size_t encoded_bits = 0;
    std::size_t slack_bits = 0;
    std::size_t auxiliaries = 0;
    std::size_t qubo_variables = 0;
    std::size_t linear_terms = 0;
    std::size_t quadratic_terms = 0;
    std::size_t degree_before_quadratization = 0;
    /// Largest |coefficient| per stage: "objective", "encoding_penalties",
    /// "constraint_penalties", "before_quadratization", "after_quadratization".
    std::map<std::string, double> stage_delta;
    double delta_before = 0.0;
    double delta_after = 0.0;
    /// max |c| / min nonzero |c| over the final QUBO terms (offset excluded).
    double coefficient_ratio = 0.0;
    std::vector<double> constraint_rho;
    std::vector<double> encoding_rho;
};

struct CompilationResult {
    QuboInstance qubo;
    VariableMap map;
    CompilationReport report;

    /// Source objective value for a QUBO energy at a feasible point.
    double source_value(double qubo_energy) const;
};

/// Encodes, penalizes, quadratizes and emits the QUBO. Throws DataError with
/// the diagnostics if the model does not validate, InfeasibleError for a
/// constraint no point of the box can satisfy, InvalidArgument for unbounded
/// or unsupported variables, CapacityError past max_auxiliaries.
CompilationResult compile(const Model& model, const CompilationSettings& settings = {});

struct Violation {
    std::string label;
    double penalty = 0.0;
    bool source_violated = false;
};

struct DecodedSolution {
    /// Source variable id -> value.
    std::map<VarId, double> values;
    double objective = 0.0;
    bool feasible = true;
    std::vector<Violation> violations;
};

/// Pulls a bit assignment back to the source model. Feasible means every
/// encoding codeword is admissible and every source constraint holds.
DecodedSolution decode_solution(const VariableMap& map, const Assignment& bits);

/// Decodes a sample against the compiled instance (any domain).
DecodedSolution decode_sample(const CompilationResult& result, const SampleSet& samples,
                              const Sample& sample);

/// QUBO state (aligned with result.qubo.variable_ids, in its domain) that
/// encodes `values` with canonical codewords and witness slacks. Auxiliaries
/// are set to a minimizing value.
std::vector<std::int8_t> encode_solution(const CompilationResult& result,
                                         const std::map<VarId, double>& values);

std::string report_to_json(const CompilationReport& report);
std::string variable_map_to_json(const VariableMap& map);

}  // namespace quboforge

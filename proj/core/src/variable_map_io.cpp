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

#include "json_util.hpp"
#include "quboforge/compiler.hpp"

namespace quboforge {

using detail::ordered_json;

std::string report_to_json(const CompilationReport& report) {
    ordered_json j;
    j["source_variables"] = report.source_variables;
    j["constraints"] = report.constraints;
    j["encoded_bits"] = report.encoded_bits;
    j["slack_bits"] = report.slack_bits;
    j["auxiliaries"] = report.auxiliaries;
    j["qubo_variables"] = report.qubo_variables;
    j["linear_terms"] = report.linear_terms;
    j["quadratic_terms"] = report.quadratic_terms;
    j["degree_before_quadratization"] = report.degree_before_quadratization;
    j["delta_before"] = report.delta_before;
    j["delta_after"] = report.delta_after;
    j["coefficient_ratio"] = report.coefficient_ratio;
    ordered_json stages = ordered_json::object();
    for (const char* stage : {"objective", "encoding_penalties", "constraint_penalties",
                              "before_quadratization", "after_quadratization"}) {
        if (auto it = report.stage_delta.find(stage); it != report.stage_delta.end()) {
            stages[stage] = it->second;
        }
    }
    j["stage_delta"] = std::move(stages);
    j["constraint_rho"] = report.constraint_rho;
    j["encoding_rho"] = report.encoding_rho;
    return j.dump(2) + "\n";
}

namespace {

ordered_json encoding_to_json(const VariableEncoding& e) {
    ordered_json j;
    j["source"] = e.source_id;
    j["method"] = to_string(e.method);
    j["bits"] = e.bits;
    j["coefficients"] = e.coefficients;
    j["offset"] = e.offset;
    j["lower"] = e.lower;
    j["upper"] = e.upper;
    j["exact"] = e.is_exact;
    j["penalty_terms"] = e.penalty.size();
    return j;
}

}  // namespace

std::string variable_map_to_json(const VariableMap& map) {
    ordered_json j;
    ordered_json variables = ordered_json::array();
    for (std::size_t i = 0; i < map.encodings.size(); ++i) {
        ordered_json e = encoding_to_json(map.encodings[i]);
        e["rho"] = map.encoding_rho[i];
        variables.push_back(std::move(e));
    }
    j["variables"] = std::move(variables);
    ordered_json constraints = ordered_json::array();
    for (const ConstraintRecord& c : map.constraints) {
        ordered_json jc;
        jc["index"] = c.index;
        jc["label"] = c.label;
        jc["relation"] = to_string(c.relation);
        jc["rho"] = c.rho;
        jc["penalty_terms"] = c.penalty.size();
        if (c.slack) {
            jc["slack"] = encoding_to_json(*c.slack);
            jc["slack_rho"] = c.slack_rho;
        }
        constraints.push_back(std::move(jc));
    }
    j["constraints"] = std::move(constraints);
    j["auxiliaries"] = map.auxiliaries;
    return j.dump(2) + "\n";
}

}  // namespace quboforge

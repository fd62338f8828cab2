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

#include "quboforge/model_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json_util.hpp"

namespace quboforge {

using detail::get_as;
using detail::json;
using detail::require;

namespace {

constexpr const char* kWhat = "model";

json bound_to_json(double b) { return std::isfinite(b) ? json(b) : json(nullptr); }

double bound_from_json(const json& j, double infinite) {
    if (j.is_null()) return infinite;
    return get_as<double>(j, kWhat);
}

json polynomial_to_json(const Polynomial& p) {
    if (p.degree() > 2) {
        throw DataError("model file: degree " + std::to_string(p.degree()) +
                        " exceeds quadratic IR");
    }
    json linear = json::array();
    json quadratic = json::array();
    double constant = 0.0;
    for (const auto& [mono, coeff] : p.terms()) {
        if (mono.empty()) constant = coeff;
        else if (mono.size() == 1) linear.push_back(json::array({mono[0], coeff}));
        else quadratic.push_back(json::array({mono[0], mono[1], coeff}));
    }
    json out = json::object();
    out["linear"] = std::move(linear);
    out["quadratic"] = std::move(quadratic);
    out["constant"] = constant;
    return out;
}

VarId id_from_json(const json& j) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0 ||
        j.get<std::int64_t>() > std::numeric_limits<VarId>::max()) {
        throw DataError("model file: variable ids must be non-negative integers");
    }
    return static_cast<VarId>(j.get<std::int64_t>());
}

Polynomial polynomial_from_json(const json& object) {
    Polynomial p;
    if (auto it = object.find("linear"); it != object.end()) {
        for (const json& entry : *it) {
            if (!entry.is_array() || entry.size() != 2) {
                throw DataError("model file: linear entries must be [id, coeff]");
            }
            p.add_term({id_from_json(entry[0])}, get_as<double>(entry[1], kWhat));
        }
    }
    if (auto it = object.find("quadratic"); it != object.end()) {
        for (const json& entry : *it) {
            if (!entry.is_array() || entry.size() != 3) {
                throw DataError("model file: quadratic entries must be [i, j, coeff]");
            }
            p.add_term({id_from_json(entry[0]), id_from_json(entry[1])},
                       get_as<double>(entry[2], kWhat));
        }
    }
    if (auto it = object.find("constant"); it != object.end()) {
        p.add_term({}, get_as<double>(*it, kWhat));
    }
    return p;
}

}  // namespace

std::string write_model_json(const Model& model) {
    json doc = json::object();
    json variables = json::array();
    for (const Variable& v : model.variables()) {
        json jv = json::object();
        jv["id"] = v.id;
        jv["kind"] = to_string(v.kind);
        jv["lower"] = bound_to_json(v.lower);
        jv["upper"] = bound_to_json(v.upper);
        if (v.name) jv["name"] = *v.name;
        variables.push_back(std::move(jv));
    }
    doc["variables"] = std::move(variables);
    doc["sense"] = to_string(model.sense());
    doc["objective"] = polynomial_to_json(model.objective());

    json constraints = json::array();
    for (const Constraint& c : model.constraints()) {
        json jc;
        if (c.relation == Relation::SOS1) {
            jc = json::object();
            jc["members"] = c.members;
        } else {
            jc = polynomial_to_json(c.lhs);
            jc["rhs"] = c.rhs;
        }
        jc["relation"] = to_string(c.relation);
        if (c.name) jc["name"] = *c.name;
        constraints.push_back(std::move(jc));
    }
    doc["constraints"] = std::move(constraints);
    doc["metadata"] = model.metadata();
    return doc.dump(2) + "\n";
}

Model read_model_json(std::string_view text) {
    const json doc = detail::parse_json(text, kWhat);
    if (!doc.is_object()) throw DataError("model file: top level must be an object");
    Model model;

    for (const json& jv : require(doc, "variables", kWhat)) {
        Variable v;
        v.id = id_from_json(require(jv, "id", kWhat));
        v.kind = parse_var_kind(get_as<std::string>(require(jv, "kind", kWhat), kWhat));
        if (v.kind == VarKind::Binary) {
            v.lower = jv.contains("lower") ? bound_from_json(jv["lower"], -INFINITY) : 0.0;
            v.upper = jv.contains("upper") ? bound_from_json(jv["upper"], INFINITY) : 1.0;
        } else {
            v.lower = bound_from_json(require(jv, "lower", kWhat), -INFINITY);
            v.upper = bound_from_json(require(jv, "upper", kWhat), INFINITY);
        }
        if (auto it = jv.find("name"); it != jv.end()) v.name = get_as<std::string>(*it, kWhat);
        model.add_variable(std::move(v));
    }

    const Sense sense = doc.contains("sense")
                            ? parse_sense(get_as<std::string>(doc["sense"], kWhat))
                            : Sense::Min;
    model.set_objective(doc.contains("objective") ? polynomial_from_json(doc["objective"])
                                                  : Polynomial{},
                        sense);

    if (auto it = doc.find("constraints"); it != doc.end()) {
        for (const json& jc : *it) {
            Constraint c;
            c.relation = parse_relation(get_as<std::string>(require(jc, "relation", kWhat), kWhat));
            if (c.relation == Relation::SOS1) {
                for (const json& m : require(jc, "members", kWhat)) c.members.push_back(id_from_json(m));
            } else {
                c.lhs = polynomial_from_json(jc);
                c.rhs = get_as<double>(require(jc, "rhs", kWhat), kWhat);
            }
            if (auto name = jc.find("name"); name != jc.end()) {
                c.name = get_as<std::string>(*name, kWhat);
            }
            model.add_constraint(std::move(c));
        }
    }
    if (auto it = doc.find("metadata"); it != doc.end()) {
        for (const auto& [key, value] : it->items()) {
            model.metadata()[key] = value.is_string() ? value.get<std::string>() : value.dump();
        }
    }
    return model;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw DataError("failed writing " + path.string());
}

}  // namespace quboforge

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

#include "quboforge/formats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "format_util.hpp"
#include "json_util.hpp"

namespace quboforge {

using detail::format_double;
using detail::get_as;
using detail::json;
using detail::ordered_json;
using detail::require;

std::string_view to_string(FileFormat format) noexcept {
    switch (format) {
        case FileFormat::BqpJson: return "bqpjson";
        case FileFormat::Qubo: return "qubo";
        case FileFormat::Qubist: return "qubist";
    }
    return "?";
}

FileFormat parse_file_format(std::string_view name) {
    if (name == "bqpjson" || name == "json") return FileFormat::BqpJson;
    if (name == "qubo") return FileFormat::Qubo;
    if (name == "qubist") return FileFormat::Qubist;
    throw InvalidArgument("unknown file format '" + std::string(name) +
                          "' (expected bqpjson, qubo or qubist)");
}

std::optional<FileFormat> format_from_extension(const std::filesystem::path& path) {
    const std::string ext = path.extension().string();
    if (ext == ".json" || ext == ".bqpjson") return FileFormat::BqpJson;
    if (ext == ".qubo") return FileFormat::Qubo;
    if (ext == ".qubist") return FileFormat::Qubist;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// bqpjson

namespace {

constexpr const char* kBqp = "bqpjson";

VarId bqp_id(const json& j, const char* field) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0 ||
        j.get<std::int64_t>() > std::numeric_limits<VarId>::max()) {
        throw DataError(std::string("bqpjson: '") + field + "' must be a non-negative integer id");
    }
    return static_cast<VarId>(j.get<std::int64_t>());
}

bool close(double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

QuboInstance read_bqpjson(std::string_view text) {
    const json doc = detail::parse_json(text, kBqp);
    if (!doc.is_object()) throw DataError("bqpjson: top level must be an object");

    QuboInstance q;
    const json& id = require(doc, "id", kBqp);
    if (!id.is_number_integer()) throw DataError("bqpjson: 'id' must be an integer");
    q.id = id.get<std::int64_t>();

    const auto version = get_as<std::string>(require(doc, "version", kBqp), kBqp);
    if (version != "1" && version.rfind("1.", 0) != 0) {
        throw DataError("bqpjson: unsupported version '" + version + "' (expected 1.x)");
    }

    std::set<VarId> declared;
    for (const json& v : require(doc, "variable_ids", kBqp)) {
        const VarId vid = bqp_id(v, "variable_ids");
        if (!declared.insert(vid).second) {
            throw DataError("bqpjson: duplicate variable id " + std::to_string(vid));
        }
    }
    q.variable_ids.assign(declared.begin(), declared.end());

    q.domain = parse_domain(get_as<std::string>(require(doc, "variable_domain", kBqp), kBqp));
    q.scale = get_as<double>(require(doc, "scale", kBqp), kBqp);
    if (!(q.scale > 0.0)) throw DataError("bqpjson: scale must be positive");
    q.offset = get_as<double>(require(doc, "offset", kBqp), kBqp);

    for (const json& t : require(doc, "linear_terms", kBqp)) {
        const VarId v = bqp_id(require(t, "id", kBqp), "id");
        if (!declared.count(v)) {
            throw DataError("bqpjson: linear term on undeclared variable " + std::to_string(v));
        }
        if (!q.linear.emplace(v, get_as<double>(require(t, "coeff", kBqp), kBqp)).second) {
            throw DataError("bqpjson: duplicate linear term for variable " + std::to_string(v));
        }
    }
    for (const json& t : require(doc, "quadratic_terms", kBqp)) {
        const VarId head = bqp_id(require(t, "id_head", kBqp), "id_head");
        const VarId tail = bqp_id(require(t, "id_tail", kBqp), "id_tail");
        if (head >= tail) {
            throw DataError("bqpjson: quadratic term with id_head " + std::to_string(head) +
                            " >= id_tail " + std::to_string(tail));
        }
        if (!declared.count(head) || !declared.count(tail)) {
            throw DataError("bqpjson: quadratic term on undeclared variable");
        }
        if (!q.quadratic.emplace(std::pair{head, tail}, get_as<double>(require(t, "coeff", kBqp), kBqp))
                 .second) {
            throw DataError("bqpjson: duplicate quadratic term (" + std::to_string(head) + ", " +
                            std::to_string(tail) + ")");
        }
    }

    const json& metadata = require(doc, "metadata", kBqp);
    if (!metadata.is_object()) throw DataError("bqpjson: 'metadata' must be an object");
    for (const auto& [key, value] : metadata.items()) {
        q.metadata[key] = value.is_string() ? value.get<std::string>() : value.dump();
    }
    if (auto it = doc.find("description"); it != doc.end() && it->is_string()) {
        q.metadata.try_emplace("description", it->get<std::string>());
    }

    if (auto it = doc.find("solutions"); it != doc.end()) {
        std::vector<Sample> samples;
        for (const json& s : *it) {
            Sample sample;
            sample.state.assign(q.variable_ids.size(), 0);
            std::vector<bool> seen(q.variable_ids.size(), false);
            for (const json& a : require(s, "assignment", kBqp)) {
                const VarId v = bqp_id(require(a, "id", kBqp), "id");
                if (!declared.count(v)) {
                    throw DataError("bqpjson: solution assigns undeclared variable " + std::to_string(v));
                }
                const std::size_t idx = q.index_of(v);
                const auto value = get_as<int>(require(a, "value", kBqp), kBqp);
                if (!in_domain(q.domain, value)) {
                    throw DataError("bqpjson: solution value outside the variable domain");
                }
                sample.state[idx] = static_cast<std::int8_t>(value);
                seen[idx] = true;
            }
            if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
                throw DataError("bqpjson: solution does not assign every variable");
            }
            sample.value = get_as<double>(require(s, "evaluation", kBqp), kBqp);
            const double recomputed = energy(q, sample.state);
            if (!close(sample.value, recomputed)) {
                throw DataError("bqpjson: solution evaluation " + format_double(sample.value) +
                                " does not match the recomputed energy " + format_double(recomputed));
            }
            if (auto n = s.find("num_occurrences"); n != s.end()) {
                sample.reads = get_as<std::uint64_t>(*n, kBqp);
            }
            samples.push_back(std::move(sample));
        }
        q.solutions = SampleSet(q.domain, q.variable_ids, std::move(samples));
    }
    return q;
}

std::string write_bqpjson(const QuboInstance& q) {
    q.validate();
    ordered_json doc;
    doc["id"] = q.id;
    doc["version"] = "1.0.0";
    doc["variable_ids"] = q.variable_ids;
    doc["variable_domain"] = to_string(q.domain);
    doc["scale"] = q.scale;
    doc["offset"] = q.offset;
    ordered_json linear = ordered_json::array();
    for (const auto& [v, c] : q.linear) {
        ordered_json t;
        t["id"] = v;
        t["coeff"] = c;
        linear.push_back(std::move(t));
    }
    doc["linear_terms"] = std::move(linear);
    ordered_json quadratic = ordered_json::array();
    for (const auto& [ij, c] : q.quadratic) {
        ordered_json t;
        t["id_head"] = ij.first;
        t["id_tail"] = ij.second;
        t["coeff"] = c;
        quadratic.push_back(std::move(t));
    }
    doc["quadratic_terms"] = std::move(quadratic);
    ordered_json metadata = ordered_json::object();
    for (const auto& [key, value] : q.metadata) metadata[key] = value;
    doc["metadata"] = std::move(metadata);
    if (q.solutions) {
        ordered_json solutions = ordered_json::array();
        std::size_t index = 0;
        for (const Sample& s : q.solutions->samples()) {
            ordered_json js;
            js["id"] = index++;
            ordered_json assignment = ordered_json::array();
            for (std::size_t i = 0; i < s.state.size(); ++i) {
                ordered_json a;
                a["id"] = q.variable_ids[i];
                a["value"] = static_cast<int>(s.state[i]);
                assignment.push_back(std::move(a));
            }
            js["assignment"] = std::move(assignment);
            js["evaluation"] = s.value;
            if (s.reads != 1) js["num_occurrences"] = s.reads;
            solutions.push_back(std::move(js));
        }
        doc["solutions"] = std::move(solutions);
    }
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Line-oriented formats

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 1;
    while (!text.empty()) {
        const auto end = text.find('\n');
        std::string_view line = text.substr(0, end);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back({number++, line});
        if (end == std::string_view::npos) break;
        text.remove_prefix(end + 1);
    }
    return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

bool blank(std::string_view line) { return tokens(line).empty(); }

[[noreturn]] void fail(const char* format, const Line& line, const std::string& message) {
    throw ParseError(std::string(format) + ": line " + std::to_string(line.number) + ": " + message,
                     line.number, 1);
}

std::int64_t parse_index(const char* format, const Line& line, std::string_view token) {
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size()) {
        fail(format, line, "expected an integer, got '" + std::string(token) + "'");
    }
    if (value < 0) fail(format, line, "negative index " + std::string(token));
    return value;
}

double parse_value(const char* format, const Line& line, std::string_view token) {
    double value = 0.0;
    const char* first = token.data();
    if (!token.empty() && token.front() == '+') ++first;
    auto [end, ec] = std::from_chars(first, token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size() || !std::isfinite(value)) {
        fail(format, line, "expected a number, got '" + std::string(token) + "'");
    }
    return value;
}

void declare_range(QuboInstance& q, std::int64_t count) {
    q.variable_ids.resize(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) q.variable_ids[static_cast<std::size_t>(i)] = static_cast<VarId>(i);
}

VarId max_id_plus_one(const QuboInstance& q) {
    return q.variable_ids.empty() ? 0 : q.variable_ids.back() + 1;
}

}  // namespace

QuboInstance read_qubo(std::string_view text) {
    constexpr const char* kFmt = "qubo";
    QuboInstance q;
    q.domain = Domain::Boolean;
    bool have_header = false;
    std::int64_t max_nodes = 0, n_diagonal = 0, n_elements = 0;
    std::int64_t seen_diagonal = 0, seen_elements = 0;
    Line last{0, {}};

    for (const Line& line : split_lines(text)) {
        last = line;
        const auto tok = tokens(line.text);
        if (tok.empty()) continue;
        if (tok[0] == "c" || tok[0].front() == 'c') {
            if (tok.size() == 3 && tok[0] == "c" && tok[1] == "scale") {
                q.scale = parse_value(kFmt, line, tok[2]);
                if (!(q.scale > 0.0)) fail(kFmt, line, "scale must be positive");
            } else if (tok.size() == 3 && tok[0] == "c" && tok[1] == "offset") {
                q.offset = parse_value(kFmt, line, tok[2]);
            }
            continue;
        }
        if (tok[0] == "p") {
            if (have_header) fail(kFmt, line, "duplicate 'p' line");
            if (tok.size() != 6 || tok[1] != "qubo") {
                fail(kFmt, line, "expected 'p qubo <topology> <maxNodes> <nDiagonals> <nElements>'");
            }
            max_nodes = parse_index(kFmt, line, tok[3]);
            n_diagonal = parse_index(kFmt, line, tok[4]);
            n_elements = parse_index(kFmt, line, tok[5]);
            declare_range(q, max_nodes);
            have_header = true;
            continue;
        }
        if (!have_header) fail(kFmt, line, "term before the 'p qubo' line");
        if (tok.size() != 3) fail(kFmt, line, "expected 'i j value'");
        const std::int64_t i = parse_index(kFmt, line, tok[0]);
        const std::int64_t j = parse_index(kFmt, line, tok[1]);
        const double value = parse_value(kFmt, line, tok[2]);
        if (i >= max_nodes || j >= max_nodes) {
            fail(kFmt, line, "index out of range for maxNodes " + std::to_string(max_nodes));
        }
        if (i > j) fail(kFmt, line, "off-diagonal entries must have i < j");
        if (i == j) {
            ++seen_diagonal;
            if (!q.linear.emplace(static_cast<VarId>(i), value).second) {
                fail(kFmt, line, "duplicate diagonal entry for " + std::to_string(i));
            }
        } else {
            ++seen_elements;
            if (!q.quadratic.emplace(std::pair{static_cast<VarId>(i), static_cast<VarId>(j)}, value).second) {
                fail(kFmt, line, "duplicate entry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
            }
        }
    }
    if (!have_header) throw ParseError("qubo: missing 'p qubo' line", last.number, 1);
    if (seen_diagonal != n_diagonal || seen_elements != n_elements) {
        throw ParseError("qubo: header declares " + std::to_string(n_diagonal) + " diagonal and " +
                             std::to_string(n_elements) + " off-diagonal entries, file has " +
                             std::to_string(seen_diagonal) + " and " + std::to_string(seen_elements),
                         last.number, 1);
    }
    return q;
}

std::string write_qubo(const QuboInstance& input, std::vector<std::string>* warnings) {
    input.validate();
    std::string out;
    QuboInstance q;
    if (input.domain == Domain::Spin) {
        q = to_boolean(input);
        out += "c converted from spin domain\n";
        if (warnings) warnings->push_back("qubo: spin instance converted to boolean");
    } else {
        q = input;
    }
    if (warnings && (!q.metadata.empty() || q.solutions)) {
        warnings->push_back("qubo: metadata and solutions are not representable and were dropped");
    }
    if (q.scale != 1.0) out += "c scale " + format_double(q.scale) + "\n";
    if (q.offset != 0.0) out += "c offset " + format_double(q.offset) + "\n";
    out += "p qubo 0 " + std::to_string(max_id_plus_one(q)) + " " + std::to_string(q.linear.size()) +
           " " + std::to_string(q.quadratic.size()) + "\n";
    for (const auto& [v, c] : q.linear) {
        out += std::to_string(v) + " " + std::to_string(v) + " " + format_double(c) + "\n";
    }
    for (const auto& [ij, c] : q.quadratic) {
        out += std::to_string(ij.first) + " " + std::to_string(ij.second) + " " + format_double(c) + "\n";
    }
    return out;
}

QuboInstance read_qubist(std::string_view text) {
    constexpr const char* kFmt = "qubist";
    QuboInstance q;
    q.domain = Domain::Spin;
    bool have_header = false;
    std::int64_t sites = 0, entries = 0, seen = 0;
    Line last{0, {}};
    for (const Line& line : split_lines(text)) {
        last = line;
        if (blank(line.text)) continue;
        const auto tok = tokens(line.text);
        if (!have_header) {
            if (tok.size() != 2) fail(kFmt, line, "expected header '<N> <m>'");
            sites = parse_index(kFmt, line, tok[0]);
            entries = parse_index(kFmt, line, tok[1]);
            declare_range(q, sites);
            have_header = true;
            continue;
        }
        if (tok.size() != 3) fail(kFmt, line, "expected 'i j value'");
        const std::int64_t i = parse_index(kFmt, line, tok[0]);
        const std::int64_t j = parse_index(kFmt, line, tok[1]);
        const double value = parse_value(kFmt, line, tok[2]);
        if (i > j) fail(kFmt, line, "entries must have i <= j");
        if (j >= sites) fail(kFmt, line, "index " + std::to_string(j) + " >= N = " + std::to_string(sites));
        ++seen;
        const bool fresh = i == j
                               ? q.linear.emplace(static_cast<VarId>(i), value).second
                               : q.quadratic.emplace(std::pair{static_cast<VarId>(i), static_cast<VarId>(j)}, value).second;
        if (!fresh) fail(kFmt, line, "duplicate entry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
    if (!have_header) throw ParseError("qubist: missing header line", last.number, 1);
    if (seen != entries) {
        throw ParseError("qubist: header declares " + std::to_string(entries) + " entries, file has " +
                             std::to_string(seen),
                         last.number, 1);
    }
    return q;
}

std::string write_qubist(const QuboInstance& input, std::vector<std::string>* warnings) {
    input.validate();
    QuboInstance q = input.domain == Domain::Boolean ? to_spin(input) : input;
    if (warnings) {
        if (input.domain == Domain::Boolean) warnings->push_back("qubist: boolean instance converted to spin");
        if (q.offset != 0.0) {
            warnings->push_back("qubist: offset " + format_double(q.scale * q.offset) +
                                " is not representable and was dropped");
        }
        if (!q.metadata.empty() || q.solutions) {
            warnings->push_back("qubist: metadata and solutions are not representable and were dropped");
        }
    }
    std::string out = std::to_string(max_id_plus_one(q)) + " " +
                      std::to_string(q.linear.size() + q.quadratic.size()) + "\n";
    for (const auto& [v, c] : q.linear) {
        out += std::to_string(v) + " " + std::to_string(v) + " " + format_double(q.scale * c) + "\n";
    }
    for (const auto& [ij, c] : q.quadratic) {
        out += std::to_string(ij.first) + " " + std::to_string(ij.second) + " " +
               format_double(q.scale * c) + "\n";
    }
    return out;
}

QuboInstance read_instance(std::string_view text, FileFormat format) {
    switch (format) {
        case FileFormat::BqpJson: return read_bqpjson(text);
        case FileFormat::Qubo: return read_qubo(text);
        case FileFormat::Qubist: return read_qubist(text);
    }
    throw InvalidArgument("unknown file format");
}

std::string write_instance(const QuboInstance& q, FileFormat format, std::vector<std::string>* warnings) {
    switch (format) {
        case FileFormat::BqpJson: return write_bqpjson(q);
        case FileFormat::Qubo: return write_qubo(q, warnings);
        case FileFormat::Qubist: return write_qubist(q, warnings);
    }
    throw InvalidArgument("unknown file format");
}

ConversionResult convert(std::string_view input, FileFormat from, FileFormat to,
                         std::optional<Domain> target_domain) {
    QuboInstance q = read_instance(input, from);
    if (target_domain) q = to_domain(q, *target_domain);
    if (from != FileFormat::BqpJson && to == FileFormat::BqpJson) {
        q.metadata["source_format"] = std::string(to_string(from));
    }
    ConversionResult result;
    if (to == FileFormat::Qubist) {
        const QuboInstance spin = to_domain(q, Domain::Spin);
        result.dropped_offset = spin.scale * spin.offset;
    }
    result.text = write_instance(q, to, &result.warnings);
    return result;
}

// ---------------------------------------------------------------------------
// SampleSet files

std::string write_sample_set_json(const SampleSet& samples, bool include_timing) {
    ordered_json doc;
    doc["domain"] = to_string(samples.domain());
    doc["variable_ids"] = samples.variable_ids();
    ordered_json list = ordered_json::array();
    for (const Sample& s : samples.samples()) {
        ordered_json js;
        std::vector<int> state(s.state.begin(), s.state.end());
        js["state"] = std::move(state);
        js["value"] = s.value;
        js["reads"] = s.reads;
        list.push_back(std::move(js));
    }
    doc["samples"] = std::move(list);
    if (include_timing) {
        ordered_json timing;
        timing["total_seconds"] = samples.timing().total_seconds;
        if (samples.timing().effective_seconds) {
            timing["effective_seconds"] = *samples.timing().effective_seconds;
        }
        doc["timing"] = std::move(timing);
    }
    ordered_json metadata = ordered_json::object();
    for (const auto& [key, value] : samples.metadata()) metadata[key] = value;
    doc["metadata"] = std::move(metadata);
    return doc.dump(2) + "\n";
}

SampleSet read_sample_set_json(std::string_view text) {
    constexpr const char* kWhat = "sample set";
    const json doc = detail::parse_json(text, kWhat);
    if (!doc.is_object()) throw DataError("sample set: top level must be an object");
    const Domain domain = parse_domain(get_as<std::string>(require(doc, "domain", kWhat), kWhat));
    std::vector<VarId> ids;
    for (const json& v : require(doc, "variable_ids", kWhat)) ids.push_back(bqp_id(v, "variable_ids"));
    std::vector<Sample> samples;
    for (const json& js : require(doc, "samples", kWhat)) {
        Sample s;
        for (const json& v : require(js, "state", kWhat)) s.state.push_back(static_cast<std::int8_t>(get_as<int>(v, kWhat)));
        s.value = get_as<double>(require(js, "value", kWhat), kWhat);
        s.reads = js.contains("reads") ? get_as<std::uint64_t>(js["reads"], kWhat) : 1;
        samples.push_back(std::move(s));
    }
    SampleSet out(domain, std::move(ids), std::move(samples));
    if (auto it = doc.find("timing"); it != doc.end()) {
        out.timing().total_seconds = get_as<double>(require(*it, "total_seconds", kWhat), kWhat);
        if (auto e = it->find("effective_seconds"); e != it->end() && !e->is_null()) {
            out.timing().effective_seconds = get_as<double>(*e, kWhat);
        }
    }
    if (auto it = doc.find("metadata"); it != doc.end()) {
        for (const auto& [key, value] : it->items()) {
            out.metadata()[key] = value.is_string() ? value.get<std::string>() : value.dump();
        }
    }
    return out;
}

}  // namespace quboforge

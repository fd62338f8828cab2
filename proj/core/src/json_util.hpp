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

#include <string>
#include <string_view>

#include "json.hpp"

#include "quboforge/errors.hpp"

namespace quboforge::detail {

using nlohmann::json;
using nlohmann::ordered_json;

/// Parses JSON, turning syntax errors into ParseError with line/column.
template <class Json = json>
Json parse_json(std::string_view text, std::string_view what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(std::string(what) + ": invalid JSON at line " + std::to_string(line) +
                             ", column " + std::to_string(column),
                         line, column);
    }
}

template <class Json>
const Json& require(const Json& object, const char* key, std::string_view what) {
    if (!object.is_object()) throw DataError(std::string(what) + ": expected a JSON object");
    auto it = object.find(key);
    if (it == object.end()) {
        throw DataError(std::string(what) + ": missing required key '" + key + "'");
    }
    return *it;
}

template <class T, class Json>
T get_as(const Json& value, std::string_view what) {
    try {
        return value.template get<T>();
    } catch (const nlohmann::json::exception&) {
        throw DataError(std::string(what) + ": unexpected value type");
    }
}

}  // namespace quboforge::detail

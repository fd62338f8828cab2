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

#include <filesystem>
#include <string>
#include <string_view>

#include "quboforge/model.hpp"

namespace quboforge {

/// Model file: a JSON document with keys variables, sense, objective,
/// constraints and metadata. Polynomials are written as linear [[id, c]],
/// quadratic [[i, j, c]] (i <= j, i == j is a square) and constant lists.
/// Keys are sorted; the text ends with a newline.
std::string write_model_json(const Model& model);
Model read_model_json(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace quboforge

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
#include <utility>
#include <vector>

#include "quboforge/model.hpp"
#include "quboforge/qubo_instance.hpp"

namespace quboforge {

/// Random Boolean QUBO over ids 0..n-1. Each of the n(n+1)/2 diagonal and
/// upper-triangular slots is present with probability `density`; present
/// coefficients are uniform on [lo, hi]. Deterministic for a fixed seed.
QuboInstance random_qubo(std::size_t n, double density, std::uint64_t seed,
                         std::pair<double, double> coeff_range = {-1.0, 1.0});

/// Symmetric n x n matrix with zero diagonal and off-diagonal entries uniform
/// on [0, 1).
std::vector<std::vector<double>> random_distances(std::size_t n, std::uint64_t seed);

/// Weights {1, ..., n}, the benchmark number-partitioning instance.
std::vector<double> npp_benchmark_weights(std::size_t n);

}  // namespace quboforge

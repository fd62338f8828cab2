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

#include "quboforge/generators.hpp"

#include <cmath>

#include "quboforge/random.hpp"

namespace quboforge {

Model tsp_model(std::size_t n, const std::vector<std::vector<double>>& distances) {
    if (n < 2) throw InvalidArgument("tsp_model: need at least 2 cities");
    if (distances.size() != n) throw InvalidArgument("tsp_model: distance matrix is not n x n");
    for (const auto& row : distances) {
        if (row.size() != n) throw InvalidArgument("tsp_model: distance matrix is not square");
        for (double d : row) {
            if (!(d >= 0.0) || !std::isfinite(d)) {
                throw InvalidArgument("tsp_model: distances must be finite and non-negative");
            }
        }
    }

    Model m;
    auto x = [n](std::size_t city, std::size_t slot) { return static_cast<VarId>(city * n + slot); };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            m.add_variable({x(i, k), VarKind::Binary, 0.0, 1.0,
                            "x[" + std::to_string(i) + "," + std::to_string(k) + "]"});
        }
    }

    Polynomial objective;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t next = (k + 1) % n;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                objective.add_term({x(i, k), x(j, next)}, distances[i][j]);
            }
        }
    }
    m.set_objective(std::move(objective), Sense::Min);

    for (std::size_t i = 0; i < n; ++i) {
        Polynomial row;
        for (std::size_t k = 0; k < n; ++k) row.add_term({x(i, k)}, 1.0);
        m.add_constraint(std::move(row), Relation::EQ, 1.0, "city " + std::to_string(i));
    }
    for (std::size_t k = 0; k < n; ++k) {
        Polynomial column;
        for (std::size_t i = 0; i < n; ++i) column.add_term({x(i, k)}, 1.0);
        m.add_constraint(std::move(column), Relation::EQ, 1.0, "slot " + std::to_string(k));
    }
    m.metadata()["problem"] = "tsp";
    m.metadata()["cities"] = std::to_string(n);
    return m;
}

Model npp_model(const std::vector<double>& weights) {
    if (weights.empty()) throw InvalidArgument("npp_model: weight list is empty");
    Model m;
    for (std::size_t i = 0; i < weights.size(); ++i) m.add_binary("x[" + std::to_string(i) + "]");

    // (sum_i w_i (2 x_i - 1))^2 with x_i^2 = x_i:
    //   W^2 + sum_i (4 w_i^2 - 4 W w_i) x_i + sum_{i<j} 8 w_i w_j x_i x_j
    double total = 0.0;
    for (double w : weights) total += w;
    Polynomial objective = Polynomial::constant(total * total);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double wi = weights[i];
        objective.add_term({static_cast<VarId>(i)}, 4.0 * wi * wi - 4.0 * total * wi);
        for (std::size_t j = i + 1; j < weights.size(); ++j) {
            objective.add_term({static_cast<VarId>(i), static_cast<VarId>(j)},
                               8.0 * wi * weights[j]);
        }
    }
    m.set_objective(std::move(objective), Sense::Min);
    m.metadata()["problem"] = "npp";
    return m;
}

QuboInstance random_qubo(std::size_t n, double density, std::uint64_t seed,
                         std::pair<double, double> coeff_range) {
    if (n < 1) throw InvalidArgument("random_qubo: n must be at least 1");
    if (!(density > 0.0 && density <= 1.0)) {
        throw InvalidArgument("random_qubo: density must lie in (0, 1]");
    }
    const auto [lo, hi] = coeff_range;
    if (!(lo <= hi)) throw InvalidArgument("random_qubo: empty coefficient range");

    Rng rng(seed);
    QuboInstance q;
    q.domain = Domain::Boolean;
    for (std::size_t i = 0; i < n; ++i) q.variable_ids.push_back(static_cast<VarId>(i));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (!rng.bernoulli(density)) continue;
            const double c = rng.uniform(lo, hi);
            if (i == j) q.linear[static_cast<VarId>(i)] = c;
            else q.quadratic[{static_cast<VarId>(i), static_cast<VarId>(j)}] = c;
        }
    }
    q.metadata["generator"] = "random";
    q.metadata["seed"] = std::to_string(seed);
    return q;
}

std::vector<std::vector<double>> random_distances(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = rng.uniform();
    }
    return d;
}

std::vector<double> npp_benchmark_weights(std::size_t n) {
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<double>(i + 1);
    return w;
}

}  // namespace quboforge

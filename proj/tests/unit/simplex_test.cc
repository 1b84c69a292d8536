// Copyright 2026 The rspin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "rspin/simplex.h"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

namespace rspin {
namespace {

TEST(Simplex, Quadratic) {
    auto f = [](std::span<const double> x) {
        double s = 0;
        for (size_t i = 0; i < x.size(); i++) {
            s += (i + 1.0) * (x[i] - 1) * (x[i] - 1);
        }
        return s;
    };
    std::vector<double> x0(6, 0.0);
    SimplexResult r = minimize_simplex(f, x0, {.max_evals = 20000, .initial_step = 0.5, .f_tolerance = 1e-16,
                                               .x_tolerance = 1e-8});
    EXPECT_TRUE(r.converged);
    for (double xi : r.x) {
        EXPECT_NEAR(xi, 1, 1e-6);
    }
}

TEST(Simplex, Rosenbrock) {
    auto f = [](std::span<const double> x) {
        return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
    };
    std::vector<double> x0 = {-1.2, 1.0};
    SimplexResult r = minimize_simplex(f, x0, {.max_evals = 10000, .initial_step = 0.1, .f_tolerance = 1e-20,
                                               .x_tolerance = 1e-10});
    EXPECT_NEAR(r.x[0], 1, 1e-6);
    EXPECT_NEAR(r.x[1], 1, 1e-6);
}

TEST(Simplex, BudgetExhaustionReported) {
    auto f = [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1]; };
    std::vector<double> x0 = {5, 5};
    SimplexResult r = minimize_simplex(f, x0, {.max_evals = 10, .initial_step = 0.1, .f_tolerance = 0,
                                               .x_tolerance = 0});
    EXPECT_FALSE(r.converged);
    EXPECT_LE(r.evals, 14);
}

TEST(Simplex, NanTreatedAsWorse) {
    auto f = [](std::span<const double> x) { return x[0] < 0 ? NAN : (x[0] - 2) * (x[0] - 2); };
    std::vector<double> x0 = {0.5};
    SimplexResult r = minimize_simplex(f, x0, {.max_evals = 2000, .initial_step = 0.5, .f_tolerance = 1e-14,
                                               .x_tolerance = 1e-8});
    EXPECT_NEAR(r.x[0], 2, 1e-5);
}

TEST(Simplex, RejectsEmpty) {
    auto f = [](std::span<const double>) { return 0.0; };
    EXPECT_THROW(minimize_simplex(f, std::vector<double>{}, {}), std::invalid_argument);
}

}  // namespace
}  // namespace rspin

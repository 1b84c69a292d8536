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

#ifndef RSPIN_SIMPLEX_H
#define RSPIN_SIMPLEX_H

#include <functional>
#include <span>
#include <vector>

namespace rspin {

struct SimplexOptions {
    int max_evals = 10000;
    /// Edge length of the initial axis-aligned simplex.
    double initial_step = 0.1;
    /// Stop once max |f_i - f_best| over the vertices falls below this...
    double f_tolerance = 1e-15;
    /// ...and every vertex is within this (max-norm) of the best one.
    double x_tolerance = 1e-10;
};

struct SimplexResult {
    std::vector<double> x;
    double value = 0;
    int evals = 0;
    bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Derivative-free Nelder-Mead minimization with dimension-adaptive
/// coefficients (reflection 1, expansion 1 + 2/n, contraction 3/4 - 1/(2n),
/// shrink 1 - 1/n), which behave far better than the classical ones beyond a
/// handful of dimensions.
SimplexResult minimize_simplex(const Objective &f, std::span<const double> x0, const SimplexOptions &options);

}  // namespace rspin

#endif

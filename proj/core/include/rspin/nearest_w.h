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

#ifndef RSPIN_NEAREST_W_H
#define RSPIN_NEAREST_W_H

#include <vector>

#include "rspin/linalg.h"
#include "rspin/rmt.h"

namespace rspin {

/// Settings for the search of the zero-tangle state of largest overlap.
///
/// The state is parametrized by the 16 real components of its amplitudes and
/// renormalized at each evaluation. The objective
///   -|<psi|phi>|^2 + mu * tau(phi)
/// is minimized by Nelder-Mead for each penalty mu in `penalties`, each stage
/// warm-started from the previous one. Starts: psi itself, psi with its
/// smallest-magnitude amplitude zeroed, and `haar_starts` random states. The
/// best start with tau < tau_tolerance wins.
struct NearestWConfig {
    int max_evals = 200000;
    std::vector<double> penalties = {1e0, 1e1, 1e2, 1e3, 1e4, 1e5, 1e6};
    int haar_starts = 8;
    double tau_tolerance = 1e-6;
    double initial_step = 0.05;
};

struct NearestWResult {
    PureState phi_n;
    /// |<psi|phi_n>|^2.
    double overlap;
    /// Three-tangle of phi_n.
    double tau_residual;
    int optimizer_evals;
    /// False if no start reached tau < tau_tolerance; phi_n is then the start
    /// with the smallest tangle.
    bool converged;
};

/// `rng` supplies the random starts only.
NearestWResult nearest_zero_tangle(const PureState &psi, const NearestWConfig &config, RngStream &rng);

}  // namespace rspin

#endif

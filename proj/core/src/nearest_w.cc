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

#include "rspin/nearest_w.h"

#include <algorithm>
#include <cmath>

#include "rspin/entanglement.h"
#include "rspin/simplex.h"

namespace rspin {

namespace {

using Amps = std::array<Complex, 8>;

// Returns false for a (near) zero vector.
bool unpack(std::span<const double> x, Amps &out) {
    double n2 = 0;
    for (int i = 0; i < 8; i++) {
        out[i] = Complex(x[2 * i], x[2 * i + 1]);
        n2 += std::norm(out[i]);
    }
    if (!(n2 > 1e-300)) {
        return false;
    }
    double inv = 1 / std::sqrt(n2);
    for (auto &a : out) {
        a *= inv;
    }
    return true;
}

std::vector<double> pack(const PureState &s) {
    std::vector<double> x(16);
    for (int i = 0; i < 8; i++) {
        x[2 * i] = s[i].real();
        x[2 * i + 1] = s[i].imag();
    }
    return x;
}

double overlap(const PureState &psi, const Amps &phi) {
    Complex t = 0;
    for (int i = 0; i < 8; i++) {
        t += std::conj(psi[i]) * phi[i];
    }
    return std::norm(t);
}

struct Candidate {
    PureState state;
    double overlap;
    double tau;
    bool feasible;
};

}  // namespace

NearestWResult nearest_zero_tangle(const PureState &psi, const NearestWConfig &config, RngStream &rng) {
    if (psi.dim() != 8) {
        throw std::invalid_argument("nearest_zero_tangle requires a three-qubit state");
    }
    if (config.penalties.empty() || config.max_evals <= 0) {
        throw std::invalid_argument("nearest_zero_tangle needs penalties and a positive budget");
    }

    double tau0 = three_tangle(psi);
    if (tau0 < config.tau_tolerance) {
        return NearestWResult{psi, 1.0, tau0, 0, true};
    }

    std::vector<PureState> starts;
    starts.push_back(psi);
    {
        std::array<Complex, 8> zeroed{};
        std::copy(psi.amplitudes().begin(), psi.amplitudes().end(), zeroed.begin());
        int smallest = 0;
        for (int i = 1; i < 8; i++) {
            if (std::abs(zeroed[i]) < std::abs(zeroed[smallest])) {
                smallest = i;
            }
        }
        zeroed[smallest] = 0;
        starts.push_back(PureState::normalized(std::span<const Complex>(zeroed)));
    }
    for (int i = 0; i < config.haar_starts; i++) {
        starts.push_back(sample_haar_state(8, rng));
    }

    const int n_stages = static_cast<int>(config.penalties.size());
    const int per_start = config.max_evals / static_cast<int>(starts.size());
    int total_evals = 0;
    std::vector<Candidate> candidates;

    for (const PureState &start : starts) {
        std::vector<double> x = pack(start);
        int used = 0;
        for (int stage = 0; stage < n_stages; stage++) {
            double mu = config.penalties[stage];
            Objective objective = [&](std::span<const double> v) -> double {
                Amps phi;
                if (!unpack(v, phi)) {
                    return INFINITY;
                }
                return -overlap(psi, phi) + mu * tangle_hyperdet(std::span<const Complex>(phi));
            };
            int remaining_stages = n_stages - stage;
            SimplexOptions opts;
            opts.max_evals = std::max(1, (per_start - used) / remaining_stages);
            opts.initial_step = config.initial_step;
            // Norm and global phase are flat directions, so the simplex never
            // collapses in x; stop on the spread of values alone.
            opts.f_tolerance = 1e-10;
            opts.x_tolerance = INFINITY;
            SimplexResult r = minimize_simplex(objective, x, opts);
            used += r.evals;
            x = std::move(r.x);
        }
        total_evals += used;
        Amps phi;
        if (!unpack(x, phi)) {
            continue;
        }
        PureState state = PureState::normalized(std::span<const Complex>(phi));
        double tau = three_tangle(state);
        candidates.push_back(Candidate{state, overlap(psi, phi), tau, tau < config.tau_tolerance});
    }

    const Candidate *best = nullptr;
    for (const auto &c : candidates) {
        if (c.feasible && (best == nullptr || c.overlap > best->overlap)) {
            best = &c;
        }
    }
    if (best != nullptr) {
        return NearestWResult{best->state, best->overlap, best->tau, total_evals, true};
    }
    for (const auto &c : candidates) {
        if (best == nullptr || c.tau < best->tau) {
            best = &c;
        }
    }
    if (best == nullptr) {
        return NearestWResult{psi, 1.0, tau0, total_evals, false};
    }
    return NearestWResult{best->state, best->overlap, best->tau, total_evals, false};
}

}  // namespace rspin

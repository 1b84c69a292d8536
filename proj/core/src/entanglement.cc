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

#include "rspin/entanglement.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace rspin {

namespace {

void require_dim(const PureState &state, int dim, const char *what) {
    if (state.dim() != dim) {
        throw std::invalid_argument(std::string(what) + " requires a state of dimension " + std::to_string(dim));
    }
}

void require_qubit(int q) {
    if (q < 1 || q > 3) {
        throw std::invalid_argument("qubit index must be 1, 2 or 3");
    }
}

}  // namespace

double concurrence_pure2(const PureState &state) {
    require_dim(state, 4, "concurrence_pure2");
    double c = 2 * std::abs(state[0] * state[3] - state[1] * state[2]);
    return std::min(c, 1.0);
}

namespace {

constexpr double kRootFloor = 16 * std::numeric_limits<double>::epsilon();

}  // namespace

double concurrence_mixed(const HermitianMatrix &rho) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("concurrence_mixed requires a 4x4 density matrix");
    }
    if (std::abs(rho.trace() - 1) > 1e-9) {
        throw std::invalid_argument("density matrix trace is " + std::to_string(rho.trace()));
    }
    // With rho = sum_k |v_k><v_k| (v_k = sqrt(p_k) |k>), the square roots of the
    // eigenvalues of rho * rho_tilde are the singular values of the symmetric
    // matrix tau_ij = v_i^T (Y (x) Y) v_j. Taking them as singular values keeps
    // small ones accurate to roundoff rather than to its square root.
    EigenDecomposition eig = hermitian_eig(rho);
    std::array<double, 4> roots{};
    for (int k = 0; k < 4; k++) {
        double p = eig.eigenvalue(k);
        if (p < -kPsdFloor) {
            throw std::invalid_argument("density matrix is not positive semidefinite: eigenvalue " +
                                        std::to_string(p));
        }
        // Eigenvalues this close to zero are roundoff; their square roots
        // (~1e-9) would otherwise leak into the small singular values.
        roots[k] = p > kRootFloor ? std::sqrt(p) : 0;
    }
    static constexpr std::array<double, 4> kSign = {-1, 1, 1, -1};
    const ComplexMatrix &u = eig.vectors();
    ComplexMatrix tau(4);
    for (int i = 0; i < 4; i++) {
        for (int j = i; j < 4; j++) {
            Complex t = 0;
            for (int r = 0; r < 4; r++) {
                t += kSign[r] * u(r, i) * u(3 - r, j);
            }
            t *= roots[i] * roots[j];
            tau(i, j) = t;
            tau(j, i) = t;
        }
    }
    std::array<double, kMaxDim> s = singular_values(tau);
    double c = s[0] - s[1] - s[2] - s[3];
    return std::clamp(c, 0.0, 1.0);
}

double pair_concurrence(const PureState &state, int i, int j) {
    require_dim(state, 8, "pair_concurrence");
    require_qubit(i);
    require_qubit(j);
    if (i == j) {
        throw std::invalid_argument("pair_concurrence needs two distinct qubits");
    }
    return concurrence_mixed(partial_trace(state, {std::min(i, j), std::max(i, j)}, 3));
}

double bipartition_concurrence(const PureState &state, int lone_qubit) {
    require_dim(state, 8, "bipartition_concurrence");
    require_qubit(lone_qubit);
    double det = det2(partial_trace(state, {lone_qubit}, 3));
    return std::min(2 * std::sqrt(std::max(det, 0.0)), 1.0);
}

namespace {

double tangle_from_parts(double c_lone, double c_a, double c_b, const TangleOptions &options) {
    double tau = c_lone * c_lone - c_a * c_a - c_b * c_b;
    if (!options.clamp) {
        return tau;
    }
    if (tau < -kTangleClampWindow) {
        throw ConsistencyError("three-tangle is negative beyond roundoff: " + std::to_string(tau));
    }
    return std::clamp(tau, 0.0, 1.0);
}

}  // namespace

double three_tangle(const PureState &state, TangleOptions options) {
    require_dim(state, 8, "three_tangle");
    int r = options.reference_qubit;
    require_qubit(r);
    int a = r == 1 ? 2 : 1;
    int b = r == 3 ? 2 : 3;
    return tangle_from_parts(bipartition_concurrence(state, r), pair_concurrence(state, r, a),
                             pair_concurrence(state, r, b), options);
}

double tangle_hyperdet(std::span<const Complex> amps) {
    if (amps.size() != 8) {
        throw std::invalid_argument("tangle_hyperdet requires 8 amplitudes");
    }
    const Complex &a000 = amps[0];
    const Complex &a001 = amps[1];
    const Complex &a010 = amps[2];
    const Complex &a011 = amps[3];
    const Complex &a100 = amps[4];
    const Complex &a101 = amps[5];
    const Complex &a110 = amps[6];
    const Complex &a111 = amps[7];

    Complex d1 = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 + a010 * a010 * a101 * a101 +
                 a100 * a100 * a011 * a011;
    Complex p0 = a000 * a111;
    Complex p1 = a011 * a100;
    Complex p2 = a101 * a010;
    Complex p3 = a110 * a001;
    Complex d2 = p0 * p1 + p0 * p2 + p0 * p3 + p1 * p2 + p1 * p3 + p2 * p3;
    Complex d3 = a000 * a110 * a101 * a011 + a111 * a001 * a010 * a100;
    return 4 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

double total_concurrence(const PureState &state) {
    require_dim(state, 8, "total_concurrence");
    return pair_concurrence(state, 1, 2) + pair_concurrence(state, 1, 3) + pair_concurrence(state, 2, 3);
}

EntanglementReport entanglement_report(const PureState &state, TangleOptions options) {
    require_dim(state, 8, "entanglement_report");
    EntanglementReport r;
    r.c12 = pair_concurrence(state, 1, 2);
    r.c13 = pair_concurrence(state, 1, 3);
    r.c23 = pair_concurrence(state, 2, 3);
    r.c1_23 = bipartition_concurrence(state, 1);
    r.c2_13 = bipartition_concurrence(state, 2);
    r.c3_12 = bipartition_concurrence(state, 3);
    require_qubit(options.reference_qubit);
    switch (options.reference_qubit) {
        case 1:
            r.tau = tangle_from_parts(r.c1_23, r.c12, r.c13, options);
            break;
        case 2:
            r.tau = tangle_from_parts(r.c2_13, r.c12, r.c23, options);
            break;
        default:
            r.tau = tangle_from_parts(r.c3_12, r.c13, r.c23, options);
            break;
    }
    r.c_total = r.c12 + r.c13 + r.c23;
    return r;
}

PureState state_from_canonical(const CanonicalCoefficients &c) {
    for (double a : {c.a0, c.a1, c.a2, c.a3, c.a4}) {
        if (!(a >= 0)) {
            throw std::invalid_argument("canonical coefficients must be non-negative");
        }
    }
    if (!(c.phi >= 0 && c.phi <= std::numbers::pi)) {
        throw std::invalid_argument("canonical phase must lie in [0, pi]");
    }
    std::array<Complex, 8> amps{};
    amps[0b000] = c.a0;
    amps[0b100] = std::polar(c.a1, c.phi);
    amps[0b101] = c.a2;
    amps[0b110] = c.a3;
    amps[0b111] = c.a4;
    return PureState(std::span<const Complex>(amps));
}

}  // namespace rspin

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

#ifndef RSPIN_ENTANGLEMENT_H
#define RSPIN_ENTANGLEMENT_H

#include <stdexcept>

#include "rspin/linalg.h"

namespace rspin {

/// Raised when a measure violates an identity it must satisfy (e.g. a three-tangle
/// below the clamp window), which indicates a bug rather than roundoff.
class ConsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Residues of the three-tangle in [-kTangleClampWindow, 0) are set to zero.
inline constexpr double kTangleClampWindow = 1e-9;

/// 2 |ad - bc| for a|00> + b|01> + c|10> + d|11>.
double concurrence_pure2(const PureState &state);

/// Wootters concurrence of a two-qubit density matrix.
///
/// The spectrum of rho * rho_tilde is taken from the Hermitian matrix
/// sqrt(rho) rho_tilde sqrt(rho), with rho_tilde = (Y (x) Y) rho^* (Y (x) Y).
/// Rejects matrices whose trace differs from 1 by more than 1e-9 or that are not
/// PSD within kPsdFloor.
double concurrence_mixed(const HermitianMatrix &rho);

/// Concurrence of the reduced state of qubits i and j (1-based) of a
/// three-qubit pure state.
double pair_concurrence(const PureState &state, int i, int j);

/// C_{i|jk} = 2 sqrt(det rho_i).
double bipartition_concurrence(const PureState &state, int lone_qubit);

struct TangleOptions {
    /// Qubit taking the role of "1" in C_{1|23}^2 - C_{12}^2 - C_{13}^2.
    int reference_qubit = 1;
    /// When false the raw difference is returned, negative residue included.
    bool clamp = true;
};

/// Three-tangle from the monogamy difference. Throws ConsistencyError if the
/// difference is below -kTangleClampWindow.
double three_tangle(const PureState &state, TangleOptions options = {});

/// Three-tangle from Cayley's hyperdeterminant, 4 |d1 - 2 d2 + 4 d3|.
///
/// Closed form; used as an independent oracle and as the optimizer objective.
/// Accepts unnormalized amplitudes (scales as |psi|^4).
double tangle_hyperdet(std::span<const Complex> amps);
inline double tangle_hyperdet(const PureState &state) {
    return tangle_hyperdet(state.amplitudes());
}

/// C12 + C13 + C23.
double total_concurrence(const PureState &state);

/// Every measure of one three-qubit pure state.
struct EntanglementReport {
    double c12 = 0;
    double c13 = 0;
    double c23 = 0;
    double c1_23 = 0;
    double c2_13 = 0;
    double c3_12 = 0;
    double tau = 0;
    double c_total = 0;
};

EntanglementReport entanglement_report(const PureState &state, TangleOptions options = {});

/// Coefficients of a0|000> + a1 e^{i phi}|100> + a2|101> + a3|110> + a4|111>.
struct CanonicalCoefficients {
    double a0 = 0;
    double a1 = 0;
    double a2 = 0;
    double a3 = 0;
    double a4 = 0;
    double phi = 0;
};

/// Rejects negative a_j, phi outside [0, pi], and sum a_j^2 != 1 (1e-12).
PureState state_from_canonical(const CanonicalCoefficients &c);

}  // namespace rspin

#endif

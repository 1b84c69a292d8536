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

#ifndef RSPIN_MODEL_H
#define RSPIN_MODEL_H

#include <array>
#include <optional>
#include <string_view>

#include "rspin/linalg.h"
#include "rspin/rmt.h"

namespace rspin {

/// Topology of the random interaction term V.
enum class InteractionKind {
    TwoQubitSeparable,  // V1 (x) V2
    TwoQubitJoint,      // V12 from GUE(4)
    CollectiveI,        // V1 (x) V2 (x) V3
    CollectiveII,       // V12 (x) V3
    CollectiveIII,      // V123 from GUE(8)
    PairwiseA,          // (1 (x) V23 + V12 (x) 1) / 2
    PairwiseB,          // (1 (x) V2 (x) V3 + V1 (x) V2 (x) 1) / 2
    PairwiseC,          // (1 V2 V3 + V1 1 V3 + V1 V2 1) / 3
};

inline constexpr std::array<InteractionKind, 8> kAllInteractionKinds = {
    InteractionKind::TwoQubitSeparable, InteractionKind::TwoQubitJoint, InteractionKind::CollectiveI,
    InteractionKind::CollectiveII,      InteractionKind::CollectiveIII, InteractionKind::PairwiseA,
    InteractionKind::PairwiseB,         InteractionKind::PairwiseC,
};

int n_qubits(InteractionKind kind);

/// CLI/CSV vocabulary: two-i, two-ii, I, II, III, a, b, c.
std::string_view to_string(InteractionKind kind);
std::optional<InteractionKind> parse_interaction_kind(std::string_view text);

/// How single-qubit factors that appear in several summands of V_b and V_c are
/// drawn. Shared is the default reading (one draw per named factor).
enum class FactorSampling { Shared, Independent };

struct ModelSpec {
    InteractionKind kind;
    double sigma;
    FactorSampling factor_sampling = FactorSampling::Shared;
};

/// Sum over qubits of sigma_z acting on that qubit.
HermitianMatrix one_body(int n_qubits);

/// Draws V for spec.kind with the variance split that gives every kind the same
/// per-entry scale sigma. Rejects sigma <= 0.
HermitianMatrix sample_interaction(const ModelSpec &spec, RngStream &rng);

/// one_body(n) + V, or one_body(n) alone when sigma == 0 (the stream is then
/// not advanced).
HermitianMatrix build_hamiltonian(const ModelSpec &spec, RngStream &rng);

}  // namespace rspin

#endif

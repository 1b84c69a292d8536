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

#include "rspin/model.h"

#include <bit>
#include <cmath>

namespace rspin {

namespace {

HermitianMatrix gue(int dim, double sigma, RngStream &rng) {
    return sample_gue(GueSpec{.dim = dim, .sigma = sigma}, rng);
}

}  // namespace

int n_qubits(InteractionKind kind) {
    switch (kind) {
        case InteractionKind::TwoQubitSeparable:
        case InteractionKind::TwoQubitJoint:
            return 2;
        default:
            return 3;
    }
}

std::string_view to_string(InteractionKind kind) {
    switch (kind) {
        case InteractionKind::TwoQubitSeparable:
            return "two-i";
        case InteractionKind::TwoQubitJoint:
            return "two-ii";
        case InteractionKind::CollectiveI:
            return "I";
        case InteractionKind::CollectiveII:
            return "II";
        case InteractionKind::CollectiveIII:
            return "III";
        case InteractionKind::PairwiseA:
            return "a";
        case InteractionKind::PairwiseB:
            return "b";
        case InteractionKind::PairwiseC:
            return "c";
    }
    return "?";
}

std::optional<InteractionKind> parse_interaction_kind(std::string_view text) {
    for (auto k : kAllInteractionKinds) {
        if (to_string(k) == text) {
            return k;
        }
    }
    return std::nullopt;
}

HermitianMatrix one_body(int n_qubits) {
    if (n_qubits != 2 && n_qubits != 3) {
        throw std::invalid_argument("one_body supports 2 or 3 qubits");
    }
    int dim = 1 << n_qubits;
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; i++) {
        int ones = std::popcount(static_cast<unsigned>(i));
        m(i, i) = (n_qubits - ones) - ones;
    }
    return HermitianMatrix(m);
}

HermitianMatrix sample_interaction(const ModelSpec &spec, RngStream &rng) {
    const double s = spec.sigma;
    if (!(s > 0) || !std::isfinite(s)) {
        throw std::invalid_argument("interaction strength must be positive and finite");
    }
    const HermitianMatrix id2 = HermitianMatrix::identity(2);
    const bool shared = spec.factor_sampling == FactorSampling::Shared;

    switch (spec.kind) {
        case InteractionKind::TwoQubitSeparable: {
            double f = std::sqrt(s);
            auto v1 = gue(2, f, rng);
            auto v2 = gue(2, f, rng);
            return kron(v1, v2);
        }
        case InteractionKind::TwoQubitJoint:
            return gue(4, s, rng);
        case InteractionKind::CollectiveI: {
            double f = std::cbrt(s);
            auto v1 = gue(2, f, rng);
            auto v2 = gue(2, f, rng);
            auto v3 = gue(2, f, rng);
            return kron(kron(v1, v2), v3);
        }
        case InteractionKind::CollectiveII: {
            double f = std::cbrt(s);
            auto v12 = gue(4, f * f, rng);
            auto v3 = gue(2, f, rng);
            return kron(v12, v3);
        }
        case InteractionKind::CollectiveIII:
            return gue(8, s, rng);
        case InteractionKind::PairwiseA: {
            auto v12 = gue(4, s, rng);
            auto v23 = gue(4, s, rng);
            return 0.5 * (kron(id2, v23) + kron(v12, id2));
        }
        case InteractionKind::PairwiseB: {
            double f = std::sqrt(s);
            auto v1 = gue(2, f, rng);
            auto v2 = gue(2, f, rng);
            auto v3 = gue(2, f, rng);
            auto v2b = shared ? v2 : gue(2, f, rng);
            return 0.5 * (kron(kron(id2, v2), v3) + kron(kron(v1, v2b), id2));
        }
        case InteractionKind::PairwiseC: {
            double f = std::sqrt(s);
            auto v1 = gue(2, f, rng);
            auto v2 = gue(2, f, rng);
            auto v3 = gue(2, f, rng);
            if (shared) {
                return (1.0 / 3.0) *
                       (kron(kron(id2, v2), v3) + kron(kron(v1, id2), v3) + kron(kron(v1, v2), id2));
            }
            auto v1b = gue(2, f, rng);
            auto v2b = gue(2, f, rng);
            auto v3b = gue(2, f, rng);
            return (1.0 / 3.0) *
                   (kron(kron(id2, v2), v3) + kron(kron(v1, id2), v3b) + kron(kron(v1b, v2b), id2));
        }
    }
    throw std::invalid_argument("unknown interaction kind");
}

HermitianMatrix build_hamiltonian(const ModelSpec &spec, RngStream &rng) {
    if (spec.sigma < 0 || !std::isfinite(spec.sigma)) {
        throw std::invalid_argument("interaction strength must be non-negative and finite");
    }
    HermitianMatrix h = one_body(n_qubits(spec.kind));
    if (spec.sigma == 0) {
        return h;
    }
    return h + sample_interaction(spec, rng);
}

}  // namespace rspin

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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rspin/rmt.h"
#include "test_util.h"

namespace rspin {
namespace {

using testing::ghz;
using testing::w_state;

TEST(Concurrence, BellAndProduct) {
    EXPECT_NEAR(concurrence_pure2(testing::bell_phi_plus()), 1, 1e-15);
    EXPECT_NEAR(concurrence_pure2(PureState::basis(4, 3)), 0, 1e-15);
    EXPECT_NEAR(concurrence_mixed(density_matrix(testing::bell_phi_plus())), 1, 1e-12);
    EXPECT_NEAR(concurrence_mixed(HermitianMatrix::diagonal({0.25, 0.25, 0.25, 0.25})), 0, 1e-12);
}

TEST(Concurrence, PartiallyEntangled) {
    // cos(t)|00> + sin(t)|11> has C = sin(2t).
    const double t = 0.3;
    PureState s({std::cos(t), 0, 0, std::sin(t)});
    EXPECT_NEAR(concurrence_pure2(s), std::sin(2 * t), 1e-15);
    EXPECT_NEAR(concurrence_mixed(density_matrix(s)), std::sin(2 * t), 1e-12);
}

TEST(Concurrence, WernerState) {
    // p |Phi+><Phi+| + (1 - p) I / 4 has C = max(0, (3p - 1) / 2).
    for (double p : {0.2, 1.0 / 3, 0.5, 0.9}) {
        ComplexMatrix m = (1 - p) / 4 * ComplexMatrix::identity(4);
        m += p * density_matrix(testing::bell_phi_plus()).matrix();
        EXPECT_NEAR(concurrence_mixed(HermitianMatrix(m)), std::max(0.0, (3 * p - 1) / 2), 1e-10) << p;
    }
}

TEST(Concurrence, Validation) {
    EXPECT_THROW(concurrence_pure2(ghz()), std::invalid_argument);
    EXPECT_THROW(concurrence_mixed(HermitianMatrix::identity(4)), std::invalid_argument);
    EXPECT_THROW(concurrence_mixed(HermitianMatrix::diagonal({1.5, -0.5, 0, 0})), std::invalid_argument);
    EXPECT_THROW(pair_concurrence(ghz(), 1, 1), std::invalid_argument);
    EXPECT_THROW(pair_concurrence(ghz(), 0, 2), std::invalid_argument);
    EXPECT_THROW(bipartition_concurrence(ghz(), 4), std::invalid_argument);
}

TEST(ReferenceStates, Ghz) {
    EntanglementReport r = entanglement_report(ghz());
    EXPECT_NEAR(r.tau, 1, 1e-12);
    EXPECT_NEAR(r.c12 + r.c13 + r.c23, 0, 1e-12);
    EXPECT_NEAR(r.c1_23, 1, 1e-12);
    EXPECT_NEAR(tangle_hyperdet(ghz()), 1, 1e-12);
}

TEST(ReferenceStates, W) {
    EntanglementReport r = entanglement_report(w_state());
    EXPECT_NEAR(r.tau, 0, 1e-12);
    EXPECT_NEAR(r.c12, 2.0 / 3, 1e-12);
    EXPECT_NEAR(r.c13, 2.0 / 3, 1e-12);
    EXPECT_NEAR(r.c23, 2.0 / 3, 1e-12);
    EXPECT_NEAR(r.c1_23, 2 * std::sqrt(2.0) / 3, 1e-12);
    EXPECT_NEAR(r.c_total, 2, 1e-12);
}

TEST(ReferenceStates, BiseparableBellTimesQubit) {
    PureState s = kron(testing::bell_phi_plus(), PureState::basis(2, 0));
    EntanglementReport r = entanglement_report(s);
    EXPECT_NEAR(r.c12, 1, 1e-12);
    EXPECT_NEAR(r.c13, 0, 1e-12);
    EXPECT_NEAR(r.c3_12, 0, 1e-12);
    EXPECT_NEAR(r.tau, 0, 1e-12);
}

TEST(Canonical, Validation) {
    EXPECT_THROW(state_from_canonical({-0.1, 0, 0, 0, 1, 0}), std::invalid_argument);
    EXPECT_THROW(state_from_canonical({1, 0, 0, 0, 0, 4.0}), std::invalid_argument);
    EXPECT_THROW(state_from_canonical({1, 1, 0, 0, 0, 0}), std::invalid_argument);
}

// Property tests over random inputs.

TEST(Property, CanonicalIdentity) {
    RngStream rng(21, 0);
    for (int t = 0; t < 500; t++) {
        std::array<double, 5> a{};
        double norm = 0;
        for (auto &x : a) {
            x = std::abs(rng.normal());
            norm += x * x;
        }
        norm = std::sqrt(norm);
        CanonicalCoefficients c{a[0] / norm, a[1] / norm, a[2] / norm, a[3] / norm, a[4] / norm,
                                std::numbers::pi * rng.uniform()};
        PureState s = state_from_canonical(c);
        double expected = std::pow(2 * c.a0 * c.a4, 2);
        EXPECT_NEAR(three_tangle(s), expected, 1e-8);
        EXPECT_NEAR(tangle_hyperdet(s), expected, 1e-8);
    }
}

TEST(Property, TanglePermutationInvariance) {
    RngStream rng(22, 0);
    const std::array<std::array<int, 3>, 5> perms = {{{0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (int t = 0; t < 300; t++) {
        PureState s = sample_haar_state(8, rng);
        double base = three_tangle(s);
        for (int r = 2; r <= 3; r++) {
            EXPECT_NEAR(three_tangle(s, {.reference_qubit = r}), base, 1e-8);
        }
        for (const auto &p : perms) {
            EXPECT_NEAR(three_tangle(testing::permute_qubits(s, p)), base, 1e-8);
        }
    }
}

TEST(Property, PureVersusMixedConcurrence) {
    RngStream rng(23, 0);
    for (int t = 0; t < 1000; t++) {
        PureState s = sample_haar_state(4, rng);
        EXPECT_NEAR(concurrence_pure2(s), concurrence_mixed(density_matrix(s)), 1e-8);
    }
}

TEST(Property, HyperdeterminantOracle) {
    RngStream rng(24, 0);
    for (int t = 0; t < 500; t++) {
        PureState s = sample_haar_state(8, rng);
        EXPECT_NEAR(three_tangle(s), tangle_hyperdet(s), 1e-8);
    }
}

TEST(Property, LocalUnitaryInvariance) {
    RngStream rng(25, 0);
    for (int t = 0; t < 300; t++) {
        PureState s = sample_haar_state(8, rng);
        PureState u = apply(testing::random_local_unitary3(rng), s);
        EntanglementReport a = entanglement_report(s);
        EntanglementReport b = entanglement_report(u);
        EXPECT_NEAR(a.c12, b.c12, 1e-8);
        EXPECT_NEAR(a.c13, b.c13, 1e-8);
        EXPECT_NEAR(a.c23, b.c23, 1e-8);
        EXPECT_NEAR(a.c1_23, b.c1_23, 1e-8);
        EXPECT_NEAR(a.c2_13, b.c2_13, 1e-8);
        EXPECT_NEAR(a.c3_12, b.c3_12, 1e-8);
        EXPECT_NEAR(a.tau, b.tau, 1e-8);
    }
    for (int t = 0; t < 300; t++) {
        PureState s = sample_haar_state(4, rng);
        ComplexMatrix u = kron(sample_haar_unitary2(rng), sample_haar_unitary2(rng));
        EXPECT_NEAR(concurrence_pure2(s), concurrence_pure2(apply(u, s)), 1e-8);
    }
}

TEST(Property, MonogamyAndRanges) {
    RngStream rng(26, 0);
    for (int t = 0; t < 500; t++) {
        EntanglementReport r = entanglement_report(sample_haar_state(8, rng));
        for (double c : {r.c12, r.c13, r.c23, r.c1_23, r.c2_13, r.c3_12, r.tau}) {
            EXPECT_GE(c, 0);
            EXPECT_LE(c, 1);
        }
        EXPECT_GE(r.c2_13 * r.c2_13 + 1e-12, r.c12 * r.c12 + r.c23 * r.c23);
    }
}

TEST(Property, UnclampedTangleOnlyRoundoffNegative) {
    RngStream rng(27, 0);
    for (int t = 0; t < 300; t++) {
        double tau = three_tangle(sample_haar_state(8, rng), {.clamp = false});
        EXPECT_GT(tau, -kTangleClampWindow);
    }
}

}  // namespace
}  // namespace rspin

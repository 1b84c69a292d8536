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

#ifndef RSPIN_TESTS_TEST_UTIL_H
#define RSPIN_TESTS_TEST_UTIL_H

#include <array>
#include <cmath>
#include <filesystem>
#include <string>

#include "rspin/linalg.h"
#include "rspin/rmt.h"

namespace rspin::testing {

inline PureState bell_phi_plus() {
    const double r = 1 / std::sqrt(2.0);
    return PureState({r, 0, 0, r});
}

inline PureState ghz() {
    const double r = 1 / std::sqrt(2.0);
    return PureState({r, 0, 0, 0, 0, 0, 0, r});
}

inline PureState w_state() {
    const double r = 1 / std::sqrt(3.0);
    return PureState({0, r, r, 0, r, 0, 0, 0});
}

/// New qubit q takes the role of old qubit perm[q] (0-based).
inline PureState permute_qubits(const PureState &s, const std::array<int, 3> &perm) {
    std::array<Complex, 8> out{};
    for (int i = 0; i < 8; i++) {
        int j = 0;
        for (int q = 0; q < 3; q++) {
            j |= ((i >> (2 - q)) & 1) << (2 - perm[q]);
        }
        out[i] = s[j];
    }
    return PureState(std::span<const Complex>(out));
}

inline ComplexMatrix random_local_unitary3(RngStream &rng) {
    return kron(sample_haar_unitary2(rng), kron(sample_haar_unitary2(rng), sample_haar_unitary2(rng)));
}

/// Fresh path under the system temp directory.
inline std::filesystem::path temp_path(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / "rspin_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace rspin::testing

#endif

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

#ifndef RSPIN_RMT_H
#define RSPIN_RMT_H

#include <array>
#include <cstdint>

#include "rspin/linalg.h"

namespace rspin {

/// A reproducible random stream.
///
/// The generator is xoshiro256** (Blackman & Vigna), seeded by running
/// SplitMix64 over a 64-bit key mixed from (master_seed, stream_index). Normal
/// variates come from the Box-Muller transform and are produced in pairs; the
/// second of each pair is cached. Every step of this pipeline is frozen: changing
/// it changes every published CSV.
class RngStream {
   public:
    RngStream(uint64_t master_seed, uint64_t stream_index);

    uint64_t master_seed() const { return master_seed_; }
    uint64_t stream_index() const { return stream_index_; }

    uint64_t next_u64();
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    double normal();
    /// Real and imaginary parts independent N(0, 1/2), so E|z|^2 = 1.
    Complex complex_normal();

   private:
    uint64_t master_seed_;
    uint64_t stream_index_;
    std::array<uint64_t, 4> s_{};
    double cached_normal_ = 0;
    bool has_cached_normal_ = false;
};

/// Stream for one Monte Carlo sample. Distinct indices give independent streams.
RngStream derive_stream(uint64_t master_seed, uint64_t sample_index);

/// Dimension and variance parameter of a GUE draw.
struct GueSpec {
    int dim;
    /// E|H_ij|^2 for every entry, diagonal included.
    double sigma;
};

/// Draws a GUE matrix with E[H_ij] = 0 and E|H_ij|^2 = sigma for all i, j.
///
/// The upper triangle is sampled (diagonal real N(0, sigma), off-diagonal real
/// and imaginary parts N(0, sigma/2)) and mirrored, so the result is exactly
/// Hermitian. The density is proportional to exp(-Tr(H^2) / (2 sigma)).
HermitianMatrix sample_gue(const GueSpec &spec, RngStream &rng);

/// Uniformly distributed unit vector in C^dim (normalized complex Gaussians).
PureState sample_haar_state(int dim, RngStream &rng);

/// Haar-distributed 2x2 unitary, used for local-unitary invariance checks.
ComplexMatrix sample_haar_unitary2(RngStream &rng);

}  // namespace rspin

#endif

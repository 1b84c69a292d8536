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

#include "rspin/rmt.h"

#include <cmath>
#include <numbers>

namespace rspin {

namespace {

uint64_t splitmix64(uint64_t &state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

uint64_t rotl(uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

RngStream::RngStream(uint64_t master_seed, uint64_t stream_index)
    : master_seed_(master_seed), stream_index_(stream_index) {
    uint64_t a = master_seed;
    uint64_t b = stream_index ^ 0x6A09E667F3BCC909ULL;
    uint64_t key = splitmix64(a) ^ rotl(splitmix64(b), 17);
    for (auto &w : s_) {
        w = splitmix64(key);
    }
}

uint64_t RngStream::next_u64() {
    uint64_t result = rotl(s_[1] * 5, 7) * 9;
    uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    cached_normal_ = r * std::sin(angle);
    has_cached_normal_ = true;
    return r * std::cos(angle);
}

Complex RngStream::complex_normal() {
    double re = normal();
    double im = normal();
    return Complex(re, im) * std::numbers::sqrt2 * 0.5;
}

RngStream derive_stream(uint64_t master_seed, uint64_t sample_index) {
    return RngStream(master_seed, sample_index);
}

HermitianMatrix sample_gue(const GueSpec &spec, RngStream &rng) {
    if (!(spec.sigma > 0) || !std::isfinite(spec.sigma)) {
        throw std::invalid_argument("GUE variance parameter must be positive and finite");
    }
    ComplexMatrix m(spec.dim);
    double sd = std::sqrt(spec.sigma);
    for (int r = 0; r < spec.dim; r++) {
        m(r, r) = sd * rng.normal();
        for (int c = r + 1; c < spec.dim; c++) {
            Complex z = sd * rng.complex_normal();
            m(r, c) = z;
            m(c, r) = std::conj(z);
        }
    }
    return HermitianMatrix(m);
}

PureState sample_haar_state(int dim, RngStream &rng) {
    std::array<Complex, kMaxDim> amps{};
    for (int i = 0; i < dim; i++) {
        amps[i] = rng.complex_normal();
    }
    return PureState::normalized(std::span<const Complex>(amps.data(), dim));
}

ComplexMatrix sample_haar_unitary2(RngStream &rng) {
    // First column uniform on the sphere; second column its orthogonal
    // complement times a uniform phase.
    PureState col = sample_haar_state(2, rng);
    double phi = 2 * std::numbers::pi * rng.uniform();
    Complex ph = std::polar(1.0, phi);
    ComplexMatrix u(2);
    u(0, 0) = col[0];
    u(1, 0) = col[1];
    u(0, 1) = -std::conj(col[1]) * ph;
    u(1, 1) = std::conj(col[0]) * ph;
    return u;
}

}  // namespace rspin

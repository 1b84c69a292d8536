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

#ifndef RSPIN_MONTECARLO_H
#define RSPIN_MONTECARLO_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rspin/model.h"
#include "rspin/nearest_w.h"

namespace rspin {

enum class Quantity {
    Concurrence,
    Tangle,
    TotalConcurrence,
    C12,
    C13,
    C23,
    C1_23,
    C2_13,
    C3_12,
    NearestWOverlap,
};

/// concurrence, tangle, total_concurrence, c12, c13, c23, c1_23, c2_13, c3_12,
/// nearest_w_overlap.
std::string_view to_string(Quantity q);
std::optional<Quantity> parse_quantity(std::string_view text);

/// Two-qubit kinds admit only Concurrence; three-qubit kinds admit the rest.
bool quantity_supported(InteractionKind kind, Quantity q);

/// Running mean and sum of squared deviations (Welford), mergeable with Chan's
/// pairwise update.
class Accumulator {
   public:
    void add(double x);
    void merge(const Accumulator &other);

    int64_t count() const { return count_; }
    double mean() const { return mean_; }
    double m2() const { return m2_; }
    /// Population standard deviation sqrt(<x^2> - <x>^2).
    double std_dev() const;
    /// std / sqrt(count).
    double stderr_of_mean() const;

   private:
    int64_t count_ = 0;
    double mean_ = 0;
    double m2_ = 0;
};

Accumulator merge(Accumulator a, const Accumulator &b);

struct SweepConfig {
    InteractionKind kind = InteractionKind::TwoQubitJoint;
    /// Non-negative; sigma = 0 gives the deterministic Hamiltonian.
    std::vector<double> sigma_grid;
    int64_t n_samples = 0;
    uint64_t master_seed = 0;
    std::vector<Quantity> quantities;
    int worker_count_hint = 1;
    FactorSampling factor_sampling = FactorSampling::Shared;
    NearestWConfig nearest_w;
    /// Writes one line per finished grid point to stderr.
    bool progress = false;
};

struct SweepRow {
    /// Interaction kind vocabulary, or "haar" for Haar baselines.
    std::string kind;
    std::string quantity;
    double sigma = 0;
    /// Samples that entered the statistics.
    int64_t n_samples = 0;
    double mean = 0;
    double std_dev = 0;
    double std_error = 0;
    uint64_t master_seed = 0;
    int64_t degenerate_count = 0;
    int64_t nonconverged_count = 0;

    friend bool operator==(const SweepRow &, const SweepRow &) = default;
};

struct SweepResult {
    std::vector<SweepRow> rows;

    /// First row matching (quantity, sigma); throws if absent.
    const SweepRow &at(std::string_view quantity, double sigma) const;

    friend bool operator==(const SweepResult &, const SweepResult &) = default;
};

/// Raised when excluded samples exceed kMaxExcludedFraction at a grid point.
class SweepAborted : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kMaxExcludedFraction = 1e-3;

/// Stream index of sample k at grid point i: i * 2^32 + k.
uint64_t sample_stream_index(uint64_t sigma_index, uint64_t sample_index);

/// Rejects empty grids, negative sigma, n_samples outside [1, 2^32), and
/// quantities the kind does not support.
void validate(const SweepConfig &config);

/// Rows are ordered by grid point, then by the order of config.quantities.
/// The output depends only on the config, never on worker_count_hint.
SweepResult run_sweep(const SweepConfig &config);

/// Haar baselines: concurrence for 2 qubits; tangle and total_concurrence for
/// 3 qubits. Rows carry kind "haar" and sigma = +inf.
SweepResult haar_reference(int n_qubits, int64_t n_samples, uint64_t master_seed, int worker_count_hint = 1);

struct TotalConcurrenceExtremes {
    double max = 0;
    /// Samples with C_t > 4/3 + 1e-9.
    int64_t above_four_thirds = 0;
    /// Largest C12^2 + C13^2 + C23^2.
    double max_sum_of_squares = 0;
};

/// Scans the same Haar states as haar_reference(3, n_samples, master_seed).
TotalConcurrenceExtremes haar_total_concurrence_extremes(int64_t n_samples, uint64_t master_seed);

struct NearestWExperimentConfig {
    InteractionKind kind = InteractionKind::PairwiseC;
    double sigma = 0.5;
    int64_t n_samples = 0;
    uint64_t master_seed = 0;
    int worker_count_hint = 1;
    NearestWConfig nearest_w;
    bool progress = false;
};

struct HistogramBin {
    double low;
    double high;
    int64_t count;

    friend bool operator==(const HistogramBin &, const HistogramBin &) = default;
};

struct NearestWSummary {
    std::string kind;
    double sigma = 0;
    int64_t n_samples = 0;
    uint64_t master_seed = 0;
    /// Converged samples with p > 0.98, over converged samples.
    double frac_overlap_above = 0;
    /// Converged samples whose phi_n has tau < min(C12^2, C13^2, C23^2).
    double frac_tau_below_min_two_tangle = 0;
    /// The same test applied to the ground state itself.
    double frac_ground_tau_below_min_two_tangle = 0;
    double mean_overlap = 0;
    int64_t nonconverged_count = 0;
    int64_t degenerate_count = 0;
};

struct NearestWExperimentResult {
    /// Underflow bin [0, 0.9) first, then 50 uniform bins over [0.9, 1.0].
    std::vector<HistogramBin> histogram;
    NearestWSummary summary;
};

inline constexpr double kOverlapThreshold = 0.98;

/// Requires a three-qubit kind, sigma > 0 and n_samples >= 1.
NearestWExperimentResult run_nearest_w_experiment(const NearestWExperimentConfig &config);

}  // namespace rspin

#endif

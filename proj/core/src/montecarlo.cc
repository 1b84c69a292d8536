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

#include "rspin/montecarlo.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iostream>
#include <limits>
#include <mutex>
#include <thread>

#include "rspin/entanglement.h"
#include "rspin/linalg.h"
#include "rspin/rmt.h"

namespace rspin {

namespace {

constexpr std::array<Quantity, 10> kAllQuantities = {
    Quantity::Concurrence, Quantity::Tangle, Quantity::TotalConcurrence, Quantity::C12,   Quantity::C13,
    Quantity::C23,         Quantity::C1_23,  Quantity::C2_13,            Quantity::C3_12, Quantity::NearestWOverlap,
};

// Samples per work unit. Fixed so that the reduction tree does not depend on
// the number of workers.
constexpr int64_t kChunkSize = 256;

// Runs fn(begin, end) over [0, n) in kChunkSize pieces and returns the partial
// results in chunk order.
template <class Partial, class Fn>
std::vector<Partial> run_chunks(int64_t n, int workers, Fn fn) {
    int64_t n_chunks = (n + kChunkSize - 1) / kChunkSize;
    std::vector<Partial> parts(static_cast<size_t>(n_chunks));
    std::atomic<int64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&]() {
        while (true) {
            int64_t c = next.fetch_add(1);
            if (c >= n_chunks) {
                return;
            }
            try {
                int64_t begin = c * kChunkSize;
                parts[static_cast<size_t>(c)] = fn(begin, std::min(n, begin + kChunkSize));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next.store(n_chunks);
                return;
            }
        }
    };
    int n_threads = static_cast<int>(std::clamp<int64_t>(workers, 1, std::max<int64_t>(n_chunks, 1)));
    if (n_threads == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < n_threads; t++) {
            pool.emplace_back(work);
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return parts;
}

double quantity_value(Quantity q, const EntanglementReport &r) {
    switch (q) {
        case Quantity::Tangle:
            return r.tau;
        case Quantity::TotalConcurrence:
            return r.c_total;
        case Quantity::C12:
            return r.c12;
        case Quantity::C13:
            return r.c13;
        case Quantity::C23:
            return r.c23;
        case Quantity::C1_23:
            return r.c1_23;
        case Quantity::C2_13:
            return r.c2_13;
        case Quantity::C3_12:
            return r.c3_12;
        default:
            throw std::logic_error("quantity is not part of the entanglement report");
    }
}

struct PointPartial {
    std::vector<Accumulator> acc;
    int64_t degenerate = 0;
    int64_t eig_failed = 0;
    int64_t optimizer_failed = 0;
};

}  // namespace

std::string_view to_string(Quantity q) {
    switch (q) {
        case Quantity::Concurrence:
            return "concurrence";
        case Quantity::Tangle:
            return "tangle";
        case Quantity::TotalConcurrence:
            return "total_concurrence";
        case Quantity::C12:
            return "c12";
        case Quantity::C13:
            return "c13";
        case Quantity::C23:
            return "c23";
        case Quantity::C1_23:
            return "c1_23";
        case Quantity::C2_13:
            return "c2_13";
        case Quantity::C3_12:
            return "c3_12";
        case Quantity::NearestWOverlap:
            return "nearest_w_overlap";
    }
    return "?";
}

std::optional<Quantity> parse_quantity(std::string_view text) {
    for (auto q : kAllQuantities) {
        if (to_string(q) == text) {
            return q;
        }
    }
    return std::nullopt;
}

bool quantity_supported(InteractionKind kind, Quantity q) {
    return (n_qubits(kind) == 2) == (q == Quantity::Concurrence);
}

void Accumulator::add(double x) {
    count_++;
    double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
}

void Accumulator::merge(const Accumulator &other) {
    if (other.count_ == 0) {
        return;
    }
    if (count_ == 0) {
        *this = other;
        return;
    }
    double na = static_cast<double>(count_);
    double nb = static_cast<double>(other.count_);
    double n = na + nb;
    double delta = other.mean_ - mean_;
    mean_ += delta * nb / n;
    m2_ += other.m2_ + delta * delta * na * nb / n;
    count_ += other.count_;
}

double Accumulator::std_dev() const {
    if (count_ == 0) {
        return 0;
    }
    return std::sqrt(std::max(m2_, 0.0) / static_cast<double>(count_));
}

double Accumulator::stderr_of_mean() const {
    if (count_ == 0) {
        return 0;
    }
    return std_dev() / std::sqrt(static_cast<double>(count_));
}

Accumulator merge(Accumulator a, const Accumulator &b) {
    a.merge(b);
    return a;
}

const SweepRow &SweepResult::at(std::string_view quantity, double sigma) const {
    for (const auto &r : rows) {
        if (r.quantity == quantity && r.sigma == sigma) {
            return r;
        }
    }
    throw std::out_of_range("no row for quantity " + std::string(quantity) + " at sigma " + std::to_string(sigma));
}

uint64_t sample_stream_index(uint64_t sigma_index, uint64_t sample_index) {
    return (sigma_index << 32) | sample_index;
}

void validate(const SweepConfig &config) {
    if (config.sigma_grid.empty()) {
        throw std::invalid_argument("sigma grid is empty");
    }
    for (double s : config.sigma_grid) {
        if (!(s >= 0) || !std::isfinite(s)) {
            throw std::invalid_argument("sigma values must be finite and non-negative");
        }
    }
    if (config.n_samples < 1 || config.n_samples >= (int64_t{1} << 32)) {
        throw std::invalid_argument("sample count must be in [1, 2^32)");
    }
    if (config.quantities.empty()) {
        throw std::invalid_argument("no quantities requested");
    }
    for (auto q : config.quantities) {
        if (!quantity_supported(config.kind, q)) {
            throw std::invalid_argument("quantity " + std::string(to_string(q)) + " is not defined for kind " +
                                        std::string(to_string(config.kind)));
        }
    }
}

SweepResult run_sweep(const SweepConfig &config) {
    validate(config);
    const size_t nq = config.quantities.size();
    bool need_report = false;
    bool need_overlap = false;
    for (auto q : config.quantities) {
        need_report |= q != Quantity::Concurrence && q != Quantity::NearestWOverlap;
        need_overlap |= q == Quantity::NearestWOverlap;
    }

    SweepResult result;
    for (size_t si = 0; si < config.sigma_grid.size(); si++) {
        const ModelSpec spec{config.kind, config.sigma_grid[si], config.factor_sampling};
        auto parts = run_chunks<PointPartial>(
            config.n_samples, config.worker_count_hint, [&](int64_t begin, int64_t end) {
                PointPartial part;
                part.acc.resize(nq);
                for (int64_t k = begin; k < end; k++) {
                    RngStream rng = derive_stream(config.master_seed, sample_stream_index(si, k));
                    HermitianMatrix h = build_hamiltonian(spec, rng);
                    std::optional<GroundState> gs;
                    try {
                        gs = ground_state(h);
                    } catch (const ConvergenceError &) {
                        part.eig_failed++;
                        continue;
                    }
                    if (gs->degenerate) {
                        part.degenerate++;
                        continue;
                    }
                    EntanglementReport report;
                    if (need_report) {
                        report = entanglement_report(gs->state);
                    }
                    std::optional<NearestWResult> nw;
                    if (need_overlap) {
                        nw = nearest_zero_tangle(gs->state, config.nearest_w, rng);
                        if (!nw->converged) {
                            part.optimizer_failed++;
                        }
                    }
                    for (size_t qi = 0; qi < nq; qi++) {
                        Quantity q = config.quantities[qi];
                        if (q == Quantity::Concurrence) {
                            part.acc[qi].add(concurrence_pure2(gs->state));
                        } else if (q == Quantity::NearestWOverlap) {
                            if (nw->converged) {
                                part.acc[qi].add(nw->overlap);
                            }
                        } else {
                            part.acc[qi].add(quantity_value(q, report));
                        }
                    }
                }
                return part;
            });

        PointPartial total;
        total.acc.resize(nq);
        for (const auto &p : parts) {
            for (size_t qi = 0; qi < nq; qi++) {
                total.acc[qi].merge(p.acc[qi]);
            }
            total.degenerate += p.degenerate;
            total.eig_failed += p.eig_failed;
            total.optimizer_failed += p.optimizer_failed;
        }

        for (size_t qi = 0; qi < nq; qi++) {
            Quantity q = config.quantities[qi];
            int64_t nonconverged = total.eig_failed + (q == Quantity::NearestWOverlap ? total.optimizer_failed : 0);
            int64_t excluded = nonconverged + total.degenerate;
            if (static_cast<double>(excluded) > kMaxExcludedFraction * static_cast<double>(config.n_samples)) {
                throw SweepAborted("excluded " + std::to_string(excluded) + " of " +
                                   std::to_string(config.n_samples) + " samples for " + std::string(to_string(q)) +
                                   " at sigma " + std::to_string(spec.sigma));
            }
            const Accumulator &a = total.acc[qi];
            result.rows.push_back(SweepRow{
                .kind = std::string(to_string(config.kind)),
                .quantity = std::string(to_string(q)),
                .sigma = spec.sigma,
                .n_samples = a.count(),
                .mean = a.mean(),
                .std_dev = a.std_dev(),
                .std_error = a.stderr_of_mean(),
                .master_seed = config.master_seed,
                .degenerate_count = total.degenerate,
                .nonconverged_count = nonconverged,
            });
        }
        if (config.progress) {
            std::cerr << "[" << to_string(config.kind) << "] sigma " << spec.sigma << " (" << (si + 1) << "/"
                      << config.sigma_grid.size() << ") done\n";
        }
    }
    return result;
}

SweepResult haar_reference(int n_qubits, int64_t n_samples, uint64_t master_seed, int worker_count_hint) {
    if (n_qubits != 2 && n_qubits != 3) {
        throw std::invalid_argument("Haar reference supports 2 or 3 qubits");
    }
    if (n_samples < 1) {
        throw std::invalid_argument("sample count must be positive");
    }
    const int dim = 1 << n_qubits;
    const size_t nq = n_qubits == 2 ? 1 : 2;
    auto parts = run_chunks<std::vector<Accumulator>>(n_samples, worker_count_hint, [&](int64_t begin, int64_t end) {
        std::vector<Accumulator> acc(nq);
        for (int64_t k = begin; k < end; k++) {
            RngStream rng = derive_stream(master_seed, static_cast<uint64_t>(k));
            PureState s = sample_haar_state(dim, rng);
            if (n_qubits == 2) {
                acc[0].add(concurrence_pure2(s));
            } else {
                EntanglementReport r = entanglement_report(s);
                acc[0].add(r.tau);
                acc[1].add(r.c_total);
            }
        }
        return acc;
    });
    std::vector<Accumulator> total(nq);
    for (const auto &p : parts) {
        for (size_t i = 0; i < nq; i++) {
            total[i].merge(p[i]);
        }
    }
    std::vector<Quantity> qs = n_qubits == 2 ? std::vector<Quantity>{Quantity::Concurrence}
                                             : std::vector<Quantity>{Quantity::Tangle, Quantity::TotalConcurrence};
    SweepResult result;
    for (size_t i = 0; i < nq; i++) {
        result.rows.push_back(SweepRow{
            .kind = "haar",
            .quantity = std::string(to_string(qs[i])),
            .sigma = std::numeric_limits<double>::infinity(),
            .n_samples = total[i].count(),
            .mean = total[i].mean(),
            .std_dev = total[i].std_dev(),
            .std_error = total[i].stderr_of_mean(),
            .master_seed = master_seed,
            .degenerate_count = 0,
            .nonconverged_count = 0,
        });
    }
    return result;
}

TotalConcurrenceExtremes haar_total_concurrence_extremes(int64_t n_samples, uint64_t master_seed) {
    TotalConcurrenceExtremes out;
    for (int64_t k = 0; k < n_samples; k++) {
        RngStream rng = derive_stream(master_seed, static_cast<uint64_t>(k));
        PureState s = sample_haar_state(8, rng);
        double c12 = pair_concurrence(s, 1, 2);
        double c13 = pair_concurrence(s, 1, 3);
        double c23 = pair_concurrence(s, 2, 3);
        double ct = c12 + c13 + c23;
        out.max = std::max(out.max, ct);
        out.max_sum_of_squares = std::max(out.max_sum_of_squares, c12 * c12 + c13 * c13 + c23 * c23);
        if (ct > 4.0 / 3.0 + 1e-9) {
            out.above_four_thirds++;
        }
    }
    return out;
}

namespace {

constexpr int kHistogramBins = 50;
constexpr double kHistogramLow = 0.9;
constexpr double kHistogramHigh = 1.0;

struct NearestWPartial {
    std::array<int64_t, kHistogramBins + 1> bins{};
    Accumulator overlap;
    int64_t above = 0;
    int64_t tau_below = 0;
    int64_t ground_tau_below = 0;
    int64_t nonconverged = 0;
    int64_t degenerate = 0;
};

bool tau_below_min_two_tangle(const EntanglementReport &r) {
    double m = std::min({r.c12 * r.c12, r.c13 * r.c13, r.c23 * r.c23});
    return r.tau < m;
}

}  // namespace

NearestWExperimentResult run_nearest_w_experiment(const NearestWExperimentConfig &config) {
    if (n_qubits(config.kind) != 3) {
        throw std::invalid_argument("nearest-W experiment requires a three-qubit kind");
    }
    if (!(config.sigma > 0) || !std::isfinite(config.sigma)) {
        throw std::invalid_argument("sigma must be positive");
    }
    if (config.n_samples < 1 || config.n_samples >= (int64_t{1} << 32)) {
        throw std::invalid_argument("sample count must be in [1, 2^32)");
    }
    const ModelSpec spec{config.kind, config.sigma};
    std::atomic<int64_t> done{0};
    auto parts = run_chunks<NearestWPartial>(
        config.n_samples, config.worker_count_hint, [&](int64_t begin, int64_t end) {
            NearestWPartial part;
            for (int64_t k = begin; k < end; k++) {
                RngStream rng = derive_stream(config.master_seed, sample_stream_index(0, k));
                GroundState gs = ground_state(build_hamiltonian(spec, rng));
                if (gs.degenerate) {
                    part.degenerate++;
                    continue;
                }
                NearestWResult nw = nearest_zero_tangle(gs.state, config.nearest_w, rng);
                if (!nw.converged) {
                    part.nonconverged++;
                    continue;
                }
                double p = nw.overlap;
                part.overlap.add(p);
                if (p < kHistogramLow) {
                    part.bins[0]++;
                } else {
                    int b = static_cast<int>((p - kHistogramLow) / (kHistogramHigh - kHistogramLow) * kHistogramBins);
                    part.bins[1 + std::clamp(b, 0, kHistogramBins - 1)]++;
                }
                if (p > kOverlapThreshold) {
                    part.above++;
                }
                if (tau_below_min_two_tangle(entanglement_report(nw.phi_n))) {
                    part.tau_below++;
                }
                if (tau_below_min_two_tangle(entanglement_report(gs.state))) {
                    part.ground_tau_below++;
                }
            }
            int64_t d = done.fetch_add(end - begin) + (end - begin);
            if (config.progress) {
                std::cerr << "[nearest-w] " << d << "/" << config.n_samples << " samples\n";
            }
            return part;
        });

    NearestWPartial total;
    for (const auto &p : parts) {
        for (size_t b = 0; b < total.bins.size(); b++) {
            total.bins[b] += p.bins[b];
        }
        total.overlap.merge(p.overlap);
        total.above += p.above;
        total.tau_below += p.tau_below;
        total.ground_tau_below += p.ground_tau_below;
        total.nonconverged += p.nonconverged;
        total.degenerate += p.degenerate;
    }

    NearestWExperimentResult out;
    out.histogram.push_back(HistogramBin{0.0, kHistogramLow, total.bins[0]});
    const double width = (kHistogramHigh - kHistogramLow) / kHistogramBins;
    for (int b = 0; b < kHistogramBins; b++) {
        double lo = kHistogramLow + b * width;
        double hi = b + 1 == kHistogramBins ? kHistogramHigh : kHistogramLow + (b + 1) * width;
        out.histogram.push_back(HistogramBin{lo, hi, total.bins[1 + b]});
    }
    double n_conv = static_cast<double>(total.overlap.count());
    auto frac = [&](int64_t k) { return n_conv > 0 ? static_cast<double>(k) / n_conv : 0.0; };
    out.summary = NearestWSummary{
        .kind = std::string(to_string(config.kind)),
        .sigma = config.sigma,
        .n_samples = config.n_samples,
        .master_seed = config.master_seed,
        .frac_overlap_above = frac(total.above),
        .frac_tau_below_min_two_tangle = frac(total.tau_below),
        .frac_ground_tau_below_min_two_tangle = frac(total.ground_tau_below),
        .mean_overlap = total.overlap.mean(),
        .nonconverged_count = total.nonconverged,
        .degenerate_count = total.degenerate,
    };
    return out;
}

}  // namespace rspin

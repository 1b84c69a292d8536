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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rspin/csv.h"
#include "rspin/rmt.h"

namespace rspin {
namespace {

TEST(Accumulator, MergeWithEmpty) {
    Accumulator a;
    a.add(1);
    a.add(4);
    Accumulator m = merge(a, Accumulator{});
    EXPECT_EQ(m.count(), 2);
    EXPECT_EQ(m.mean(), a.mean());
    EXPECT_EQ(m.m2(), a.m2());
    Accumulator e = merge(Accumulator{}, a);
    EXPECT_EQ(e.mean(), a.mean());
}

TEST(Accumulator, TwoPointMerge) {
    Accumulator x;
    Accumulator y;
    x.add(3);
    y.add(8);
    Accumulator m = merge(x, y);
    EXPECT_DOUBLE_EQ(m.mean(), 5.5);
    EXPECT_DOUBLE_EQ(m.m2(), 12.5);
    EXPECT_DOUBLE_EQ(m.std_dev(), 2.5);
    EXPECT_DOUBLE_EQ(m.stderr_of_mean(), 2.5 / std::sqrt(2.0));
}

TEST(Accumulator, SplitMergeMatchesSequential) {
    RngStream rng(1, 0);
    std::vector<double> xs(100000);
    for (auto &x : xs) {
        x = 3 + rng.normal() * 0.1;
    }
    Accumulator seq;
    Accumulator lo;
    Accumulator hi;
    for (size_t i = 0; i < xs.size(); i++) {
        seq.add(xs[i]);
        (i < 37000 ? lo : hi).add(xs[i]);
    }
    Accumulator m = merge(lo, hi);
    EXPECT_EQ(m.count(), seq.count());
    EXPECT_NEAR(m.mean() / seq.mean(), 1, 1e-12);
    EXPECT_NEAR(m.std_dev() / seq.std_dev(), 1, 1e-12);
}

TEST(Quantity, Vocabulary) {
    for (auto q : {Quantity::Concurrence, Quantity::Tangle, Quantity::TotalConcurrence, Quantity::C12, Quantity::C13,
                   Quantity::C23, Quantity::C1_23, Quantity::C2_13, Quantity::C3_12, Quantity::NearestWOverlap}) {
        EXPECT_EQ(parse_quantity(to_string(q)), q);
    }
    EXPECT_FALSE(parse_quantity("C12").has_value());
    EXPECT_TRUE(quantity_supported(InteractionKind::TwoQubitJoint, Quantity::Concurrence));
    EXPECT_FALSE(quantity_supported(InteractionKind::TwoQubitJoint, Quantity::Tangle));
    EXPECT_FALSE(quantity_supported(InteractionKind::PairwiseA, Quantity::Concurrence));
    EXPECT_TRUE(quantity_supported(InteractionKind::PairwiseA, Quantity::C13));
}

TEST(StreamIndex, Encoding) {
    EXPECT_EQ(sample_stream_index(0, 5), 5u);
    EXPECT_EQ(sample_stream_index(3, 7), (uint64_t{3} << 32) + 7);
}

SweepConfig small_config() {
    SweepConfig c;
    c.kind = InteractionKind::PairwiseB;
    c.sigma_grid = {0.05, 0.5, 5.0};
    c.n_samples = 700;
    c.master_seed = 99;
    c.quantities = {Quantity::Tangle, Quantity::C13, Quantity::C1_23};
    return c;
}

TEST(Validate, RejectsBadConfigs) {
    SweepConfig c = small_config();
    c.sigma_grid = {};
    EXPECT_THROW(validate(c), std::invalid_argument);
    c = small_config();
    c.sigma_grid = {-1};
    EXPECT_THROW(validate(c), std::invalid_argument);
    c = small_config();
    c.n_samples = 0;
    EXPECT_THROW(validate(c), std::invalid_argument);
    c = small_config();
    c.quantities = {Quantity::Concurrence};
    EXPECT_THROW(validate(c), std::invalid_argument);
    c = small_config();
    c.quantities = {};
    EXPECT_THROW(validate(c), std::invalid_argument);
    EXPECT_NO_THROW(validate(small_config()));
}

TEST(RunSweep, RowLayout) {
    SweepConfig c = small_config();
    SweepResult r = run_sweep(c);
    ASSERT_EQ(r.rows.size(), 9u);
    EXPECT_EQ(r.rows[0].quantity, "tangle");
    EXPECT_EQ(r.rows[1].quantity, "c13");
    EXPECT_EQ(r.rows[3].sigma, 0.5);
    for (const auto &row : r.rows) {
        EXPECT_EQ(row.kind, "b");
        EXPECT_EQ(row.master_seed, 99u);
        EXPECT_EQ(row.n_samples + row.degenerate_count + row.nonconverged_count, 700);
        EXPECT_GE(row.std_dev, 0);
        EXPECT_NEAR(row.std_error, row.std_dev / std::sqrt(static_cast<double>(row.n_samples)), 1e-15);
    }
}

TEST(RunSweep, ZeroSigmaIsDeterministicSeparable) {
    SweepConfig c;
    c.kind = InteractionKind::TwoQubitJoint;
    c.sigma_grid = {0.0};
    c.n_samples = 100;
    c.master_seed = 1;
    c.quantities = {Quantity::Concurrence};
    SweepRow row = run_sweep(c).rows.at(0);
    EXPECT_EQ(row.mean, 0);
    EXPECT_EQ(row.std_dev, 0);
}

TEST(RunSweep, ByteIdenticalAcrossWorkerCounts) {
    SweepConfig c = small_config();
    c.n_samples = 1500;
    c.worker_count_hint = 1;
    std::string one = format_csv(run_sweep(c));
    c.worker_count_hint = 2;
    EXPECT_EQ(format_csv(run_sweep(c)), one);
    c.worker_count_hint = 8;
    EXPECT_EQ(format_csv(run_sweep(c)), one);
}

TEST(RunSweep, GridPointsAreIndependentOfEachOther) {
    // Adding a grid point after the others leaves earlier rows unchanged.
    SweepConfig c = small_config();
    SweepResult base = run_sweep(c);
    c.sigma_grid.push_back(50.0);
    SweepResult extended = run_sweep(c);
    for (size_t i = 0; i < base.rows.size(); i++) {
        EXPECT_EQ(base.rows[i], extended.rows[i]);
    }
}

TEST(RunSweep, QuantitiesComeFromTheSameGroundState) {
    // Requesting a subset gives the same statistics as the full request.
    SweepConfig c = small_config();
    SweepResult full = run_sweep(c);
    c.quantities = {Quantity::C13};
    SweepResult part = run_sweep(c);
    EXPECT_EQ(part.at("c13", 0.5), full.at("c13", 0.5));
}

TEST(RunSweep, NearestWOverlapRow) {
    SweepConfig c;
    c.kind = InteractionKind::PairwiseC;
    c.sigma_grid = {0.5};
    c.n_samples = 8;
    c.master_seed = 5;
    c.quantities = {Quantity::NearestWOverlap, Quantity::Tangle};
    SweepResult r = run_sweep(c);
    const SweepRow &row = r.at("nearest_w_overlap", 0.5);
    EXPECT_GT(row.mean, 0.9);
    EXPECT_LE(row.mean, 1);
    EXPECT_EQ(row.n_samples + row.nonconverged_count + row.degenerate_count, 8);
}

TEST(HaarReference, Rows) {
    SweepResult two = haar_reference(2, 2000, 3);
    ASSERT_EQ(two.rows.size(), 1u);
    EXPECT_EQ(two.rows[0].kind, "haar");
    EXPECT_EQ(two.rows[0].quantity, "concurrence");
    EXPECT_TRUE(std::isinf(two.rows[0].sigma));
    EXPECT_NEAR(two.rows[0].mean, 3 * std::numbers::pi / 16, 0.02);

    SweepResult three = haar_reference(3, 2000, 3, 4);
    ASSERT_EQ(three.rows.size(), 2u);
    EXPECT_EQ(three.rows[0].quantity, "tangle");
    EXPECT_EQ(three.rows[1].quantity, "total_concurrence");
    EXPECT_EQ(three, haar_reference(3, 2000, 3, 1));

    EXPECT_THROW(haar_reference(4, 10, 1), std::invalid_argument);
    EXPECT_THROW(haar_reference(2, 0, 1), std::invalid_argument);
}

TEST(HaarReference, ExtremesScanTheSameStates) {
    TotalConcurrenceExtremes e = haar_total_concurrence_extremes(500, 8);
    SweepResult r = haar_reference(3, 500, 8);
    EXPECT_GE(e.max, r.at("total_concurrence", INFINITY).mean);
    EXPECT_LE(e.max, 3);
}

TEST(NearestWExperiment, HistogramLayout) {
    NearestWExperimentConfig c;
    c.n_samples = 12;
    c.master_seed = 4;
    NearestWExperimentResult r = run_nearest_w_experiment(c);
    ASSERT_EQ(r.histogram.size(), 51u);
    EXPECT_EQ(r.histogram[0].low, 0);
    EXPECT_EQ(r.histogram[0].high, 0.9);
    EXPECT_EQ(r.histogram[1].low, 0.9);
    EXPECT_EQ(r.histogram.back().high, 1.0);
    int64_t total = 0;
    for (const auto &b : r.histogram) {
        total += b.count;
    }
    EXPECT_EQ(total + r.summary.nonconverged_count + r.summary.degenerate_count, 12);
    EXPECT_EQ(r.summary.kind, "c");
    EXPECT_GE(r.summary.frac_overlap_above, 0);
    EXPECT_LE(r.summary.frac_overlap_above, 1);
}

TEST(NearestWExperiment, Validation) {
    NearestWExperimentConfig c;
    c.n_samples = 0;
    EXPECT_THROW(run_nearest_w_experiment(c), std::invalid_argument);
    c.n_samples = 1;
    c.kind = InteractionKind::TwoQubitJoint;
    EXPECT_THROW(run_nearest_w_experiment(c), std::invalid_argument);
    c.kind = InteractionKind::PairwiseC;
    c.sigma = 0;
    EXPECT_THROW(run_nearest_w_experiment(c), std::invalid_argument);
}

}  // namespace
}  // namespace rspin

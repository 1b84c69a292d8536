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


#include "rspin/selftest.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "rspin/csv.h"
#include "rspin/entanglement.h"
#include "rspin/linalg.h"
#include "rspin/montecarlo.h"
#include "rspin/rmt.h"

namespace rspin {

namespace {

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", x);
    return buf;
}

// Applies the qubit relabeling new qubit q <- old qubit perm[q] (0-based).
PureState permute_qubits(const PureState &s, const std::array<int, 3> &perm) {
    std::array<Complex, 8> out{};
    for (int i = 0; i < 8; i++) {
        int j = 0;
        for (int q = 0; q < 3; q++) {
            int bit = (i >> (2 - q)) & 1;
            j |= bit << (2 - perm[q]);
        }
        out[i] = s[j];
    }
    return PureState(std::span<const Complex>(out));
}

CanonicalCoefficients random_canonical(RngStream &rng, bool w_class) {
    std::array<double, 5> a{};
    double norm = 0;
    for (auto &x : a) {
        x = std::abs(rng.normal());
        norm += x * x;
    }
    if (w_class) {
        norm -= a[4] * a[4];
        a[4] = 0;
    }
    norm = std::sqrt(norm);
    return CanonicalCoefficients{a[0] / norm, a[1] / norm, a[2] / norm, a[3] / norm, a[4] / norm,
                                 std::numbers::pi * rng.uniform()};
}

double max_report_diff(const EntanglementReport &a, const EntanglementReport &b) {
    return std::max({std::abs(a.c12 - b.c12), std::abs(a.c13 - b.c13), std::abs(a.c23 - b.c23),
                     std::abs(a.c1_23 - b.c1_23), std::abs(a.c2_13 - b.c2_13), std::abs(a.c3_12 - b.c3_12),
                     std::abs(a.tau - b.tau)});
}

struct Context {
    const SelftestOptions &options;
    TangleOptions tangle() const {
        TangleOptions t;
        t.clamp = !options.disable_tangle_clamp;
        return t;
    }
    RngStream stream(uint64_t check_index) const { return RngStream(options.seed, check_index << 32); }
};

CheckResult check_eig_reconstruction(const Context &ctx) {
    RngStream rng = ctx.stream(1);
    double worst = 0;
    for (int t = 0; t < 50; t++) {
        HermitianMatrix h = sample_gue({8, 1.0}, rng);
        EigenDecomposition e = hermitian_eig(h);
        worst = std::max(worst, max_abs_diff(e.reconstruct(), h.matrix()));
        ComplexMatrix gram = e.vectors().adjoint() * e.vectors();
        worst = std::max(worst, max_abs_diff(gram, ComplexMatrix::identity(8)));
    }
    return {"", worst < 1e-10, "max error " + sci(worst)};
}

CheckResult check_partial_trace(const Context &ctx) {
    RngStream rng = ctx.stream(2);
    double worst = 0;
    const std::vector<std::vector<int>> keeps = {{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}};
    for (int t = 0; t < 50; t++) {
        PureState s = sample_haar_state(8, rng);
        for (const auto &k : keeps) {
            worst = std::max(worst, std::abs(partial_trace(s, k, 3).trace() - 1));
        }
    }
    return {"", worst < 1e-12, "max |tr - 1| " + sci(worst)};
}

CheckResult check_pure_vs_mixed(const Context &ctx) {
    RngStream rng = ctx.stream(3);
    double worst = 0;
    for (int t = 0; t < 200; t++) {
        PureState s = sample_haar_state(4, rng);
        worst = std::max(worst, std::abs(concurrence_pure2(s) - concurrence_mixed(density_matrix(s))));
    }
    return {"", worst < 1e-8, "max difference " + sci(worst)};
}

CheckResult check_canonical_identity(const Context &ctx) {
    RngStream rng = ctx.stream(4);
    double worst = 0;
    for (int t = 0; t < 200; t++) {
        CanonicalCoefficients c = random_canonical(rng, false);
        double expected = std::pow(2 * c.a0 * c.a4, 2);
        worst = std::max(worst, std::abs(three_tangle(state_from_canonical(c), ctx.tangle()) - expected));
    }
    return {"", worst < 1e-8, "max |tau - (2 a0 a4)^2| " + sci(worst)};
}

CheckResult check_permutation_invariance(const Context &ctx) {
    RngStream rng = ctx.stream(5);
    const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    double worst = 0;
    for (int t = 0; t < 100; t++) {
        PureState s = sample_haar_state(8, rng);
        double base = three_tangle(s, ctx.tangle());
        for (int r = 1; r <= 3; r++) {
            TangleOptions o = ctx.tangle();
            o.reference_qubit = r;
            for (const auto &p : perms) {
                worst = std::max(worst, std::abs(three_tangle(permute_qubits(s, p), o) - base));
            }
        }
    }
    return {"", worst < 1e-8, "max deviation " + sci(worst)};
}

CheckResult check_hyperdet_oracle(const Context &ctx) {
    RngStream rng = ctx.stream(6);
    double worst = 0;
    for (int t = 0; t < 200; t++) {
        PureState s = sample_haar_state(8, rng);
        worst = std::max(worst, std::abs(three_tangle(s, ctx.tangle()) - tangle_hyperdet(s)));
    }
    return {"", worst < 1e-8, "max difference " + sci(worst)};
}

CheckResult check_local_unitary_invariance(const Context &ctx) {
    RngStream rng = ctx.stream(7);
    double worst = 0;
    for (int t = 0; t < 100; t++) {
        PureState s = sample_haar_state(8, rng);
        ComplexMatrix u =
            kron(sample_haar_unitary2(rng), kron(sample_haar_unitary2(rng), sample_haar_unitary2(rng)));
        worst = std::max(worst, max_report_diff(entanglement_report(s, ctx.tangle()),
                                                entanglement_report(apply(u, s), ctx.tangle())));
    }
    return {"", worst < 1e-8, "max deviation " + sci(worst)};
}

CheckResult check_tangle_range(const Context &ctx) {
    RngStream rng = ctx.stream(8);
    double lo = INFINITY;
    double hi = -INFINITY;
    for (int t = 0; t < 500; t++) {
        PureState s = state_from_canonical(random_canonical(rng, t % 2 == 0));
        for (int r = 1; r <= 3; r++) {
            TangleOptions o = ctx.tangle();
            o.reference_qubit = r;
            double tau = three_tangle(s, o);
            lo = std::min(lo, tau);
            hi = std::max(hi, tau);
        }
    }
    return {"", lo >= 0 && hi <= 1, "tau in [" + sci(lo) + ", " + sci(hi) + "]"};
}

CheckResult check_reference_states(const Context &ctx) {
    const double r2 = 1 / std::sqrt(2.0);
    const double r3 = 1 / std::sqrt(3.0);
    PureState ghz({r2, 0, 0, 0, 0, 0, 0, r2});
    PureState w({0, r3, r3, 0, r3, 0, 0, 0});
    EntanglementReport g = entanglement_report(ghz, ctx.tangle());
    EntanglementReport v = entanglement_report(w, ctx.tangle());
    double err = std::max({std::abs(g.tau - 1), g.c12, g.c13, g.c23, std::abs(v.tau), std::abs(v.c12 - 2.0 / 3),
                           std::abs(v.c13 - 2.0 / 3), std::abs(v.c23 - 2.0 / 3)});
    return {"", err < 1e-10, "max error " + sci(err)};
}

CheckResult check_haar_two_qubit(const Context &ctx) {
    SweepResult r = haar_reference(2, ctx.options.haar_samples, ctx.options.seed);
    const SweepRow &row = r.rows.at(0);
    double mean_ref = 3 * std::numbers::pi / 16;
    double std_ref = std::sqrt(0.4 - mean_ref * mean_ref);
    bool ok = std::abs(row.mean - mean_ref) < 0.01 && std::abs(row.std_dev - std_ref) < 0.01;
    return {"", ok, "mean " + sci(row.mean) + ", std " + sci(row.std_dev)};
}

CheckResult check_haar_three_qubit(const Context &ctx) {
    SweepResult r = haar_reference(3, ctx.options.haar_samples, ctx.options.seed);
    const SweepRow &row = r.at("tangle", INFINITY);
    return {"", std::abs(row.mean - 1.0 / 3) < 0.01, "mean " + sci(row.mean)};
}

CheckResult check_csv_round_trip(const Context &ctx) {
    SweepResult r = haar_reference(3, 64, ctx.options.seed);
    std::string text = format_csv(r);
    bool ok = parse_csv(text) == r && format_csv(parse_csv(text)) == text;
    return {"", ok, ok ? "identical" : "mismatch"};
}

CheckResult check_worker_determinism(const Context &ctx) {
    SweepConfig config;
    config.kind = InteractionKind::PairwiseC;
    config.sigma_grid = {0.1, 1.0, 10.0};
    config.n_samples = 600;
    config.master_seed = ctx.options.seed;
    config.quantities = {Quantity::Tangle, Quantity::TotalConcurrence};
    std::string reference;
    bool ok = true;
    for (int workers : {1, 2, 8}) {
        config.worker_count_hint = workers;
        std::string text = format_csv(run_sweep(config));
        if (workers == 1) {
            reference = text;
        } else {
            ok = ok && text == reference;
        }
    }
    return {"", ok, ok ? "1, 2, 8 workers identical" : "outputs differ"};
}

}  // namespace

std::vector<CheckResult> run_selftest(const SelftestOptions &options) {
    Context ctx{options};
    using Check = CheckResult (*)(const Context &);
    const std::vector<std::pair<const char *, Check>> checks = {
        {"eig_reconstruction", check_eig_reconstruction},
        {"partial_trace_unit_trace", check_partial_trace},
        {"concurrence_pure_vs_mixed", check_pure_vs_mixed},
        {"tangle_canonical_identity", check_canonical_identity},
        {"tangle_permutation_invariance", check_permutation_invariance},
        {"tangle_hyperdeterminant_oracle", check_hyperdet_oracle},
        {"local_unitary_invariance", check_local_unitary_invariance},
        {"tangle_range", check_tangle_range},
        {"ghz_and_w_reference_values", check_reference_states},
        {"haar_two_qubit_concurrence", check_haar_two_qubit},
        {"haar_three_qubit_tangle", check_haar_three_qubit},
        {"csv_round_trip", check_csv_round_trip},
        {"sweep_worker_determinism", check_worker_determinism},
    };
    std::vector<CheckResult> results;
    for (const auto &[name, check] : checks) {
        try {
            CheckResult r = check(ctx);
            r.name = name;
            results.push_back(std::move(r));
        } catch (const std::exception &e) {
            results.push_back({name, false, std::string("threw: ") + e.what()});
        }
    }
    return results;
}

}  // namespace rspin

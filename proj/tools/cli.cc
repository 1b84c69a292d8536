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


#include "cli.h"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "rspin/csv.h"
#include "rspin/montecarlo.h"
#include "rspin/selftest.h"

namespace rspin::cli {

namespace {

// Thrown for inputs that pass CLI11 parsing but are still invalid.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

double parse_double(std::string_view text) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("'" + std::string(text) + "' is not a number");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        size_t pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

std::string kind_check(const std::string &text) {
    return parse_interaction_kind(text) ? "" : "unknown kind '" + text + "'";
}

std::string grid_check(const std::string &text) {
    try {
        parse_sigma_grid(text);
        return "";
    } catch (const std::invalid_argument &e) {
        return e.what();
    }
}

const CLI::Range kAtLeastOne(int64_t{1}, std::numeric_limits<int64_t>::max(), "INT>=1");

int default_threads() {
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::filesystem::path summary_path(const std::filesystem::path &out) {
    std::filesystem::path p = out;
    p.replace_filename(out.stem().string() + "_summary" + out.extension().string());
    return p;
}

struct SweepFlags {
    std::string kind;
    std::string quantities;
    std::string sigma;
    int64_t samples = 0;
    uint64_t seed = 0;
    int threads = default_threads();
    std::string out;
    std::string factor_sampling = "shared";
    bool progress = false;
};

struct HaarFlags {
    int qubits = 0;
    int64_t samples = 50000;
    uint64_t seed = 0;
    int threads = default_threads();
    std::string out;
};

struct NearestWFlags {
    std::string kind = "c";
    double sigma = 0.5;
    int64_t samples = 10000;
    uint64_t seed = 0;
    int threads = default_threads();
    std::string out;
    bool progress = false;
};

struct SelftestFlags {
    uint64_t seed = SelftestOptions{}.seed;
    int64_t haar_samples = SelftestOptions{}.haar_samples;
    std::string fault = "none";
};

int cmd_sweep(const SweepFlags &f, std::ostream &out) {
    SweepConfig config;
    config.kind = *parse_interaction_kind(f.kind);
    config.sigma_grid = parse_sigma_grid(f.sigma);
    config.master_seed = f.seed;
    config.worker_count_hint = f.threads;
    config.progress = f.progress;
    config.factor_sampling = f.factor_sampling == "independent" ? FactorSampling::Independent : FactorSampling::Shared;
    for (auto name : split(f.quantities, ',')) {
        auto q = parse_quantity(name);
        if (!q) {
            throw UsageError("--quantity: unknown quantity '" + std::string(name) + "'");
        }
        if (!quantity_supported(config.kind, *q)) {
            throw UsageError("--quantity: " + std::string(name) + " is not defined for kind " + f.kind);
        }
        config.quantities.push_back(*q);
    }
    if (f.samples > 0) {
        config.n_samples = f.samples;
    } else {
        // Total concurrence curves use three times the usual sample count.
        bool total = std::find(config.quantities.begin(), config.quantities.end(), Quantity::TotalConcurrence) !=
                     config.quantities.end();
        config.n_samples = total ? 150000 : 50000;
    }
    SweepResult result = run_sweep(config);
    write_csv(result, f.out);
    out << "wrote " << result.rows.size() << " rows to " << f.out << "\n";
    return kExitOk;
}

int cmd_haar_ref(const HaarFlags &f, std::ostream &out) {
    SweepResult result = haar_reference(f.qubits, f.samples, f.seed, f.threads);
    write_csv(result, f.out);
    for (const auto &r : result.rows) {
        out << r.quantity << ": mean " << format_double(r.mean) << ", std " << format_double(r.std_dev) << "\n";
    }
    return kExitOk;
}

int cmd_nearest_w(const NearestWFlags &f, std::ostream &out) {
    NearestWExperimentConfig config;
    config.kind = *parse_interaction_kind(f.kind);
    if (n_qubits(config.kind) != 3) {
        throw UsageError("--kind: nearest-w requires a three-qubit kind, got " + f.kind);
    }
    config.sigma = f.sigma;
    config.n_samples = f.samples;
    config.master_seed = f.seed;
    config.worker_count_hint = f.threads;
    config.progress = f.progress;
    NearestWExperimentResult result = run_nearest_w_experiment(config);
    write_text_file(f.out, format_histogram_csv(result.histogram));
    std::string summary = format_summary_csv(result.summary);
    write_text_file(summary_path(f.out), summary);
    out << summary;
    return kExitOk;
}

int cmd_selftest(const SelftestFlags &f, std::ostream &out) {
    SelftestOptions options;
    options.seed = f.seed;
    options.haar_samples = f.haar_samples;
    options.disable_tangle_clamp = f.fault == "tau-clamp";
    bool all = true;
    for (const auto &r : run_selftest(options)) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
        all = all && r.passed;
    }
    out << (all ? "selftest passed\n" : "selftest FAILED\n");
    return all ? kExitOk : kExitRuntime;
}

}  // namespace

std::vector<double> parse_sigma_grid(std::string_view text) {
    auto parts = split(text, ':');
    if (parts.size() == 1) {
        double v = parse_double(parts[0]);
        if (!(v >= 0) || !std::isfinite(v)) {
            throw std::invalid_argument("sigma must be finite and non-negative");
        }
        return {v};
    }
    if (parts.size() != 4) {
        throw std::invalid_argument("sigma grid must look like lo:hi:log|lin:points");
    }
    double lo = parse_double(parts[0]);
    double hi = parse_double(parts[1]);
    int points = 0;
    auto [ptr, ec] = std::from_chars(parts[3].data(), parts[3].data() + parts[3].size(), points);
    if (ec != std::errc() || ptr != parts[3].data() + parts[3].size() || points < 1) {
        throw std::invalid_argument("sigma grid point count must be a positive integer");
    }
    bool log = parts[2] == "log";
    if (!log && parts[2] != "lin") {
        throw std::invalid_argument("sigma grid spacing must be log or lin");
    }
    if (!(lo >= 0) || !std::isfinite(hi) || hi < lo) {
        throw std::invalid_argument("sigma grid needs 0 <= lo <= hi < inf");
    }
    if (log && lo <= 0) {
        throw std::invalid_argument("log sigma grid needs lo > 0");
    }
    if (points == 1) {
        if (lo != hi) {
            throw std::invalid_argument("a one-point sigma grid needs lo == hi");
        }
        return {lo};
    }
    std::vector<double> grid(static_cast<size_t>(points));
    for (int i = 0; i < points; i++) {
        double t = static_cast<double>(i) / (points - 1);
        grid[i] = log ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entanglement statistics of random-interaction qubit ground states", "rspin"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    const std::string kinds = "two-i, two-ii, I, II, III, a, b, c";

    SweepFlags sweep;
    auto *sc = app.add_subcommand("sweep", "Mean and spread of quantities across a sigma grid");
    sc->add_option("--kind", sweep.kind, "Interaction kind: " + kinds)->required()->check(kind_check);
    sc->add_option("--quantity", sweep.quantities,
                   "Comma list of: concurrence (two-qubit kinds); tangle, total_concurrence, c12, c13, c23, "
                   "c1_23, c2_13, c3_12, nearest_w_overlap (three-qubit kinds)")
        ->required();
    sc->add_option("--sigma", sweep.sigma, "Grid lo:hi:log|lin:points, or a single value")
        ->required()
        ->check(grid_check);
    sc->add_option("--samples", sweep.samples,
                   "Samples per grid point; 0 picks 150000 when total_concurrence is requested, else 50000")
        ->check(CLI::NonNegativeNumber);
    sc->add_option("--seed", sweep.seed, "Master seed (u64)")->required()->default_str("");
    sc->add_option("--threads", sweep.threads, "Worker threads (output does not depend on it)")
        ->check(kAtLeastOne);
    sc->add_option("--out", sweep.out, "Output CSV path")->required();
    sc->add_option("--factor-sampling", sweep.factor_sampling,
                   "Kinds b and c: shared draws one GUE per qubit, independent draws one per term")
        ->check(CLI::IsMember({"shared", "independent"}));
    sc->add_flag("--progress", sweep.progress, "Print one line per finished grid point to stderr");

    HaarFlags haar;
    auto *hc = app.add_subcommand("haar-ref", "Haar-random baselines");
    hc->add_option("--qubits", haar.qubits, "2 (concurrence) or 3 (tangle, total_concurrence)")
        ->required()
        ->check(CLI::IsMember({2, 3}));
    hc->add_option("--samples", haar.samples, "Haar states")->check(kAtLeastOne);
    hc->add_option("--seed", haar.seed, "Master seed (u64)")->required()->default_str("");
    hc->add_option("--threads", haar.threads, "Worker threads")->check(kAtLeastOne);
    hc->add_option("--out", haar.out, "Output CSV path")->required();

    NearestWFlags nw;
    auto *nc = app.add_subcommand("nearest-w", "Overlap with the nearest zero-tangle state");
    nc->add_option("--kind", nw.kind, "Three-qubit interaction kind: I, II, III, a, b, c")->check(kind_check);
    nc->add_option("--sigma", nw.sigma, "Interaction strength")->check(CLI::PositiveNumber);
    nc->add_option("--samples", nw.samples, "Ground states")->check(kAtLeastOne);
    nc->add_option("--seed", nw.seed, "Master seed (u64)")->required()->default_str("");
    nc->add_option("--threads", nw.threads, "Worker threads")->check(kAtLeastOne);
    nc->add_option("--out", nw.out, "Histogram CSV path; the summary goes to <stem>_summary<ext>")->required();
    nc->add_flag("--progress", nw.progress, "Print progress to stderr");

    SelftestFlags st;
    auto *tc = app.add_subcommand("selftest", "Fast invariant and baseline checks");
    tc->add_option("--seed", st.seed, "Seed for the random checks");
    tc->add_option("--haar-samples", st.haar_samples, "Samples for the Haar baseline checks")
        ->check(kAtLeastOne);
    tc->add_option("--fault", st.fault, "Fault injection: none, or tau-clamp to drop the tangle roundoff clamp")
        ->check(CLI::IsMember({"none", "tau-clamp"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*sc) {
            return cmd_sweep(sweep, out);
        }
        if (*hc) {
            return cmd_haar_ref(haar, out);
        }
        if (*nc) {
            return cmd_nearest_w(nw, out);
        }
        return cmd_selftest(st, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

}  // namespace rspin::cli

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

#include "rspin/simplex.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rspin {

SimplexResult minimize_simplex(const Objective &f, std::span<const double> x0, const SimplexOptions &options) {
    const size_t n = x0.size();
    if (n == 0) {
        throw std::invalid_argument("minimize_simplex needs at least one variable");
    }
    const double dn = static_cast<double>(n);
    const double alpha = 1.0;
    const double gamma = 1.0 + 2.0 / dn;
    const double rho = 0.75 - 0.5 / dn;
    const double shrink = 1.0 - 1.0 / dn;

    std::vector<std::vector<double>> pts(n + 1, std::vector<double>(x0.begin(), x0.end()));
    std::vector<double> vals(n + 1);
    int evals = 0;
    auto eval = [&](const std::vector<double> &x) {
        evals++;
        double v = f(x);
        return std::isnan(v) ? INFINITY : v;
    };
    for (size_t i = 1; i <= n; i++) {
        pts[i][i - 1] += options.initial_step;
    }
    for (size_t i = 0; i <= n; i++) {
        vals[i] = eval(pts[i]);
    }

    std::vector<double> sum(n, 0.0);
    auto recompute_sum = [&]() {
        std::fill(sum.begin(), sum.end(), 0.0);
        for (const auto &p : pts) {
            for (size_t k = 0; k < n; k++) {
                sum[k] += p[k];
            }
        }
    };
    auto replace_vertex = [&](size_t i, const std::vector<double> &x, double v) {
        for (size_t k = 0; k < n; k++) {
            sum[k] += x[k] - pts[i][k];
        }
        pts[i] = x;
        vals[i] = v;
    };
    recompute_sum();

    std::vector<size_t> order(n + 1);
    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    const bool check_x = std::isfinite(options.x_tolerance);
    bool converged = false;
    while (true) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return vals[a] < vals[b]; });
        size_t best = order[0];
        size_t worst = order[n];
        size_t second_worst = order[n - 1];

        double f_spread = vals[worst] - vals[best];
        double x_spread = 0;
        if (check_x && f_spread <= options.f_tolerance) {
            for (size_t i = 0; i <= n; i++) {
                for (size_t k = 0; k < n; k++) {
                    x_spread = std::max(x_spread, std::abs(pts[i][k] - pts[best][k]));
                }
            }
        }
        if (f_spread <= options.f_tolerance && x_spread <= options.x_tolerance) {
            converged = true;
            break;
        }
        if (evals >= options.max_evals) {
            break;
        }

        for (size_t k = 0; k < n; k++) {
            centroid[k] = (sum[k] - pts[worst][k]) / dn;
        }

        for (size_t k = 0; k < n; k++) {
            xr[k] = centroid[k] + alpha * (centroid[k] - pts[worst][k]);
        }
        double fr = eval(xr);
        if (fr < vals[best]) {
            for (size_t k = 0; k < n; k++) {
                xe[k] = centroid[k] + gamma * (xr[k] - centroid[k]);
            }
            double fe = eval(xe);
            if (fe < fr) {
                replace_vertex(worst, xe, fe);
            } else {
                replace_vertex(worst, xr, fr);
            }
            continue;
        }
        if (fr < vals[second_worst]) {
            replace_vertex(worst, xr, fr);
            continue;
        }
        bool outside = fr < vals[worst];
        for (size_t k = 0; k < n; k++) {
            xc[k] = outside ? centroid[k] + rho * (xr[k] - centroid[k])
                            : centroid[k] - rho * (centroid[k] - pts[worst][k]);
        }
        double fc = eval(xc);
        if (fc < (outside ? fr : vals[worst])) {
            replace_vertex(worst, xc, fc);
            continue;
        }
        for (size_t i = 0; i <= n; i++) {
            if (i == best) {
                continue;
            }
            for (size_t k = 0; k < n; k++) {
                pts[i][k] = pts[best][k] + shrink * (pts[i][k] - pts[best][k]);
            }
            vals[i] = eval(pts[i]);
        }
        recompute_sum();
    }

    size_t best = static_cast<size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
    return SimplexResult{.x = pts[best], .value = vals[best], .evals = evals, .converged = converged};
}

}  // namespace rspin

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


#ifndef RSPIN_SELFTEST_H
#define RSPIN_SELFTEST_H

#include <cstdint>
#include <string>
#include <vector>

namespace rspin {

struct SelftestOptions {
    uint64_t seed = 20260101;
    int64_t haar_samples = 10000;
    /// Fault injection: evaluate tangles without the roundoff clamp so that
    /// slightly negative values leak through. The tangle_range check is
    /// expected to fail under this setting.
    bool disable_tangle_clamp = false;
};

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

std::vector<CheckResult> run_selftest(const SelftestOptions &options = {});

}  // namespace rspin

#endif

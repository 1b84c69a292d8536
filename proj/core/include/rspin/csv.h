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

#ifndef RSPIN_CSV_H
#define RSPIN_CSV_H

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rspin/montecarlo.h"

namespace rspin {

inline constexpr std::string_view kSweepCsvHeader =
    "kind,quantity,sigma,n_samples,mean,std,stderr,master_seed,degenerate_count,nonconverged_count";
inline constexpr std::string_view kHistogramCsvHeader = "bin_low,bin_high,count";
inline constexpr std::string_view kNearestWSummaryCsvHeader =
    "kind,sigma,n_samples,master_seed,frac_overlap_above,frac_tau_below_min_two_tangle,"
    "frac_ground_tau_below_min_two_tangle,mean_overlap,nonconverged_count,degenerate_count";

/// Parse failure; line() is 1-based and counts the header.
class CsvError : public std::runtime_error {
   public:
    CsvError(size_t line, const std::string &message);
    size_t line() const { return line_; }

   private:
    size_t line_;
};

/// 17-significant-digit rendering (%.17g). Infinities are written
/// as "inf" / "-inf".
std::string format_double(double x);

std::string format_csv(const SweepResult &result);
SweepResult parse_csv(std::string_view text);
void write_csv(const SweepResult &result, const std::filesystem::path &path);
SweepResult read_csv(const std::filesystem::path &path);

std::string format_histogram_csv(const std::vector<HistogramBin> &bins);
std::vector<HistogramBin> parse_histogram_csv(std::string_view text);
std::string format_summary_csv(const NearestWSummary &summary);

/// Writes text to path, throwing std::runtime_error on I/O failure.
void write_text_file(const std::filesystem::path &path, std::string_view text);
std::string read_text_file(const std::filesystem::path &path);

}  // namespace rspin

#endif

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

#include "rspin/csv.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace rspin {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

// Splits on '\n', dropping a trailing '\r' and a final empty line.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (start < text.size()) {
        size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        out.push_back(line);
        if (nl == std::string_view::npos) {
            break;
        }
        start = nl + 1;
    }
    return out;
}

template <class T>
T parse_number(std::string_view field, size_t line, const char *column) {
    T value{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
        throw CsvError(line, "cannot parse " + std::string(column) + " from '" + std::string(field) + "'");
    }
    return value;
}

void check_header(const std::vector<std::string_view> &lines, std::string_view header) {
    if (lines.empty()) {
        throw CsvError(1, "missing header");
    }
    if (lines[0] != header) {
        throw CsvError(1, "unexpected header '" + std::string(lines[0]) + "'");
    }
}

}  // namespace

CsvError::CsvError(size_t line, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::string format_double(double x) {
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_csv(const SweepResult &result) {
    std::string out(kSweepCsvHeader);
    out += '\n';
    for (const auto &r : result.rows) {
        out += r.kind;
        out += ',';
        out += r.quantity;
        out += ',';
        out += format_double(r.sigma);
        out += ',';
        out += std::to_string(r.n_samples);
        out += ',';
        out += format_double(r.mean);
        out += ',';
        out += format_double(r.std_dev);
        out += ',';
        out += format_double(r.std_error);
        out += ',';
        out += std::to_string(r.master_seed);
        out += ',';
        out += std::to_string(r.degenerate_count);
        out += ',';
        out += std::to_string(r.nonconverged_count);
        out += '\n';
    }
    return out;
}

SweepResult parse_csv(std::string_view text) {
    auto lines = split_lines(text);
    check_header(lines, kSweepCsvHeader);
    SweepResult result;
    for (size_t i = 1; i < lines.size(); i++) {
        size_t line_no = i + 1;
        auto f = split_fields(lines[i]);
        if (f.size() != 10) {
            throw CsvError(line_no, "expected 10 columns, found " + std::to_string(f.size()));
        }
        SweepRow r;
        r.kind = std::string(f[0]);
        r.quantity = std::string(f[1]);
        r.sigma = parse_number<double>(f[2], line_no, "sigma");
        r.n_samples = parse_number<int64_t>(f[3], line_no, "n_samples");
        r.mean = parse_number<double>(f[4], line_no, "mean");
        r.std_dev = parse_number<double>(f[5], line_no, "std");
        r.std_error = parse_number<double>(f[6], line_no, "stderr");
        r.master_seed = parse_number<uint64_t>(f[7], line_no, "master_seed");
        r.degenerate_count = parse_number<int64_t>(f[8], line_no, "degenerate_count");
        r.nonconverged_count = parse_number<int64_t>(f[9], line_no, "nonconverged_count");
        result.rows.push_back(std::move(r));
    }
    return result;
}

void write_csv(const SweepResult &result, const std::filesystem::path &path) {
    write_text_file(path, format_csv(result));
}

SweepResult read_csv(const std::filesystem::path &path) {
    return parse_csv(read_text_file(path));
}

std::string format_histogram_csv(const std::vector<HistogramBin> &bins) {
    std::string out(kHistogramCsvHeader);
    out += '\n';
    for (const auto &b : bins) {
        out += format_double(b.low) + ',' + format_double(b.high) + ',' + std::to_string(b.count) + '\n';
    }
    return out;
}

std::vector<HistogramBin> parse_histogram_csv(std::string_view text) {
    auto lines = split_lines(text);
    check_header(lines, kHistogramCsvHeader);
    std::vector<HistogramBin> bins;
    for (size_t i = 1; i < lines.size(); i++) {
        auto f = split_fields(lines[i]);
        if (f.size() != 3) {
            throw CsvError(i + 1, "expected 3 columns, found " + std::to_string(f.size()));
        }
        bins.push_back(HistogramBin{parse_number<double>(f[0], i + 1, "bin_low"),
                                    parse_number<double>(f[1], i + 1, "bin_high"),
                                    parse_number<int64_t>(f[2], i + 1, "count")});
    }
    return bins;
}

std::string format_summary_csv(const NearestWSummary &s) {
    std::string out(kNearestWSummaryCsvHeader);
    out += '\n';
    out += s.kind + ',' + format_double(s.sigma) + ',' + std::to_string(s.n_samples) + ',' +
           std::to_string(s.master_seed) + ',' + format_double(s.frac_overlap_above) + ',' +
           format_double(s.frac_tau_below_min_two_tangle) + ',' +
           format_double(s.frac_ground_tau_below_min_two_tangle) + ',' + format_double(s.mean_overlap) + ',' +
           std::to_string(s.nonconverged_count) + ',' + std::to_string(s.degenerate_count) + '\n';
    return out;
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string() + " for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace rspin

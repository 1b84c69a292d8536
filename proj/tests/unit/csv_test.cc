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

#include <gtest/gtest.h>

#include <cmath>

#include "test_util.h"

namespace rspin {
namespace {

SweepResult sample_result() {
    SweepResult r;
    r.rows.push_back({"a", "c13", 0.1, 50000, 0.0012345678901234567, 0.1 / 3, 1e-300, 7, 1, 2});
    r.rows.push_back({"haar", "tangle", INFINITY, 10, 1.0 / 3, 0.25, 0.079, 18446744073709551615ull, 0, 0});
    return r;
}

TEST(Csv, HeaderExact) {
    std::string text = format_csv(SweepResult{});
    EXPECT_EQ(text, "kind,quantity,sigma,n_samples,mean,std,stderr,master_seed,degenerate_count,nonconverged_count\n");
}

TEST(Csv, RoundTripFieldByField) {
    SweepResult r = sample_result();
    auto path = testing::temp_path("round_trip.csv");
    write_csv(r, path);
    SweepResult back = read_csv(path);
    EXPECT_EQ(back, r);
}

TEST(Csv, EmptyResultRoundTrips) {
    EXPECT_TRUE(parse_csv(format_csv(SweepResult{})).rows.empty());
}

TEST(Csv, SeventeenSignificantDigits) {
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(format_double(INFINITY), "inf");
    EXPECT_EQ(format_double(2), "2");
}

TEST(Csv, WrongColumnCountNamesLine) {
    std::string text = format_csv(sample_result());
    text += "a,c13,0.1,5\n";
    try {
        parse_csv(text);
        FAIL() << "expected CsvError";
    } catch (const CsvError &e) {
        EXPECT_EQ(e.line(), 4u);
        EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
    }
}

TEST(Csv, BadNumberNamesLineAndColumn) {
    std::string text(kSweepCsvHeader);
    text += "\na,c13,0.1,abc,0,0,0,1,0,0\n";
    try {
        parse_csv(text);
        FAIL() << "expected CsvError";
    } catch (const CsvError &e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_NE(std::string(e.what()).find("n_samples"), std::string::npos);
    }
}

TEST(Csv, BadHeader) {
    EXPECT_THROW(parse_csv("kind,quantity\n"), CsvError);
    EXPECT_THROW(parse_csv(""), CsvError);
}

TEST(Csv, AcceptsCrlf) {
    std::string text = format_csv(sample_result());
    std::string crlf;
    for (char ch : text) {
        if (ch == '\n') {
            crlf += '\r';
        }
        crlf += ch;
    }
    EXPECT_EQ(parse_csv(crlf), sample_result());
}

TEST(Csv, MissingFile) {
    EXPECT_THROW(read_csv(testing::temp_path("does_not_exist.csv")), std::runtime_error);
}

TEST(HistogramCsv, RoundTrip) {
    std::vector<HistogramBin> bins = {{0, 0.9, 3}, {0.9, 0.902, 0}, {0.998, 1.0, 97}};
    std::string text = format_histogram_csv(bins);
    EXPECT_EQ(text.substr(0, text.find('\n')), "bin_low,bin_high,count");
    EXPECT_EQ(parse_histogram_csv(text), bins);
}

TEST(SummaryCsv, SingleRow) {
    NearestWSummary s{"c", 0.5, 100, 3, 0.99, 1.0, 0.98, 0.995, 0, 0};
    std::string text = format_summary_csv(s);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
    EXPECT_EQ(text.substr(0, text.find('\n')), kNearestWSummaryCsvHeader);
}

}  // namespace
}  // namespace rspin

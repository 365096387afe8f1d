// Copyright 2026 The Unsharp Authors
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


#include "unsharp/pulse.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.h"
#include "unsharp/scheme1.h"
#include "unsharp/scheme2.h"

using namespace unsharp;

namespace {

void expect_parse_error(const std::string &text, const std::string &fragment) {
    try {
        parse_program(text);
        FAIL() << "accepted: " << text;
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
}

}  // namespace

TEST(FormatReal, SeventeenDigitsRoundTrip) {
    std::mt19937_64 g(1);
    std::uniform_real_distribution<double> u(-10, 10);
    for (int k = 0; k < 1000; k++) {
        double x = u(g);
        EXPECT_EQ(std::stod(format_real(x)), x);
    }
    EXPECT_EQ(format_real(0.5), "0.5");
}

TEST(SerializeProgram, TextLayout) {
    PulseProgram p = compile_scheme1(0.5, MeasurementAxis::z());
    std::string text = serialize_program(p);
    EXPECT_EQ(text.substr(0, text.find('\n')), "1 0.5 0 0");
    EXPECT_NE(text.find("\ncarrier g-r 1.5707963267948"), std::string::npos);
    EXPECT_NE(text.find("\nrsb e-r 3.1415926535897931 4.7123889803846897\n"), std::string::npos);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
}

TEST(SerializeProgram, BitExactRoundTrip) {
    std::mt19937_64 g(2);
    std::uniform_real_distribution<double> u(0.0, 0.5);
    for (int k = 0; k < 200; k++) {
        PulseProgram p = compile_scheme1(u(g), oracle::random_axis(g));
        PulseProgram q = parse_program(serialize_program(p));
        EXPECT_TRUE(programs_identical(p, q));
        EXPECT_EQ(serialize_program(q), serialize_program(p));
    }
    for (double chi : {0.0, 1e-3, 0.1, 0.7}) {
        PulseProgram p = compile_scheme2(chi);
        EXPECT_TRUE(programs_identical(p, parse_program(serialize_program(p))));
    }
}

TEST(ProgramsIdentical, DetectsSingleBitChanges) {
    PulseProgram p = compile_scheme1(0.3, MeasurementAxis::z());
    PulseProgram q = p;
    q.pulses[0].angle = std::nextafter(q.pulses[0].angle, 10.0);
    EXPECT_FALSE(programs_identical(p, q));
    q = p;
    q.pulses.pop_back();
    EXPECT_FALSE(programs_identical(p, q));
    q = p;
    q.scheme = Scheme::kSchemeII;
    EXPECT_FALSE(programs_identical(p, q));
}

TEST(ParseProgram, ToleratesBlankTrailingLinesAndCarriageReturns) {
    PulseProgram p = parse_program("1 0.25 0 0\r\ncarrier g-r 1 0\r\n\n\n");
    EXPECT_EQ(p.pulses.size(), 1u);
    EXPECT_EQ(p.p0, 0.25);
}

TEST(ParseProgram, Errors) {
    expect_parse_error("", "missing header");
    expect_parse_error("1 0.2 0\n", "line 1");
    expect_parse_error("3 0.2 0 0\n", "scheme must be 1 or 2");
    expect_parse_error("1 0.7 0 0\n", "p0 outside");
    expect_parse_error("1 abc 0 0\n", "bad real 'abc'");
    expect_parse_error("1 0.2 4 0\n", "line 1");
    expect_parse_error("1 0.2 0 0\ncarrier g-r 1\n", "line 2");
    expect_parse_error("1 0.2 0 0\nlaser g-r 1 0\n", "unknown pulse kind 'laser'");
    expect_parse_error("1 0.2 0 0\ncarrier g-x 1 0\n", "unknown transition 'g-x'");
    expect_parse_error("1 0.2 0 0\ncarrier g-r 1 0\ncarrier g-r 7 0\n", "line 3: angle outside");
    expect_parse_error("1 0.2 0 0\ncarrier g-r nan 0\n", "bad real");
    expect_parse_error("1 0.2 0 0\ncarrier g-r 1.0x 0\n", "bad real");
}

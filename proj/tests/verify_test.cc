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


#include "unsharp/verify.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.h"
#include "unsharp/scheme1.h"
#include "unsharp/scheme2.h"

using namespace unsharp;

TEST(VerifyCompilation, Scheme1ZAxis) {
    VerificationReport r = verify_compilation(compile_scheme1(0.45, MeasurementAxis::z()),
                                              build_symmetric_povm(0.45, MeasurementAxis::z()));
    EXPECT_LT(r.max_deviation, 1e-10);
    EXPECT_EQ(r.rows.size(), 8u);
    EXPECT_FALSE(r.zero_information);
}

TEST(VerifyCompilation, Scheme1RandomAxes) {
    std::mt19937_64 g(20);
    std::uniform_real_distribution<double> u(0.0, 0.5);
    for (int k = 0; k < 50; k++) {
        double p0 = u(g);
        MeasurementAxis axis = oracle::random_axis(g);
        VerificationReport r = verify_compilation(compile_scheme1(p0, axis), build_symmetric_povm(p0, axis));
        EXPECT_LT(r.max_deviation, 1e-10);
    }
}

TEST(VerifyCompilation, ProjectiveLimitHasImpossibleBranches) {
    VerificationReport r = verify_compilation(compile_scheme1(0.0, MeasurementAxis::z()),
                                              build_symmetric_povm(0.0, MeasurementAxis::z()));
    EXPECT_LT(r.max_deviation, 1e-10);
}

TEST(VerifyCompilation, Scheme2) {
    VerificationReport r = verify_compilation(compile_scheme2(0.1), scheme2_effective_povm(0.1));
    EXPECT_LT(r.max_deviation, 1e-12);
    EXPECT_EQ(r.max_leakage, 0.0);
}

TEST(VerifyCompilation, ZeroInformationFlag) {
    VerificationReport r = verify_compilation(compile_scheme1(0.5, MeasurementAxis::z()),
                                              build_symmetric_povm(0.5, MeasurementAxis::z()));
    EXPECT_TRUE(r.zero_information);
    EXPECT_LT(r.max_deviation, 1e-10);
}

TEST(VerifyCompilation, DetectsCorruptedCarrierAngle) {
    for (size_t idx : {0u, 2u}) {
        PulseProgram p = compile_scheme1(0.45, MeasurementAxis::z());
        p.pulses[idx].angle += 0.1;
        VerificationReport r = verify_compilation(p, build_symmetric_povm(0.45, MeasurementAxis::z()));
        EXPECT_GT(r.max_deviation, 1e-3);
    }
    PulseProgram p = compile_scheme1(0.2, MeasurementAxis(1.0, 2.0));
    p.pulses.front().phase += 0.1;
    EXPECT_GT(verify_compilation(p, build_symmetric_povm(0.2, MeasurementAxis(1.0, 2.0))).max_deviation, 1e-3);
}

TEST(VerifyCompilation, WrongAbstractMeasurementIsReported) {
    VerificationReport r = verify_compilation(compile_scheme1(0.3, MeasurementAxis::z()),
                                              build_symmetric_povm(0.3, MeasurementAxis::x()));
    EXPECT_GT(r.max_deviation, 0.1);
}

TEST(MeasurementBranches, LeakageFromTruncatedSequence) {
    PulseProgram p = compile_scheme1(0.3, MeasurementAxis::z());
    p.pulses.pop_back();
    PhysicalBranches b = measurement_branches(p, QubitState::excited());
    // |r> keeps the weight p0 the missing sideband pulse would have moved.
    EXPECT_NEAR(b.leakage, 0.3, 1e-12);
}

TEST(FormatReport, ContainsSummaryLines) {
    std::string s = format_report(verify_compilation(compile_scheme1(0.5, MeasurementAxis::z()),
                                                     build_symmetric_povm(0.5, MeasurementAxis::z())));
    EXPECT_EQ(s.rfind("max_deviation=", 0), 0u);
    EXPECT_NE(s.find("zero_information=true"), std::string::npos);
    EXPECT_NE(s.find("input "), std::string::npos);
}

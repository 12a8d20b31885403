// Copyright 2026 The ccr-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "ccr/sweep.hpp"

namespace ccr {
namespace {

TEST(FormatNumber, Contract) {
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(0.25), "0.25");
    EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(format_number(1e-20), "1e-20");
}

TEST(WriteCsv, Layout) {
    std::ostringstream out;
    write_csv(out, CsvTable{{"a", "b"}, {{1.0, -0.0}, {0.5, 2.0}}});
    EXPECT_EQ(out.str(), "a,b\n1,0\n0.5,2\n");
}

TEST(Fig1, MidpointRow) {
    const CsvTable t = sweep_fig1(101);
    ASSERT_EQ(t.rows.size(), 101u);
    EXPECT_EQ(t.header, (std::vector<std::string>{"p1", "I_BZ_rho", "I_BZ_sigma", "P_l_rho", "P_l_sigma"}));
    const auto& mid = t.rows[50];
    EXPECT_DOUBLE_EQ(mid[0], 0.5);
    EXPECT_NEAR(mid[1], 0.25, 1e-12);
    EXPECT_NEAR(mid[2], 0.0, 1e-12);
    EXPECT_NEAR(mid[3], 0.125, 1e-12);
    EXPECT_NEAR(mid[4], 0.0, 1e-12);
}

TEST(Fig2, SumIsOne) {
    const CsvTable t = sweep_fig2(51);
    ASSERT_EQ(t.rows.size(), 51u * 51u);
    for (const auto& row : t.rows) EXPECT_NEAR(row[5], 1.0, 1e-9);
}

TEST(Fig3, BalancedPoint) {
    const CsvTable t = sweep_fig3(3);
    EXPECT_EQ(t.header, (std::vector<std::string>{"x", "W_l1", "P_l1", "U_c", "P_l", "S_vn", "P_vn"}));
    // x = 1/sqrt2 is not on the uniform grid; evaluate it directly.
    const DensityMatrix rho = x_family_state(1.0 / std::sqrt(2.0)).reduced(Subsystem::A);
    EXPECT_NEAR(w_l1(rho), 1.0, 1e-12);
    EXPECT_NEAR(predictability_l1(rho), 0.0, 1e-12);
    EXPECT_NEAR(total_classical_uncertainty(rho), 0.5, 1e-12);
    // Endpoints x = 0 and x = 1 are product states.
    for (const auto& row : {t.rows.front(), t.rows.back()}) {
        EXPECT_NEAR(row[1], 0.0, 1e-12);
        EXPECT_NEAR(row[2], 1.0, 1e-12);
        EXPECT_NEAR(row[3], 0.0, 1e-12);
        EXPECT_NEAR(row[4], 0.5, 1e-12);
    }
}

TEST(Detector, Columns) {
    const CsvTable t = sweep_detector(101);
    EXPECT_EQ(t.header, (std::vector<std::string>{"gamma", "U_q", "U_c", "P_l"}));
    EXPECT_NEAR(t.rows[50][1], (1 - std::sqrt(3.0) / 2) / 2, 1e-12);
}

TEST(RunSweep, DefaultsAndErrors) {
    EXPECT_EQ(run_sweep({Experiment::Fig1, 0, {}}).rows.size(), 101u);
    EXPECT_EQ(run_sweep({Experiment::Fig2, 0, {}}).rows.size(), 51u * 51u);
    EXPECT_THROW(run_sweep({Experiment::Fig1, 1, {}}), InvalidArgument);
    EXPECT_THROW(parse_experiment("fig4"), InvalidArgument);
    EXPECT_EQ(parse_experiment("detector"), Experiment::Detector);
}

TEST(RunSweep, Deterministic) {
    std::ostringstream a, b;
    write_csv(a, run_sweep({Experiment::Fig3, 21, {}}));
    write_csv(b, run_sweep({Experiment::Fig3, 21, {}}));
    EXPECT_EQ(a.str(), b.str());
}

}  // namespace
}  // namespace ccr

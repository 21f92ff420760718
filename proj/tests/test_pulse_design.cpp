// Copyright 2026 spinsim contributors
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

#include "spinsim/pulse_design.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace spinsim;

namespace {

struct PulseRow {
    const char *name;
    double duration, freq, amp1, amp2, phase_x, phase_y;
};

// Reference pulse parameters for the two-spin molecule at s = 8
// (k=1, N=1, M=4). Values are quoted at seven decimals; the X2'' cross
// amplitude follows the fixed 1:4 amplitude ratio exactly (0.0523256/4).
const PulseRow kRows[] = {
    {"X1", 8, 1.00, -0.0312500, -0.0078125, -pi / 2, 0},
    {"X2", 128, 0.25, -0.0078125, -0.0019531, -pi / 2, 0},
    {"Y1", 8, 1.00, 0.0312500, 0.0078125, 0, pi / 2},
    {"Y2", 128, 0.25, 0.0078125, 0.0019531, 0, pi / 2},
    {"X1'", 8, 1.00, 0.0559593, 0.0139898, -pi / 2, 0},
    {"X2'", 128, 0.25, 0.0445131, 0.0111283, -pi / 2, 0},
    {"Y1'", 8, 1.00, -0.0559593, -0.0139898, 0, pi / 2},
    {"X1''", 8, 1.00, 0.0872093, 0.0218023, -pi / 2, 0},
    {"X2''", 128, 0.25, 0.0523256, 0.0130814, -pi / 2, 0},
};

// Printed-precision tolerance: at least half an ulp of the seven-decimal
// quote, or 1e-6 relative for larger magnitudes.
double tol_for(double v) { return std::max(1e-6 * std::abs(v), 5.1e-8); }

} // namespace

TEST_CASE("pulse table regeneration at s = 8") {
    const ChloroformPulses book(8.0);
    for (const PulseRow &row : kRows) {
        const PulseRealization r = book.pulse(row.name);
        INFO("pulse " << row.name);
        REQUIRE(r.duration == Catch::Approx(row.duration));
        REQUIRE(r.freq == Catch::Approx(row.freq));
        REQUIRE(r.amp1 == Catch::Approx(row.amp1).margin(tol_for(row.amp1)));
        REQUIRE(r.amp2 == Catch::Approx(row.amp2).margin(tol_for(row.amp2)));
        REQUIRE(r.phase_x == Catch::Approx(row.phase_x).margin(1e-12));
        REQUIRE(r.phase_y == Catch::Approx(row.phase_y).margin(1e-12));
    }
}

TEST_CASE("durations and carriers scale with the pulse-family parameter") {
    for (double s : {8.0, 16.0, 32.0, 64.0, 256.0}) {
        const ChloroformPulses book(s);
        const auto x1 = book.pulse("X1");
        const auto x2 = book.pulse("X2");
        REQUIRE(x1.duration == Catch::Approx(s));
        REQUIRE(x2.duration == Catch::Approx(16.0 * s));
        REQUIRE(x1.freq == Catch::Approx(1.0));
        REQUIRE(x2.freq == Catch::Approx(0.25));
        // Rotation angle theta = -2 pi * amp * duration stays fixed at pi/2.
        REQUIRE(-two_pi * x1.amp1 * x1.duration == Catch::Approx(pi / 2));
        REQUIRE(-two_pi * x2.amp2 * x2.duration == Catch::Approx(pi / 2));
    }
}

TEST_CASE("bar marker flips the rotation sign") {
    const ChloroformPulses book(8.0);
    const auto plus = book.pulse("X1");
    const auto minus = book.pulse("X-1");
    REQUIRE(minus.amp1 == Catch::Approx(-plus.amp1));
    REQUIRE(minus.amp2 == Catch::Approx(-plus.amp2));
    REQUIRE(minus.duration == plus.duration);
    REQUIRE(minus.phase_x == plus.phase_x);
}

TEST_CASE("cross amplitude follows the fixed coupling ratio") {
    const ChloroformPulses book(8.0);
    for (const char *name : {"X1", "Y1", "X1'", "Y1'", "X1''"})
        REQUIRE(book.pulse(name).amp2 ==
                Catch::Approx(drive_gamma * book.pulse(name).amp1));
    for (const char *name : {"X2", "Y2", "X2'", "X2''"})
        REQUIRE(book.pulse(name).amp2 ==
                Catch::Approx(drive_gamma * book.pulse(name).amp1));
}

TEST_CASE("canonical angle windows") {
    REQUIRE(canonical_angle(0.3, false) == Catch::Approx(0.3));
    REQUIRE(canonical_angle(-0.3, false) == Catch::Approx(two_pi - 0.3));
    REQUIRE(canonical_angle(5.0 * two_pi + 0.3, false) == Catch::Approx(0.3));
    const double r = canonical_angle(7.1, true);
    REQUIRE(r < 0.0);
    REQUIRE(r >= -2.0 * two_pi);
    REQUIRE(std::fmod(r - 7.1, 2.0 * two_pi) == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("free-evolution step") {
    // tau J = -pi as t/2pi, quoted at the programmed precision.
    REQUIRE(ChloroformPulses::interaction_time() ==
            Catch::Approx(1162790.6976744186));
    REQUIRE(ChloroformPulses::interaction_duration() ==
            Catch::Approx(ChloroformPulses::interaction_time()).epsilon(1e-9));
    const auto mi = ChloroformPulses(8.0).micro_interaction();
    REQUIRE(mi.model.is_diagonal());
    REQUIRE(mi.duration_over_2pi == ChloroformPulses::interaction_duration());
}

TEST_CASE("repair angles land in the negative window") {
    for (int spin : {1, 2}) {
        for (double theta : {ChloroformPulses::angle_primed(spin),
                             ChloroformPulses::angle_double_primed(spin)}) {
            const double c = canonical_angle(theta, true);
            REQUIRE(c < 0.0);
            REQUIRE(c >= -2.0 * two_pi);
        }
    }
}

TEST_CASE("pulse microinstructions carry the molecule plus four drives") {
    const ChloroformPulses book(8.0);
    const auto mi = book.micro("Y2");
    REQUIRE(mi.duration_over_2pi == Catch::Approx(128.0));
    REQUIRE(mi.model.couplings().size() == 1);
    REQUIRE(mi.model.field(1, Axis::Z).static_part == chloroform_h1z);
    REQUIRE(mi.model.field(2, Axis::Z).static_part == chloroform_h2z);
    for (int spin : {1, 2})
        for (Axis a : {Axis::X, Axis::Y}) {
            REQUIRE(mi.model.field(spin, a).amp != 0.0);
            REQUIRE(mi.model.field(spin, a).freq == Catch::Approx(0.25));
        }
    REQUIRE(mi.model.field(1, Axis::X).phase == Catch::Approx(0.0));
    REQUIRE(mi.model.field(1, Axis::Y).phase == Catch::Approx(pi / 2));
}

TEST_CASE("sequence books have the expected shape") {
    for (int v : {1, 2, 3}) {
        const auto seq = cnot_pulse_sequence(v);
        REQUIRE(seq.size() == 7);
        REQUIRE(std::count(seq.begin(), seq.end(), "I'") == 1);
    }
    REQUIRE_THROWS_AS(cnot_pulse_sequence(4), std::domain_error);
    for (int item = 0; item < 4; ++item) {
        const auto seq = grover_pulse_sequence(item);
        REQUIRE(seq.size() == 6 + 7 + 4 + 7 + 4);
        const ChloroformPulses book(8.0);
        REQUIRE(book.expand(seq).size() == seq.size());
    }
    REQUIRE_THROWS_AS(grover_pulse_sequence(5), std::domain_error);
}

TEST_CASE("unknown pulse names are rejected") {
    const ChloroformPulses book(8.0);
    REQUIRE_THROWS_AS(book.pulse("X3"), std::domain_error);
    REQUIRE_THROWS_AS(book.pulse("X1'''"), std::domain_error);
    REQUIRE_THROWS_AS(book.pulse("X"), std::domain_error);
}

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

#include "oracle.hpp"
#include "spinsim/algorithms.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace spinsim;

namespace {

oracle::DMat program_matrix(const GateProgram &prog) {
    return oracle::matrix_of(prog.num_qubits,
                             [&](StateVector &s) { run(s, prog); });
}

} // namespace

TEST_CASE("QFT with swaps equals the DFT matrix") {
    for (int n : {1, 2, 3}) {
        GateProgram prog = qft_program(n, 1, n, true);
        const auto got = program_matrix(prog);
        const auto want = oracle::dft(std::size_t{1} << n);
        REQUIRE(oracle::max_abs_diff(got, want) < 1e-13);
    }
}

TEST_CASE("QFT on an embedded register acts as DFT x identity") {
    // 3-qubit transform on qubits 2-4 of a 5-qubit machine.
    GateProgram prog = qft_program(5, 2, 3, true);
    const auto got = program_matrix(prog);
    const auto f = oracle::dft(8);
    for (std::size_t c = 0; c < 32; ++c)
        for (std::size_t r = 0; r < 32; ++r) {
            const std::size_t rc = (c >> 1) & 7, rr = (r >> 1) & 7;
            const bool outside_same = (c & ~std::size_t{14}) == (r & ~std::size_t{14});
            const cplx want = outside_same ? f.at(rr, rc) : cplx{};
            REQUIRE(std::abs(got.at(r, c) - want) < 1e-13);
        }
}

TEST_CASE("QFT times its inverse is the identity") {
    for (bool swaps : {true, false}) {
        GateProgram fwd = qft_program(3, 1, 3, swaps);
        GateProgram inv = inverse_program(fwd);
        const auto got = oracle::matrix_of(3, [&](StateVector &s) {
            run(s, fwd);
            run(s, inv);
        });
        REQUIRE(oracle::max_abs_diff(got, oracle::DMat::identity(8)) < 1e-12);
    }
}

TEST_CASE("period-finding spectrum matches the closed form for all periods") {
    for (int M = 1; M <= 8; ++M) {
        const PeriodSpectrum spec = period_find(M);
        double total = 0.0;
        for (int q = 0; q < 8; ++q) {
            REQUIRE(spec.probabilities[q] ==
                    Catch::Approx(period_find_probability(q, M)).margin(1e-10));
            total += spec.probabilities[q];
        }
        REQUIRE(total == Catch::Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("period-finding table values for M = 1..4") {
    const double table[8][4] = {
        {1, 0.5, 0.34375, 0.25}, {0, 0.0, 0.01451, 0.00},
        {0, 0.0, 0.06250, 0.25}, {0, 0.0, 0.23549, 0.00},
        {0, 0.5, 0.03125, 0.25}, {0, 0.0, 0.23549, 0.00},
        {0, 0.0, 0.06250, 0.25}, {0, 0.0, 0.01451, 0.00}};
    for (int M = 1; M <= 4; ++M) {
        const PeriodSpectrum spec = period_find(M);
        for (int q = 0; q < 8; ++q)
            REQUIRE(spec.probabilities[q] ==
                    Catch::Approx(table[q][M - 1]).margin(1e-4));
    }
}

TEST_CASE("period-finding qubit expectations identify the period") {
    const double want[4][3] = {{0, 0, 0},
                               {0, 0, 0.5},
                               {0.5, 0.375, 0.34375},
                               {0, 0.5, 0.5}};
    for (int M = 1; M <= 4; ++M) {
        const PeriodSpectrum spec = period_find(M);
        REQUIRE(spec.qubits.size() == 3);
        for (int j = 0; j < 3; ++j)
            REQUIRE(spec.qubits[j].qz ==
                    Catch::Approx(want[M - 1][j]).margin(1e-10));
    }
}

TEST_CASE("two-qubit search lands on the marked item exactly") {
    for (int item = 0; item < 4; ++item) {
        StateVector s(2);
        run(s, grover_program(item));
        for (std::size_t i = 0; i < 4; ++i)
            REQUIRE(std::norm(s[i]) ==
                    Catch::Approx(i == std::size_t(item) ? 1.0 : 0.0)
                        .margin(1e-10));
        const auto e1 = s.expectation(1), e2 = s.expectation(2);
        REQUIRE(e1.qz == Catch::Approx(item & 1 ? 1.0 : 0.0).margin(1e-10));
        REQUIRE(e2.qz == Catch::Approx(item & 2 ? 1.0 : 0.0).margin(1e-10));
    }
}

TEST_CASE("search outputs span an orthonormal basis") {
    std::array<StateVector, 4> outs{StateVector(2), StateVector(2),
                                    StateVector(2), StateVector(2)};
    for (int item = 0; item < 4; ++item) run(outs[item], grover_program(item));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            REQUIRE(std::abs(outs[i].inner_product(outs[j]) -
                             (i == j ? 1.0 : 0.0)) < 1e-10);
}

TEST_CASE("permutation order finding reproduces the period spectrum") {
    struct Case {
        std::vector<int> perm;
        int y;
    };
    const std::vector<Case> cases = {
        {{0, 1, 2, 3}, 2},  // fixed point: M = 1
        {{1, 0, 2, 3}, 0},  // transposition: M = 2
        {{1, 2, 0, 3}, 0},  // 3-cycle: M = 3
        {{1, 2, 3, 0}, 1},  // 4-cycle: M = 4
        {{3, 2, 1, 0}, 3},  // product of transpositions: M = 2
    };
    for (const auto &c : cases) {
        const int M = permutation_cycle_length(c.perm, c.y);
        StateVector s(5);
        run(s, permutation_order_program(c.perm, c.y));
        // Register spectrum with bit-reversed readout of the swapless QFT.
        std::vector<double> p(8, 0.0);
        for (std::size_t i = 0; i < 32; ++i) {
            const std::size_t q = i & 7;
            const std::size_t qr = ((q & 1) << 2) | (q & 2) | ((q & 4) >> 2);
            p[qr] += std::norm(s[i]);
        }
        for (int q = 0; q < 8; ++q)
            REQUIRE(p[q] ==
                    Catch::Approx(period_find_probability(q, M)).margin(1e-10));
    }
}

TEST_CASE("factoring 15 recovers the period and the factors for every base") {
    for (int a : {2, 4, 7, 8, 11, 13, 14}) {
        const int M = shor15_period(a);
        // Classical oracle for the period.
        int m = a % 15, r = 1;
        while (m != 1) {
            m = (m * a) % 15;
            ++r;
        }
        REQUIRE(M == r);

        StateVector s(7);
        run(s, shor15_program(a));
        std::vector<double> p(8, 0.0);
        for (std::size_t i = 0; i < 128; ++i) {
            const std::size_t q = i & 7;
            const std::size_t qr = ((q & 1) << 2) | (q & 2) | ((q & 4) >> 2);
            p[qr] += std::norm(s[i]);
        }
        for (int q = 0; q < 8; ++q)
            REQUIRE(p[q] ==
                    Catch::Approx(period_find_probability(q, M)).margin(1e-10));

        if (a == 14) {
            // 14 = -1 mod 15: the gcd step only finds the trivial divisors
            REQUIRE_THROWS_AS(shor15_factors(a), std::domain_error);
        } else {
            const auto f = shor15_factors(a);
            REQUIRE(f.first == 3);
            REQUIRE(f.second == 5);
        }
    }
    REQUIRE_THROWS_AS(shor15_program(3), std::domain_error);
    REQUIRE_THROWS_AS(shor15_program(1), std::domain_error);
}

TEST_CASE("base 11 factors via gcd of 10 and 12 with 15") {
    // 11^2 = 121 = 1 mod 15, so the period is 2 and 11^{M/2} = 11;
    // gcd(15, 11 - 1) = 5 and gcd(15, 11 + 1) = 3.
    REQUIRE(shor15_period(11) == 2);
    REQUIRE(std::gcd(15, 10) == 5);
    REQUIRE(std::gcd(15, 12) == 3);
    const auto f = shor15_factors(11);
    REQUIRE(f == std::pair<int, int>(3, 5));
}

TEST_CASE("three-input adder on the worked examples") {
    const GateProgram adder = adder3_program();
    const auto check = [&](int r1, int r2, int r3) {
        const std::size_t idx =
            std::size_t(r1) | (std::size_t(r2) << 4) | (std::size_t(r3) << 8);
        StateVector s = StateVector::basis_state(12, idx);
        run(s, adder);
        const int want = (r1 + r2 + r3) % 16;
        const std::size_t want_idx =
            std::size_t(r1) | (std::size_t(r2) << 4) |
            (std::size_t(want) << 8);
        REQUIRE(std::norm(s[want_idx]) == Catch::Approx(1.0).margin(1e-10));
    };
    check(1, 2, 3);
    check(1, 1, 1);
    check(9, 9, 9);
    // A few random triples; the exhaustive sweep lives in the acceptance run.
    check(15, 15, 15);
    check(0, 0, 0);
    check(7, 12, 5);
    check(3, 14, 8);
}

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
#include "spinsim/eigen.hpp"
#include "spinsim/spin_model.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace spinsim;

TEST_CASE("field term evaluation") {
    FieldTerm f{0.3, 0.7, 2.0, 0.4};
    for (double t : {0.0, 0.5, 1.7, 12.9})
        REQUIRE(f.at(t) ==
                Catch::Approx(0.3 + 0.7 * std::sin(2.0 * t + 0.4)));
    REQUIRE_FALSE(f.is_static());
    REQUIRE(f.magnitude_bound() == Catch::Approx(1.0));
    REQUIRE(FieldTerm{0.3}.is_static());
}

TEST_CASE("matrix-free H application matches the dense Kronecker build") {
    for (int L = 2; L <= 5; ++L) {
        const auto model = oracle::random_model(L, 60 + L, true);
        for (double t : {0.0, 0.37, 2.9}) {
            const auto h = oracle::dense_hamiltonian(model, t);
            const auto psi =
                oracle::random_vector(std::size_t{1} << L, 70 + L);
            StateVector in(static_cast<std::size_t>(L)),
                out(static_cast<std::size_t>(L));
            in.amplitudes() = psi;
            apply_h(in, model, t, out);
            const auto want = oracle::mul_vec(h, psi);
            REQUIRE(oracle::max_abs_diff(out.amplitudes(), want) < 1e-13);
        }
    }
}

TEST_CASE("rotating drive equals the explicit sin/cos field pair") {
    SpinModel rot(2);
    rot.set_static_field(1, Axis::Z, 1.0);
    rot.set_sin_field(1, Axis::X, 0.2, 0.35, 0.6);
    rot.set_rotating_field(true);

    SpinModel expl(2);
    expl.set_static_field(1, Axis::Z, 1.0);
    for (double t : {0.0, 1.3, 8.2}) {
        const auto h = rot.field_at(1, t);
        const double arg = two_pi * 0.35 * t + 0.6;
        REQUIRE(h[0] == Catch::Approx(0.2 * std::sin(arg)).margin(1e-15));
        REQUIRE(h[1] == Catch::Approx(0.2 * std::cos(arg)).margin(1e-15));
    }
}

TEST_CASE("diagonal detection and diagonal energies") {
    SpinModel m(3);
    m.set_coupling(1, 2, Axis::Z, 0.7);
    m.set_coupling(2, 3, Axis::Z, -0.4);
    m.set_static_field(1, Axis::Z, 0.9);
    REQUIRE(m.is_diagonal());
    REQUIRE(m.is_static());

    const auto h = oracle::dense_hamiltonian(m, 0.0);
    for (std::size_t i = 0; i < 8; ++i)
        REQUIRE(m.diagonal_energy(i) ==
                Catch::Approx(h.at(i, i).real()).margin(1e-14));

    m.set_static_field(2, Axis::X, 0.1);
    REQUIRE_FALSE(m.is_diagonal());
}

TEST_CASE("norm bound dominates the spectral radius") {
    for (int L = 2; L <= 4; ++L) {
        const auto model = oracle::random_model(L, 80 + L, true);
        // Bound must hold for any time; probe several instants.
        for (double t : {0.0, 0.21, 5.3}) {
            const auto h = oracle::dense_hamiltonian(model, t);
            std::vector<double> eval;
            std::vector<cplx> vec;
            hermitian_eigen(h.a, h.n, eval, vec);
            const double radius =
                std::max(std::abs(eval.front()), std::abs(eval.back()));
            REQUIRE(model.norm_bound() >= radius - 1e-12);
        }
    }
}

TEST_CASE("two-spin NMR model") {
    const SpinModel m = build_chloroform();
    REQUIRE(m.num_spins() == 2);
    REQUIRE(m.is_diagonal());
    REQUIRE(m.couplings().size() == 1);
    REQUIRE(m.couplings()[0].value == chloroform_J);
    // Energy of |00> (both up): -(J/4 + h1/2 + h2/2).
    REQUIRE(m.diagonal_energy(0) ==
            Catch::Approx(-(chloroform_J / 4 + 0.5 * chloroform_h1z +
                            0.5 * chloroform_h2z)));
}

TEST_CASE("spin bath builder structure and determinism") {
    const auto m1 = build_spin_bath(6, 8.0, 0.4, 77);
    const auto m2 = build_spin_bath(6, 8.0, 0.4, 77);
    const auto m3 = build_spin_bath(6, 8.0, 0.4, 78);
    REQUIRE(m1.couplings().size() == 3u + 2u * 4u * 3u);
    // Central pair carries -2 J0 on every axis.
    int central = 0;
    for (const auto &c : m1.couplings())
        if (c.j == 1 && c.k == 2) {
            REQUIRE(c.value == Catch::Approx(-16.0));
            ++central;
        }
    REQUIRE(central == 3);
    for (std::size_t i = 0; i < m1.couplings().size(); ++i)
        REQUIRE(m1.couplings()[i].value == m2.couplings()[i].value);
    bool differs = false;
    for (std::size_t i = 0; i < m1.couplings().size(); ++i)
        if (m1.couplings()[i].value != m3.couplings()[i].value) differs = true;
    REQUIRE(differs);
    // Bath couplings sit in (0, j_max), stored negated.
    for (const auto &c : m1.couplings())
        if (c.k > 2) {
            REQUIRE(c.value < 0.0);
            REQUIRE(c.value > -0.4);
        }
    REQUIRE_THROWS_AS(build_spin_bath(2, 8.0, 0.4, 1), std::domain_error);
}

TEST_CASE("bath initial state is a normalized product state") {
    const auto s = random_bath_state(5, 123);
    REQUIRE(s.norm() == Catch::Approx(1.0));
    REQUIRE(s.expectation(1).qz == Catch::Approx(0.0).margin(1e-14));
    REQUIRE(s.expectation(2).qz == Catch::Approx(1.0).margin(1e-14));
    const auto s2 = random_bath_state(5, 123);
    REQUIRE(oracle::max_abs_diff(s.amplitudes(), s2.amplitudes()) == 0.0);
    const auto s3 = random_bath_state(5, 124);
    REQUIRE(oracle::max_abs_diff(s.amplitudes(), s3.amplitudes()) > 1e-3);
}

TEST_CASE("model builders validate their arguments") {
    SpinModel m(2);
    REQUIRE_THROWS_AS(m.set_coupling(1, 1, Axis::Z, 1.0), std::domain_error);
    REQUIRE_THROWS_AS(m.set_coupling(1, 3, Axis::Z, 1.0), std::domain_error);
    REQUIRE_THROWS_AS(m.field(0, Axis::X), std::domain_error);
    // Setting the same coupling twice overwrites in place.
    m.set_coupling(1, 2, Axis::X, 1.0);
    m.set_coupling(2, 1, Axis::X, 2.0);
    REQUIRE(m.couplings().size() == 1);
    REQUIRE(m.couplings()[0].value == 2.0);
}

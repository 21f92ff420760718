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

#pragma once

#include "spin_model.hpp"

#include <cstdio>
#include <string>

namespace spinsim {

/// Resonance condition parameters for a two-spin molecule with z fields
/// h1 = N*M^2*f and h2 = M^2*f: a pulse of s = 2*k*M*N^2 periods on spin 1
/// (or 2*k*M^3 on spin 2) rotates its target while returning the spectator
/// to where it started, up to a deterministic phase.
struct TwoPiKParams {
    int N = 1;
    int M = 4;
    double s = 8.0; // pulse periods on spin 1; must be a multiple of 2*M*N*N
};

enum class PulseKind { X, Y };

/// One resonant sinusoidal pulse: which spin, the rotation axis, the signed
/// rotation angle, and whether the angle may run negative (phase-repair
/// pulses store theta mod 4pi shifted into [-4pi, 0)).
struct PulseSpec {
    int spin = 1;
    PulseKind kind = PulseKind::X;
    double theta = pi; // signed rotation angle in radians
    std::string label;
};

/// Concrete realization of a pulse: duration, carrier, and the drive field
/// amplitudes seen by each spin. The same rotating drive hits both spins;
/// spin 2 couples with relative strength gamma = 1/4.
struct PulseRealization {
    std::string label;
    int spin = 1;           // addressed (resonant) spin
    double duration = 0.0;  // in units of 1/f, i.e. t/2pi
    double freq = 1.0;      // carrier frequency
    double amp1 = 0.0;      // drive amplitude at spin 1
    double amp2 = 0.0;      // drive amplitude at spin 2 (= amp1/4)
    double phase_x = 0.0;
    double phase_y = 0.0;
};

inline constexpr double drive_gamma = 0.25; // spin-2 coupling ratio

/// Duration of a pulse addressed at one spin: spin 1 runs for s carrier
/// periods at frequency N*M^2, spin 2 for 2*k*M^3 periods at M^2, with
/// the frequencies normalized so spin 1 sees frequency 1.
inline double pulse_duration(int spin, const TwoPiKParams &p) {
    const double k = p.s / (2.0 * p.M * p.N * p.N);
    if (spin == 1) return p.s;
    return 2.0 * k * p.M * p.M * p.M; // slower carrier, longer pulse
}

/// Carrier frequency relative to spin 1's resonance (1 by convention);
/// spin 2 resonates at h2/h1 = 1/(N*M) = 1/4 for (N, M) = (1, 4).
inline double carrier_frequency(int spin, const TwoPiKParams &p) {
    if (spin == 1) return 1.0;
    return 1.0 / (static_cast<double>(p.N) * p.M);
}

/// Map a pulse spec to drive fields. Both spins see
/// hx(t) = A_j sin(2 pi f t + px), hy(t) = A_j sin(2 pi f t + py) with the
/// X type using (px, py) = (-pi/2, 0) and the Y type (0, +pi/2). The
/// amplitude at the addressed spin is -(theta/2pi)/duration for X and
/// +(theta/2pi)/duration for Y, realizing exp(i theta S^x) / exp(i theta S^y)
/// in its rotating frame; the other spin's amplitude follows the fixed
/// coupling ratio amp2 = gamma * amp1.
inline PulseRealization design_pulse(const PulseSpec &spec,
                                     const TwoPiKParams &p) {
    PulseRealization r;
    r.label = spec.label;
    r.spin = spec.spin;
    r.duration = pulse_duration(spec.spin, p);
    r.freq = carrier_frequency(spec.spin, p);
    double a = (spec.theta / two_pi) / r.duration;
    if (spec.kind == PulseKind::X) {
        a = -a;
        r.phase_x = -0.5 * pi;
        r.phase_y = 0.0;
    } else {
        r.phase_x = 0.0;
        r.phase_y = 0.5 * pi;
    }
    if (spec.spin == 1) {
        r.amp1 = a;
        r.amp2 = drive_gamma * a;
    } else {
        r.amp2 = a;
        r.amp1 = a / drive_gamma;
    }
    return r;
}

/// Reduce an accumulated rotation angle to the canonical representative:
/// plain pulses use [0, 2pi), phase-repair pulses the negative window
/// [-4pi, 0) (the spinor period is 4pi, so both reproduce the intended
/// unitary; the negative branch keeps repair pulses short-angle rather
/// than wrapping through a sign flip).
inline double canonical_angle(double theta, bool repair) {
    if (!repair) {
        double t = std::fmod(theta, two_pi);
        if (t < 0.0) t += two_pi;
        return t;
    }
    double t = std::fmod(theta, 2.0 * two_pi);
    if (t < 0.0) t += 2.0 * two_pi;
    return t - 2.0 * two_pi;
}

// --- chloroform-specific pulse book ------------------------------------------

/// The two-spin molecule used throughout: J12z = chloroform_J, z fields
/// h1 = 1 and h2 = 1/4, matching (N, M) = (1, 4).
struct ChloroformPulses {
    TwoPiKParams params;

    explicit ChloroformPulses(double s = 8.0) { params.s = s; }

    /// Exact free-evolution time with tau * J = -pi, as t/2pi.
    static double interaction_time() { return -0.5 / chloroform_J; }

    /// Duration literal used for the interaction step (rounded to four
    /// decimals, as pulse hardware would program it).
    static double interaction_duration() { return 1162790.6977; }

    static double angle_primed(int spin) {
        const double tau = -pi / chloroform_J;
        const double hz = (spin == 1) ? chloroform_h1z : chloroform_h2z;
        return -tau * (hz + 0.5 * chloroform_J);
    }

    static double angle_double_primed(int spin) {
        const double tau = -pi / chloroform_J;
        const double hz = (spin == 1) ? chloroform_h1z : chloroform_h2z;
        return -tau * hz;
    }

    /// Named pulses: X1, Y1, X2, Y2 rotate by +pi/2; barred variants by
    /// -pi/2; primed and double-primed pulses repair free-evolution phases.
    PulseRealization pulse(const std::string &name) const {
        PulseSpec spec;
        spec.label = name;
        if (name.size() < 2) throw std::domain_error("unknown pulse: " + name);
        const char axis = name[0];
        bool bar = false;
        std::string rest = name.substr(1);
        if (!rest.empty() && rest[0] == '-') { // X-1 style bar marker
            bar = true;
            rest = rest.substr(1);
        }
        if (rest.empty()) throw std::domain_error("unknown pulse: " + name);
        spec.spin = rest[0] - '0';
        if (spec.spin != 1 && spec.spin != 2)
            throw std::domain_error("unknown pulse: " + name);
        const std::string suffix = rest.substr(1);
        spec.kind = (axis == 'X' || axis == 'x') ? PulseKind::X : PulseKind::Y;
        double theta;
        bool repair = false;
        if (suffix.empty()) {
            theta = bar ? -0.5 * pi : 0.5 * pi;
            spec.theta = theta; // short signed angle, no wrap
            return design_pulse(spec, params);
        } else if (suffix == "'") {
            theta = angle_primed(spec.spin);
            if (bar) theta = -theta;
            repair = true;
        } else if (suffix == "''") {
            theta = angle_double_primed(spec.spin);
            if (bar) theta = -theta;
            repair = true;
        } else {
            throw std::domain_error("unknown pulse: " + name);
        }
        spec.theta = canonical_angle(theta, repair);
        return design_pulse(spec, params);
    }

    /// Static part of every microinstruction: the molecule itself.
    SpinModel base_model() const {
        return build_chloroform();
    }

    /// Pulse microinstruction: molecule plus the four drive sinusoids.
    Microinstruction micro(const std::string &name) const {
        const PulseRealization r = pulse(name);
        Microinstruction mi;
        mi.label = name;
        mi.duration_over_2pi = r.duration;
        mi.model = base_model();
        mi.model.set_sin_field(1, Axis::X, r.amp1, r.freq, r.phase_x);
        mi.model.set_sin_field(1, Axis::Y, r.amp1, r.freq, r.phase_y);
        mi.model.set_sin_field(2, Axis::X, r.amp2, r.freq, r.phase_x);
        mi.model.set_sin_field(2, Axis::Y, r.amp2, r.freq, r.phase_y);
        return mi;
    }

    /// Free evolution microinstruction I'.
    Microinstruction micro_interaction() const {
        Microinstruction mi;
        mi.label = "I'";
        mi.duration_over_2pi = interaction_duration();
        mi.model = base_model();
        return mi;
    }

    /// Expand a symbolic step list (application order) into micros.
    std::vector<Microinstruction>
    expand(const std::vector<std::string> &names) const {
        std::vector<Microinstruction> out;
        out.reserve(names.size());
        for (const auto &n : names)
            out.push_back(n == "I'" ? micro_interaction() : micro(n));
        return out;
    }
};

// --- pulse-sequence books (application order) ---------------------------------

/// Controlled-NOT with control spin 1 and target spin 2, three equivalent
/// pulse orderings differing in how the repair pulses interleave.
inline std::vector<std::string> cnot_pulse_sequence(int variant) {
    switch (variant) {
    case 1:
        return {"Y2", "I'", "Y-2", "X2'", "Y-1", "X1'", "Y1"};
    case 2:
        return {"Y2", "I'", "Y-2", "Y-1", "X2'", "X1'", "Y1"};
    case 3:
        return {"Y2", "I'", "Y-2", "X1", "X2'", "Y1'", "X-1"};
    default:
        throw std::domain_error("cnot variant must be 1, 2 or 3");
    }
}

/// Conditional phase-flip step G of the two-qubit search iteration.
inline std::vector<std::string> grover_g_pulse_sequence() {
    return {"I'", "Y-1", "X1''", "Y1", "Y-2", "X2''", "Y2"};
}

/// Full search sequence for the marked item (0..3): prepare the uniform
/// superposition, mark, and invert about the mean.
inline std::vector<std::string> grover_pulse_sequence(int item) {
    if (item < 0 || item > 3) throw std::domain_error("search item must be 0..3");
    const std::string x1s = (item & 2) ? "X-1" : "X1";
    const std::string x2s = (item & 1) ? "X-2" : "X2";
    std::vector<std::string> seq = {"Y-2", "X-2", "X-2", "Y-1", "X-1", "X-1"};
    for (const auto &g : grover_g_pulse_sequence()) seq.push_back(g);
    seq.insert(seq.end(), {"Y-2", x2s, "Y-1", x1s});
    for (const auto &g : grover_g_pulse_sequence()) seq.push_back(g);
    seq.insert(seq.end(), {"Y-2", "X2", "Y-1", "X1"});
    return seq;
}

} // namespace spinsim

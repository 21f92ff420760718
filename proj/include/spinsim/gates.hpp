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

#include "state_vector.hpp"

namespace spinsim {

// --- named 2x2 matrices -------------------------------------------------

/// exp(i phi S^axis) = cos(phi/2) 1 + 2i S^axis sin(phi/2).
inline Mat2 rot_spin(Axis axis, double phi) {
    const double c = std::cos(0.5 * phi), s = std::sin(0.5 * phi);
    const cplx is(0.0, s);
    switch (axis) {
    case Axis::X: return {c, is, is, c};
    case Axis::Y: return {c, cplx(s), cplx(-s), c};
    default: return {c + is, 0.0, 0.0, c - is};
    }
}

/// Rotation by the angle |v| about v/|v|: exp(i v . S).
inline Mat2 rot_axis(double vx, double vy, double vz) {
    const double v = std::sqrt(vx * vx + vy * vy + vz * vz);
    if (v == 0.0) return mat2_identity();
    const double c = std::cos(0.5 * v), s = std::sin(0.5 * v) / v;
    // cos(v/2) 1 + (2i v.S / v) sin(v/2); 2S^x,2S^y,2S^z are the Pauli set.
    return {cplx(c, s * vz), cplx(s * vy, s * vx), cplx(-s * vy, s * vx),
            cplx(c, -s * vz)};
}

inline Mat2 gate_x() { return rot_spin(Axis::X, pi / 2); }  // (1 i; i 1)/sqrt2
inline Mat2 gate_y() { return rot_spin(Axis::Y, pi / 2); }  // (1 1; -1 1)/sqrt2
inline Mat2 gate_xbar() { return mat2_dagger(gate_x()); }
inline Mat2 gate_ybar() { return mat2_dagger(gate_y()); }
inline Mat2 gate_not() { return {0.0, 1.0, 1.0, 0.0}; }
inline Mat2 gate_w() {
    const double r = 1.0 / std::sqrt(2.0);
    return {r, r, r, -r};
}
inline Mat2 gate_rphase(double phi) {
    return {1.0, 0.0, 0.0, std::polar(1.0, phi)};
}
/// Half-angle y rotation used by the Margolus-style Toffoli network.
inline Mat2 gate_a() { return rot_spin(Axis::Y, pi / 4); }
inline Mat2 gate_abar() { return mat2_dagger(gate_a()); }
/// Square root of NOT (up to the phase making V^2 = NOT exactly).
inline Mat2 gate_v() {
    const cplx f = std::polar(1.0 / std::sqrt(2.0), -pi / 4);
    return {f, f * cplx(0.0, 1.0), f * cplx(0.0, 1.0), f};
}

// --- named 4x4 matrices -------------------------------------------------
// Two-bit index convention: (bit of second qubit << 1) | (bit of first).

/// CNOT with the FIRST index qubit as control: swaps |01> and |11>.
inline Mat4 gate_cnot() {
    Mat4 m{};
    m[0 * 4 + 0] = 1.0;
    m[1 * 4 + 3] = 1.0;
    m[2 * 4 + 2] = 1.0;
    m[3 * 4 + 1] = 1.0;
    return m;
}

inline Mat4 gate_swap() {
    Mat4 m{};
    m[0 * 4 + 0] = 1.0;
    m[1 * 4 + 2] = 1.0;
    m[2 * 4 + 1] = 1.0;
    m[3 * 4 + 3] = 1.0;
    return m;
}

/// Ising-style phase shift: exp(i phi (2 S^z S^z - S^z_1 - S^z_2) / 2)
/// = diag(e^{-i phi/4}, e^{-i phi/4}, e^{-i phi/4}, e^{3 i phi/4}).
inline Mat4 gate_ising_phase(double phi) {
    Mat4 m{};
    const cplx lo = std::polar(1.0, -0.25 * phi);
    m[0] = lo;
    m[5] = lo;
    m[10] = lo;
    m[15] = std::polar(1.0, 0.75 * phi);
    return m;
}

/// Controlled phase shift diag(1,1,1,e^{i phi}).
inline Mat4 gate_ctrl_phase(double phi) {
    Mat4 m = mat4_identity();
    m[15] = std::polar(1.0, phi);
    return m;
}

/// Two-qubit search step: diag(e^{-i pi/4}, e^{i pi/4}, e^{i pi/4}, e^{-i pi/4}).
inline Mat4 gate_g2() {
    Mat4 m{};
    m[0] = std::polar(1.0, -pi / 4);
    m[5] = std::polar(1.0, pi / 4);
    m[10] = std::polar(1.0, pi / 4);
    m[15] = std::polar(1.0, -pi / 4);
    return m;
}

// --- gate operations ------------------------------------------------------

enum class GateKind {
    X,
    Xbar,
    Y,
    Ybar,
    W,
    Not,
    Rphase,     // 1q, angle
    A,
    Abar,
    V,          // 1q square root of NOT
    CtrlPhase,  // 2q, angle; targets (q1, q2), diagonal so order is moot
    IsingPhase, // 2q, angle
    Cnot,       // targets (control, target)
    Swap,
    G2,         // 2q search step
    Toffoli,    // targets (control1, control2, target)
    GlobalPhase,
    Custom1q,
    Custom2q,
};

struct GateOp {
    GateKind kind;
    int q1 = 0, q2 = 0, q3 = 0;
    double angle = 0.0;
    Mat2 u1{};
    Mat4 u2{};
};

struct GateProgram {
    int num_qubits = 0;
    std::vector<GateOp> ops;

    GateProgram &add(GateOp op) {
        ops.push_back(op);
        return *this;
    }
    GateProgram &add(GateKind kind, int q1 = 0, int q2 = 0, int q3 = 0,
                     double angle = 0.0) {
        ops.push_back(GateOp{kind, q1, q2, q3, angle, {}, {}});
        return *this;
    }
    GateProgram &append(const GateProgram &other) {
        ops.insert(ops.end(), other.ops.begin(), other.ops.end());
        return *this;
    }
};

/// Phase e^{i phi} on amplitudes where the three given qubits all read 1.
inline void apply_ccphase(StateVector &state, int q1, int q2, int q3, double phi) {
    const std::size_t m = (std::size_t{1} << (q1 - 1)) |
                          (std::size_t{1} << (q2 - 1)) |
                          (std::size_t{1} << (q3 - 1));
    const cplx f = std::polar(1.0, phi);
    for (std::size_t i = 0; i < state.dimension(); ++i)
        if ((i & m) == m) state[i] *= f;
}

inline void apply(StateVector &state, const GateOp &op) {
    switch (op.kind) {
    case GateKind::X: state.apply_1q_unitary(op.q1, gate_x(), false); break;
    case GateKind::Xbar: state.apply_1q_unitary(op.q1, gate_xbar(), false); break;
    case GateKind::Y: state.apply_1q_unitary(op.q1, gate_y(), false); break;
    case GateKind::Ybar: state.apply_1q_unitary(op.q1, gate_ybar(), false); break;
    case GateKind::W: state.apply_1q_unitary(op.q1, gate_w(), false); break;
    case GateKind::Not: state.apply_1q_unitary(op.q1, gate_not(), false); break;
    case GateKind::Rphase:
        state.apply_1q_unitary(op.q1, gate_rphase(op.angle), false);
        break;
    case GateKind::A: state.apply_1q_unitary(op.q1, gate_a(), false); break;
    case GateKind::Abar: state.apply_1q_unitary(op.q1, gate_abar(), false); break;
    case GateKind::V: state.apply_1q_unitary(op.q1, gate_v(), false); break;
    case GateKind::CtrlPhase:
        state.apply_2q_unitary(op.q1, op.q2, gate_ctrl_phase(op.angle), false);
        break;
    case GateKind::IsingPhase:
        state.apply_2q_unitary(op.q1, op.q2, gate_ising_phase(op.angle), false);
        break;
    case GateKind::Cnot:
        state.apply_2q_unitary(op.q1, op.q2, gate_cnot(), false);
        break;
    case GateKind::Swap:
        state.apply_2q_unitary(op.q1, op.q2, gate_swap(), false);
        break;
    case GateKind::G2:
        state.apply_2q_unitary(op.q1, op.q2, gate_g2(), false);
        break;
    case GateKind::Toffoli: {
        // Flip q3 iff q1 and q2 both read 1: controlled-controlled NOT,
        // realized as a controlled phase in the Hadamard frame of q3.
        state.apply_1q_unitary(op.q3, gate_w(), false);
        apply_ccphase(state, op.q1, op.q2, op.q3, pi);
        state.apply_1q_unitary(op.q3, gate_w(), false);
        break;
    }
    case GateKind::GlobalPhase: state.scale(std::polar(1.0, op.angle)); break;
    case GateKind::Custom1q: state.apply_1q_unitary(op.q1, op.u1); break;
    case GateKind::Custom2q: state.apply_2q_unitary(op.q1, op.q2, op.u2); break;
    }
}

inline void run(StateVector &state, const GateProgram &program) {
    if (program.num_qubits && static_cast<std::size_t>(program.num_qubits) !=
                                  state.num_qubits())
        throw std::domain_error("run: qubit count mismatch");
    for (const auto &op : program.ops) apply(state, op);
}

// --- gate sequences -------------------------------------------------------
// Sequences are stored in application order (first element acts first).

/// CNOT as e^{i pi/4} Ybar_t I(pi) Y_t, phase-exact.
inline GateProgram cnot_sequence(int control, int target) {
    if (control == target) throw std::domain_error("cnot_sequence: equal qubits");
    GateProgram p;
    p.add(GateKind::Y, target);
    p.add(GateKind::IsingPhase, control, target, 0, pi);
    p.add(GateKind::Ybar, target);
    p.add(GateKind::GlobalPhase, 0, 0, 0, pi / 4);
    return p;
}

/// SWAP as three alternating CNOTs.
inline GateProgram swap_sequence(int a, int b) {
    GateProgram p;
    p.add(GateKind::Cnot, a, b);
    p.add(GateKind::Cnot, b, a);
    p.add(GateKind::Cnot, a, b);
    return p;
}

/// W as the product -i X X Ybar (applied right to left).
inline GateProgram hadamard_sequence(int q) {
    GateProgram p;
    p.add(GateKind::Ybar, q);
    p.add(GateKind::X, q);
    p.add(GateKind::X, q);
    p.add(GateKind::GlobalPhase, 0, 0, 0, -pi / 2);
    return p;
}

/// Toffoli from controlled phase shifts:
/// Ybar_t R(-pi/2)_{t,c1} Ybar_{c2} I(pi)_{c2,c1} Y_{c2} R(pi/2)_{t,c2}
///   Ybar_{c2} I(pi)_{c2,c1} Y_{c2} R(-pi/2)_{t,c2} Y_t
/// written as a matrix product; stored here in application order.
inline GateProgram toffoli_sequence(int c1, int c2, int target) {
    GateProgram p;
    p.add(GateKind::Y, target);
    p.add(GateKind::CtrlPhase, c2, target, 0, -pi / 2);
    p.add(GateKind::Y, c2);
    p.add(GateKind::IsingPhase, c1, c2, 0, pi);
    p.add(GateKind::Ybar, c2);
    p.add(GateKind::CtrlPhase, c2, target, 0, pi / 2);
    p.add(GateKind::Y, c2);
    p.add(GateKind::IsingPhase, c1, c2, 0, pi);
    p.add(GateKind::Ybar, c2);
    p.add(GateKind::CtrlPhase, c1, target, 0, -pi / 2);
    p.add(GateKind::Ybar, target);
    p.add(GateKind::GlobalPhase, 0, 0, 0, pi / 2);
    return p;
}

/// Four-CNOT/half-rotation network: equals Toffoli except in the
/// (control1, control2) = (1, 0) sector, where the target picks up the
/// operator -2S^z, i.e. a factor -1 on the target-0 component.
inline GateProgram toffoli_margolus_sequence(int c1, int c2, int target) {
    GateProgram p;
    p.add(GateKind::A, target);
    p.add(GateKind::Cnot, c2, target);
    p.add(GateKind::A, target);
    p.add(GateKind::Cnot, c1, target);
    p.add(GateKind::Abar, target);
    p.add(GateKind::Cnot, c2, target);
    p.add(GateKind::Abar, target);
    return p;
}

} // namespace spinsim

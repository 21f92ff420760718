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

#include "gates.hpp"

#include <numeric>

namespace spinsim {

// --- quantum Fourier transform --------------------------------------------

/// QFT on qubits [first, first + n): b_k = (1/sqrt(N)) sum_j e^{+2 pi i jk/N} a_j.
/// Without the final swaps the output register is bit-reversed; readouts that
/// only need per-qubit expectations relabel instead of paying for the swaps.
inline GateProgram qft_program(int num_qubits, int first, int n,
                               bool with_swaps = true) {
    GateProgram prog;
    prog.num_qubits = num_qubits;
    for (int j = n; j >= 1; --j) {
        const int qj = first + j - 1;
        prog.add(GateOp{GateKind::W, qj});
        for (int k = j - 1; k >= 1; --k) {
            const int qk = first + k - 1;
            const double phi = two_pi / std::pow(2.0, j - k + 1);
            prog.add(GateOp{GateKind::CtrlPhase, qk, qj, 0, phi});
        }
    }
    if (with_swaps)
        for (int j = 1; j <= n / 2; ++j)
            prog.add(GateOp{GateKind::Swap, first + j - 1, first + n - j});
    return prog;
}

/// Inverse circuit: reversed op order with each gate inverted.
inline GateProgram inverse_program(const GateProgram &prog) {
    GateProgram inv;
    inv.num_qubits = prog.num_qubits;
    for (auto it = prog.ops.rbegin(); it != prog.ops.rend(); ++it) {
        GateOp op = *it;
        switch (op.kind) {
        case GateKind::Rphase:
        case GateKind::CtrlPhase:
        case GateKind::IsingPhase:
        case GateKind::GlobalPhase:
            op.angle = -op.angle;
            break;
        case GateKind::X: op.kind = GateKind::Xbar; break;
        case GateKind::Xbar: op.kind = GateKind::X; break;
        case GateKind::Y: op.kind = GateKind::Ybar; break;
        case GateKind::Ybar: op.kind = GateKind::Y; break;
        case GateKind::A: op.kind = GateKind::Abar; break;
        case GateKind::Abar: op.kind = GateKind::A; break;
        case GateKind::V:
            op.u1 = mat2_dagger(gate_v());
            op.kind = GateKind::Custom1q;
            break;
        case GateKind::Custom1q: op.u1 = mat2_dagger(op.u1); break;
        case GateKind::Custom2q: op.u2 = mat4_dagger(op.u2); break;
        default: break; // W, Not, Swap, Cnot, Toffoli, G2 are self-inverse
        }
        inv.add(op);
    }
    return inv;
}

// --- period finding ---------------------------------------------------------

struct PeriodSpectrum {
    std::vector<double> probabilities;       // p_q over the input register
    std::vector<QubitExpectation> qubits;    // input-register expectations
};

/// Closed-form probability of observing q on the input register after
/// period finding with f(n) = n mod M over N basis values.
inline double period_find_probability(int q, int M, int N = 8) {
    const int L = N / M; // largest integer with L*M <= N
    const int rem = N - L * M;
    const double x = two_pi * q * M / N;
    // |sum_{l=0..L-1} e^{ilx}|^2 summed over the M residue classes; classes
    // with residue < rem pick up one extra term.
    const auto geom = [&](int len) {
        if (len == 0) return 0.0;
        const double half = 0.5 * x;
        const double den = std::sin(half);
        if (std::abs(den) < 1e-15) return static_cast<double>(len) * len;
        const double num = std::sin(0.5 * len * x);
        return (num * num) / (den * den);
    };
    const double total = rem * geom(L + 1) + (M - rem) * geom(L);
    return total / (static_cast<double>(N) * N);
}

/// Six-qubit period finding: input register on qubits 1-3, function register
/// on 4-6. The entangled state sum_n |n>|n mod M> is prepared directly (the
/// injective table), then the input register is Fourier-transformed without
/// swaps; probabilities are read back bit-reversed to undo that.
inline PeriodSpectrum period_find(int M, int N = 8) {
    if (N != 8) throw std::domain_error("period_find: N must be 8");
    if (M < 1 || M > N) throw std::domain_error("period_find: M must be 1..N");
    StateVector state(6);
    auto &a = state.amplitudes();
    std::fill(a.begin(), a.end(), cplx{});
    const double w = 1.0 / std::sqrt(static_cast<double>(N));
    for (int n = 0; n < N; ++n)
        a[static_cast<std::size_t>(n) +
          (static_cast<std::size_t>(n % M) << 3)] = w;
    run(state, qft_program(6, 1, 3, false));

    PeriodSpectrum out;
    out.probabilities.assign(static_cast<std::size_t>(N), 0.0);
    const auto &b = state.amplitudes();
    for (std::size_t i = 0; i < b.size(); ++i) {
        const std::size_t q = i & 7u;
        // bit-reversed 3-bit label
        const std::size_t qr = ((q & 1) << 2) | (q & 2) | ((q & 4) >> 2);
        out.probabilities[qr] += std::norm(b[i]);
    }
    // logical qubit j of the bit-reversed output lives at physical 4 - j
    for (int j = 1; j <= 3; ++j) out.qubits.push_back(state.expectation(4 - j));
    return out;
}

// --- search on two qubits -----------------------------------------------------

/// Optimized two-qubit search sequence for the marked item, in gate form.
/// Application order (the written product reads right to left):
/// Ybar1 Xbar1 Xbar1 Ybar2 Xbar2 Xbar2 G Ybar2 X2^s2 Ybar1 X1^s1 G
/// Ybar2 X2 Ybar1 X1, with an overall minus sign; the item selects the
/// signs (s1, s2) of the two middle single-spin rotations.
inline GateProgram grover_program(int item) {
    if (item < 0 || item > 3) throw std::domain_error("search item must be 0..3");
    const GateKind x1 = (item & 2) ? GateKind::Xbar : GateKind::X;
    const GateKind x2 = (item & 1) ? GateKind::Xbar : GateKind::X;
    GateProgram prog;
    prog.num_qubits = 2;
    prog.add(GateOp{GateKind::GlobalPhase, 1, 0, 0, pi});
    prog.add(GateOp{GateKind::Ybar, 1});
    prog.add(GateOp{GateKind::Xbar, 1});
    prog.add(GateOp{GateKind::Xbar, 1});
    prog.add(GateOp{GateKind::Ybar, 2});
    prog.add(GateOp{GateKind::Xbar, 2});
    prog.add(GateOp{GateKind::Xbar, 2});
    prog.add(GateOp{GateKind::G2, 1, 2});
    prog.add(GateOp{GateKind::Ybar, 2});
    prog.add(GateOp{x2, 2});
    prog.add(GateOp{GateKind::Ybar, 1});
    prog.add(GateOp{x1, 1});
    prog.add(GateOp{GateKind::G2, 1, 2});
    prog.add(GateOp{GateKind::Ybar, 2});
    prog.add(GateOp{GateKind::X, 2});
    prog.add(GateOp{GateKind::Ybar, 1});
    prog.add(GateOp{GateKind::X, 1});
    return prog;
}

// --- order of a permutation ------------------------------------------------

namespace detail {

/// Gate word (application order) realizing one transposition of the four
/// 2-bit items held in data bits (1, 2). 'N a' = NOT on data bit a,
/// 'C a b' = NOT on data bit a controlled by data bit b.
struct PermGate {
    bool controlled = false; // C vs N
    int target = 1;
    int control = 0;
};

inline std::vector<PermGate> transposition_word(int u, int v) {
    const auto N = [](int a) { return PermGate{false, a, 0}; };
    const auto C = [](int a, int b) { return PermGate{true, a, b}; };
    if (u > v) std::swap(u, v);
    if (u == 1 && v == 3) return {C(2, 1)};
    if (u == 2 && v == 3) return {C(1, 2)};
    if (u == 1 && v == 2) return {C(1, 2), C(2, 1), C(1, 2)};
    if (u == 0 && v == 2) return {N(2), C(2, 1)};
    if (u == 0 && v == 1) return {N(1), C(1, 2)};
    if (u == 0 && v == 3) return {C(1, 2), C(2, 1), N(2), C(1, 2)};
    throw std::domain_error("transposition out of range");
}

/// Decompose a permutation (one-line notation over 0..3) into transpositions
/// whose right-to-left product equals it; emitted in application order.
inline std::vector<std::pair<int, int>>
transpositions(const std::vector<int> &perm) {
    std::vector<int> p = perm;
    std::vector<std::pair<int, int>> word;
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
        while (p[i] != i) {
            const int j = p[i];
            std::swap(p[i], p[j]);
            word.emplace_back(i, j);
        }
    }
    // word applied left to right maps perm to identity, so the reversed word
    // applied in order rebuilds perm.
    std::reverse(word.begin(), word.end());
    return word;
}

inline std::vector<int> compose(const std::vector<int> &a,
                                const std::vector<int> &b) {
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[static_cast<std::size_t>(b[i])];
    return out;
}

} // namespace detail

/// Five-qubit order finding for a permutation of {0..3}: Fourier register on
/// qubits 1-3, data item on qubits 4-5 prepared to y by the caller (or via
/// the init ops emitted here). Applies W on the register, the controlled
/// powers P^{2^{j-1}}, and the swapless QFT; the register spectrum matches
/// period finding with M = the cycle length of y under the permutation.
inline GateProgram permutation_order_program(const std::vector<int> &perm,
                                             int y) {
    if (perm.size() != 4) throw std::domain_error("permutation must cover 0..3");
    {
        std::vector<int> chk = perm;
        std::sort(chk.begin(), chk.end());
        if (chk != std::vector<int>{0, 1, 2, 3})
            throw std::domain_error("invalid permutation");
    }
    if (y < 0 || y > 3) throw std::domain_error("item must be 0..3");

    GateProgram prog;
    prog.num_qubits = 5;
    if (y & 1) prog.add(GateOp{GateKind::Not, 4});
    if (y & 2) prog.add(GateOp{GateKind::Not, 5});
    for (int q = 1; q <= 3; ++q) prog.add(GateOp{GateKind::W, q});

    std::vector<int> pw = perm; // P^{2^{j-1}}
    for (int j = 1; j <= 3; ++j) {
        for (const auto &[u, v] : detail::transpositions(pw))
            for (const auto &g : detail::transposition_word(u, v)) {
                const int target = 3 + g.target;
                if (g.controlled) {
                    GateOp op{GateKind::Toffoli, j, 3 + g.control};
                    op.q3 = target;
                    prog.add(op);
                } else {
                    prog.add(GateOp{GateKind::Cnot, j, target});
                }
            }
        pw = detail::compose(pw, pw);
    }
    prog.append(qft_program(5, 1, 3, false));
    return prog;
}

/// Cycle length of y under the permutation (the classical answer the
/// register spectrum encodes).
inline int permutation_cycle_length(const std::vector<int> &perm, int y) {
    int r = 1;
    int x = perm[static_cast<std::size_t>(y)];
    while (x != y) {
        x = perm[static_cast<std::size_t>(x)];
        ++r;
    }
    return r;
}

// --- factoring 15 ----------------------------------------------------------

/// Seven-qubit circuit: 3-qubit Fourier register (1-3), 4-bit function
/// register (4-7) initialized to 1. Controlled multiplications by
/// a^{2^{j-1}} mod 15 use that every unit mod 15 is (+/-)2^r: multiply by
/// 2^r is a left rotation of the 4 bits (controlled swaps), multiply by
/// -1 = 14 is a bitwise complement (CNOT fan-out). Ends with the swapless
/// QFT on the register.
inline GateProgram shor15_program(int a) {
    static const std::vector<int> valid = {2, 4, 7, 8, 11, 13, 14};
    if (std::find(valid.begin(), valid.end(), a) == valid.end())
        throw std::domain_error("base must be a unit mod 15 other than 1");

    GateProgram prog;
    prog.num_qubits = 7;
    prog.add(GateOp{GateKind::Not, 4}); // f = 1
    for (int q = 1; q <= 3; ++q) prog.add(GateOp{GateKind::W, q});

    const auto cswap = [&](int ctrl, int q1, int q2) {
        prog.add(GateOp{GateKind::Cnot, q2, q1});
        GateOp t{GateKind::Toffoli, ctrl, q1};
        t.q3 = q2;
        prog.add(t);
        prog.add(GateOp{GateKind::Cnot, q2, q1});
    };
    const auto controlled_multiply = [&](int ctrl, int m) {
        // decompose m = (-1)^e * 2^r mod 15
        int r = -1;
        bool e = false;
        for (int rr = 0; rr < 4; ++rr) {
            const int p2 = (1 << rr) % 15;
            if (m == p2) { r = rr; e = false; break; }
            if (m == (15 - p2) % 15 || m == 15 - p2) { r = rr; e = true; break; }
        }
        if (r < 0) throw std::logic_error("multiplier not of the form +/-2^r");
        for (int i = 0; i < r; ++i) { // one left rotation per doubling
            cswap(ctrl, 6, 7);
            cswap(ctrl, 5, 6);
            cswap(ctrl, 4, 5);
        }
        if (e)
            for (int q = 4; q <= 7; ++q)
                prog.add(GateOp{GateKind::Cnot, ctrl, q});
    };

    int m = a % 15;
    for (int j = 1; j <= 3; ++j) {
        if (m != 1) controlled_multiply(j, m);
        m = (m * m) % 15;
    }
    prog.append(qft_program(7, 1, 3, false));
    return prog;
}

/// Classical period of a mod 15 and the factors it reveals.
inline int shor15_period(int a) {
    int m = a % 15, r = 1;
    while (m != 1) {
        m = (m * a) % 15;
        ++r;
    }
    return r;
}

inline std::pair<int, int> shor15_factors(int a) {
    const int M = shor15_period(a);
    if (M % 2 != 0) throw std::domain_error("odd period, pick another base");
    long long h = 1;
    for (int i = 0; i < M / 2; ++i) h = (h * a) % 15;
    const int f1 = static_cast<int>(std::gcd(h - 1 + 15, 15ll));
    const int f2 = static_cast<int>(std::gcd(h + 1, 15ll));
    // a^{M/2} = -1 mod 15 only produces the trivial divisors
    if (f1 == 1 || f2 == 15)
        throw std::domain_error("trivial divisors, pick another base");
    return {std::min(f1, f2), std::max(f1, f2)};
}

// --- three-input adder mod 16 -----------------------------------------------

/// Twelve qubits: registers r1 = qubits 1-4, r2 = 5-8, r3 = 9-12, each a
/// 4-bit integer (qubit order LSB first). QFT on register 3, a controlled
/// phase ladder accumulating r1 + r2 into the Fourier image, inverse QFT;
/// register 3 ends holding (r1 + r2 + r3) mod 16 exactly.
inline GateProgram adder3_program() {
    GateProgram prog;
    prog.num_qubits = 12;
    prog.append(qft_program(12, 9, 4, true));
    for (int src = 1; src <= 8; ++src) {
        const int ws = (src - 1) % 4; // source bit weight
        for (int wt = 0; wt < 4; ++wt) {
            if (ws + wt >= 4) continue; // phase multiple of 2 pi
            const double phi = two_pi * std::pow(2.0, ws + wt) / 16.0;
            prog.add(GateOp{GateKind::CtrlPhase, src, 9 + wt, 0, phi});
        }
    }
    prog.append(inverse_program(qft_program(12, 9, 4, true)));
    return prog;
}

} // namespace spinsim

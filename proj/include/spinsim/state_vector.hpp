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

#include "core.hpp"

namespace spinsim {

/// Per-qubit expectation values. qz is the probability that the qubit
/// reads 1; all three components lie in [0, 1].
struct QubitExpectation {
    double qx = 0.5;
    double qy = 0.5;
    double qz = 0.0;
};

/// State of an L-qubit register: 2^L complex amplitudes. Qubit 1 is the
/// least significant bit of the amplitude index. All operations act in
/// place with O(1) auxiliary storage.
class StateVector {
  public:
    explicit StateVector(std::size_t num_qubits)
        : num_qubits_(num_qubits) {
        if (num_qubits < 1 || num_qubits > 30)
            throw std::domain_error("StateVector: qubit count out of range");
        amp_.assign(std::size_t{1} << num_qubits, cplx{});
        amp_[0] = 1.0;
    }

    static StateVector basis_state(std::size_t num_qubits, std::uint64_t index) {
        StateVector s(num_qubits);
        s.set_basis(index);
        return s;
    }

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amp_.size(); }

    const std::vector<cplx> &amplitudes() const { return amp_; }
    std::vector<cplx> &amplitudes() { return amp_; }
    cplx &operator[](std::size_t i) { return amp_[i]; }
    const cplx &operator[](std::size_t i) const { return amp_[i]; }

    void set_basis(std::uint64_t index) {
        if (index >= amp_.size())
            throw std::domain_error("basis_state: index out of range");
        std::fill(amp_.begin(), amp_.end(), cplx{});
        amp_[index] = 1.0;
    }

    void set_zero() { std::fill(amp_.begin(), amp_.end(), cplx{}); }

    void scale(cplx factor) {
        for (auto &a : amp_) a *= factor;
    }

    /// In place S_j^axis |phi>. Not unitary (operator norm 1/2); building
    /// block for Hamiltonian application.
    void apply_spin(Axis axis, std::size_t j) {
        const std::size_t mask = bit_mask(j);
        const std::size_t d = amp_.size();
        switch (axis) {
        case Axis::Z:
            for (std::size_t i = 0; i < d; ++i)
                amp_[i] *= (i & mask) ? -0.5 : 0.5;
            break;
        case Axis::X:
            for_pairs(mask, [&](std::size_t i0, std::size_t i1) {
                const cplx a0 = amp_[i0];
                amp_[i0] = 0.5 * amp_[i1];
                amp_[i1] = 0.5 * a0;
            });
            break;
        case Axis::Y:
            // a'(..0..) = -(i/2) a(..1..),  a'(..1..) = +(i/2) a(..0..)
            for_pairs(mask, [&](std::size_t i0, std::size_t i1) {
                const cplx a0 = amp_[i0];
                amp_[i0] = cplx(0.0, -0.5) * amp_[i1];
                amp_[i1] = cplx(0.0, 0.5) * a0;
            });
            break;
        }
    }

    /// In place S_j^axis S_k^axis |phi> (operator norm 1/4).
    void apply_two_spin(Axis axis, std::size_t j, std::size_t k) {
        if (j == k) throw std::domain_error("apply_two_spin: equal qubits");
        const std::size_t mj = bit_mask(j), mk = bit_mask(k);
        const std::size_t d = amp_.size();
        switch (axis) {
        case Axis::Z:
            // +1/4 when bits agree, -1/4 when they differ.
            for (std::size_t i = 0; i < d; ++i) {
                const bool same = ((i & mj) != 0) == ((i & mk) != 0);
                amp_[i] *= same ? 0.25 : -0.25;
            }
            break;
        case Axis::X:
            for_quads(mj, mk, [&](std::size_t i0, std::size_t i1, std::size_t i2,
                                  std::size_t i3) {
                const cplx a0 = amp_[i0], a1 = amp_[i1];
                amp_[i0] = 0.25 * amp_[i3];
                amp_[i1] = 0.25 * amp_[i2];
                amp_[i2] = 0.25 * a1;
                amp_[i3] = 0.25 * a0;
            });
            break;
        case Axis::Y:
            // Product of two single-spin y factors: the quadruple swap of the
            // xx case with sign -1/4 when the two flipped bits agree, +1/4
            // when they differ.
            for_quads(mj, mk, [&](std::size_t i0, std::size_t i1, std::size_t i2,
                                  std::size_t i3) {
                const cplx a0 = amp_[i0], a1 = amp_[i1];
                amp_[i0] = -0.25 * amp_[i3];
                amp_[i1] = 0.25 * amp_[i2];
                amp_[i2] = 0.25 * a1;
                amp_[i3] = -0.25 * a0;
            });
            break;
        }
    }

    void apply_1q_unitary(std::size_t j, const Mat2 &u, bool check_unitary = true) {
        if (check_unitary && mat2_unitarity_defect(u) > unitary_tol_)
            throw std::domain_error("apply_1q_unitary: matrix is not unitary");
        const std::size_t mask = bit_mask(j);
        for_pairs(mask, [&](std::size_t i0, std::size_t i1) {
            const cplx a0 = amp_[i0], a1 = amp_[i1];
            amp_[i0] = u[0] * a0 + u[1] * a1;
            amp_[i1] = u[2] * a0 + u[3] * a1;
        });
    }

    /// The 2-bit row/column index of u is (bit_k << 1) | bit_j.
    void apply_2q_unitary(std::size_t j, std::size_t k, const Mat4 &u,
                          bool check_unitary = true) {
        if (j == k) throw std::domain_error("apply_2q_unitary: equal qubits");
        if (check_unitary && mat4_unitarity_defect(u) > unitary_tol_)
            throw std::domain_error("apply_2q_unitary: matrix is not unitary");
        const std::size_t mj = bit_mask(j), mk = bit_mask(k);
        for_quads(mj, mk, [&](std::size_t i0, std::size_t i1, std::size_t i2,
                              std::size_t i3) {
            const cplx a0 = amp_[i0], a1 = amp_[i1], a2 = amp_[i2], a3 = amp_[i3];
            amp_[i0] = u[0] * a0 + u[1] * a1 + u[2] * a2 + u[3] * a3;
            amp_[i1] = u[4] * a0 + u[5] * a1 + u[6] * a2 + u[7] * a3;
            amp_[i2] = u[8] * a0 + u[9] * a1 + u[10] * a2 + u[11] * a3;
            amp_[i3] = u[12] * a0 + u[13] * a1 + u[14] * a2 + u[15] * a3;
        });
    }

    QubitExpectation expectation(std::size_t j) const {
        const std::size_t mask = bit_mask(j);
        const std::size_t d = amp_.size();
        double sx = 0.0, sy = 0.0, sz = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            const double p = std::norm(amp_[i]);
            sz += (i & mask) ? -0.5 * p : 0.5 * p;
        }
        for_pairs(mask, [&](std::size_t i0, std::size_t i1) {
            const cplx c = std::conj(amp_[i0]) * amp_[i1];
            sx += c.real();
            sy += c.imag();
        });
        return QubitExpectation{0.5 - sx, 0.5 - sy, 0.5 - sz};
    }

    cplx inner_product(const StateVector &other) const {
        if (other.num_qubits_ != num_qubits_)
            throw std::domain_error("inner_product: size mismatch");
        cplx s{};
        for (std::size_t i = 0; i < amp_.size(); ++i)
            s += std::conj(amp_[i]) * other.amp_[i];
        return s;
    }

    double norm() const {
        double s = 0.0;
        for (const auto &a : amp_) s += std::norm(a);
        return std::sqrt(s);
    }

    double fidelity(const StateVector &other) const {
        return std::abs(inner_product(other));
    }

    void normalize() {
        const double n = norm();
        if (n == 0.0) throw std::domain_error("normalize: zero state");
        scale(1.0 / n);
    }

    /// Euclidean distance to another state (error measure between backends).
    double distance(const StateVector &other) const {
        if (other.num_qubits_ != num_qubits_)
            throw std::domain_error("distance: size mismatch");
        double s = 0.0;
        for (std::size_t i = 0; i < amp_.size(); ++i)
            s += std::norm(amp_[i] - other.amp_[i]);
        return std::sqrt(s);
    }

  private:
    std::size_t bit_mask(std::size_t j) const {
        if (j < 1 || j > num_qubits_)
            throw std::domain_error("qubit index out of range");
        return std::size_t{1} << (j - 1);
    }

    template <typename F> void for_pairs(std::size_t mask, F &&f) const {
        const std::size_t half = amp_.size() >> 1;
        const std::size_t low = mask - 1;
        for (std::size_t i = 0; i < half; ++i) {
            const std::size_t i0 = ((i & ~low) << 1) | (i & low);
            f(i0, i0 | mask);
        }
    }

    template <typename F> void for_quads(std::size_t mj, std::size_t mk, F &&f) const {
        const std::size_t lo = std::min(mj, mk), hi = std::max(mj, mk);
        const std::size_t quarter = amp_.size() >> 2;
        for (std::size_t i = 0; i < quarter; ++i) {
            const std::size_t t = ((i & ~(lo - 1)) << 1) | (i & (lo - 1));
            const std::size_t i0 = ((t & ~(hi - 1)) << 1) | (t & (hi - 1));
            f(i0, i0 | mj, i0 | mk, i0 | mj | mk);
        }
    }

    std::size_t num_qubits_;
    std::vector<cplx> amp_;
    static constexpr double unitary_tol_ = 1e-10;
};

} // namespace spinsim

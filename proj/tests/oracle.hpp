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

// Independent dense-matrix reference implementations used only by tests.
// Everything here works on explicit 2^L x 2^L matrices built from Kronecker
// embeddings, so it shares no kernel code with the library under test.

#pragma once

#include "spinsim/gates.hpp"
#include "spinsim/spin_model.hpp"
#include "spinsim/state_vector.hpp"

#include <random>
#include <vector>

namespace oracle {

using spinsim::cplx;
using spinsim::two_pi;

/// Row-major square complex matrix.
struct DMat {
    std::size_t n = 0;
    std::vector<cplx> a;

    DMat() = default;
    explicit DMat(std::size_t dim) : n(dim), a(dim * dim, cplx{}) {}

    cplx &at(std::size_t r, std::size_t c) { return a[r * n + c]; }
    const cplx &at(std::size_t r, std::size_t c) const { return a[r * n + c]; }

    static DMat identity(std::size_t dim) {
        DMat m(dim);
        for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
        return m;
    }
};

inline DMat mul(const DMat &x, const DMat &y) {
    DMat z(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t k = 0; k < x.n; ++k) {
            const cplx f = x.at(i, k);
            if (f == cplx{}) continue;
            for (std::size_t j = 0; j < x.n; ++j) z.at(i, j) += f * y.at(k, j);
        }
    return z;
}

inline DMat dagger(const DMat &x) {
    DMat z(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t j = 0; j < x.n; ++j) z.at(i, j) = std::conj(x.at(j, i));
    return z;
}

inline std::vector<cplx> mul_vec(const DMat &x, const std::vector<cplx> &v) {
    std::vector<cplx> r(x.n, cplx{});
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t j = 0; j < x.n; ++j) r[i] += x.at(i, j) * v[j];
    return r;
}

inline double max_abs_diff(const DMat &x, const DMat &y) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        m = std::max(m, std::abs(x.a[i] - y.a[i]));
    return m;
}

inline double max_abs_diff(const std::vector<cplx> &x,
                           const std::vector<cplx> &y) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

/// Frobenius norm.
inline double fro_norm(const DMat &x) {
    double s = 0.0;
    for (const cplx &v : x.a) s += std::norm(v);
    return std::sqrt(s);
}

// --- Kronecker embeddings (qubit 1 is the least significant bit) -----------

/// Embed a 2x2 matrix acting on qubit j of an L-qubit register.
inline DMat embed_1q(const spinsim::Mat2 &u, int j, int L) {
    const std::size_t dim = std::size_t{1} << L;
    const std::size_t mj = std::size_t{1} << (j - 1);
    DMat m(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        const std::size_t b = (col & mj) ? 1 : 0;
        for (std::size_t rb = 0; rb < 2; ++rb) {
            const std::size_t row = (col & ~mj) | (rb ? mj : 0);
            m.at(row, col) += u[rb * 2 + b];
        }
    }
    return m;
}

/// Embed a 4x4 matrix on qubits (j, k); in the 2-bit local index the bit of
/// qubit k is the more significant one, matching apply_2q_unitary.
inline DMat embed_2q(const spinsim::Mat4 &u, int j, int k, int L) {
    const std::size_t dim = std::size_t{1} << L;
    const std::size_t mj = std::size_t{1} << (j - 1);
    const std::size_t mk = std::size_t{1} << (k - 1);
    DMat m(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        const std::size_t b = ((col & mj) ? 1 : 0) | ((col & mk) ? 2 : 0);
        for (std::size_t rb = 0; rb < 4; ++rb) {
            std::size_t row = col & ~(mj | mk);
            if (rb & 1) row |= mj;
            if (rb & 2) row |= mk;
            m.at(row, col) += u[rb * 4 + b];
        }
    }
    return m;
}

/// Spin-1/2 operator S^a = sigma^a / 2 with basis |0> = up.
inline spinsim::Mat2 spin_half(spinsim::Axis axis) {
    using spinsim::Axis;
    switch (axis) {
    case Axis::X: return {0.0, 0.5, 0.5, 0.0};
    case Axis::Y: return {0.0, cplx(0.0, -0.5), cplx(0.0, 0.5), 0.0};
    default: return {0.5, 0.0, 0.0, -0.5};
    }
}

/// Dense H(t) = -sum J^a_{jk} S^a_j S^a_k - sum h^a_j(t) S^a_j built from
/// explicit Kronecker embeddings.
inline DMat dense_hamiltonian(const spinsim::SpinModel &model, double t) {
    const int L = model.num_spins();
    const std::size_t dim = std::size_t{1} << L;
    DMat h(dim);
    for (const auto &c : model.couplings()) {
        const DMat term =
            mul(embed_1q(spin_half(c.axis), c.j, L), embed_1q(spin_half(c.axis), c.k, L));
        for (std::size_t i = 0; i < h.a.size(); ++i) h.a[i] -= c.value * term.a[i];
    }
    for (int j = 1; j <= L; ++j) {
        const auto f = model.field_at(j, t);
        for (int a = 0; a < 3; ++a) {
            if (f[a] == 0.0) continue;
            const DMat term = embed_1q(spin_half(static_cast<spinsim::Axis>(a)), j, L);
            for (std::size_t i = 0; i < h.a.size(); ++i) h.a[i] -= f[a] * term.a[i];
        }
    }
    return h;
}

/// exp(-i tau H) by scaling and squaring with a Taylor series.
inline DMat expm_i(const DMat &h, double tau) {
    DMat x(h.n);
    for (std::size_t i = 0; i < h.a.size(); ++i)
        x.a[i] = cplx(0.0, -tau) * h.a[i];
    int squarings = 0;
    double scale = fro_norm(x);
    while (scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }
    const double f = 1.0 / static_cast<double>(std::size_t{1} << squarings);
    for (auto &v : x.a) v *= f;

    DMat result = DMat::identity(h.n);
    DMat term = DMat::identity(h.n);
    for (int k = 1; k <= 40; ++k) {
        term = mul(term, x);
        for (auto &v : term.a) v /= static_cast<double>(k);
        double tn = 0.0;
        for (std::size_t i = 0; i < term.a.size(); ++i) {
            result.a[i] += term.a[i];
            tn += std::norm(term.a[i]);
        }
        if (std::sqrt(tn) < 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) result = mul(result, result);
    return result;
}

/// Discrete Fourier transform matrix F[r][c] = exp(+2 pi i r c / dim)/sqrt(dim).
inline DMat dft(std::size_t dim) {
    DMat f(dim);
    const double w = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            f.at(r, c) = std::polar(w, two_pi * double(r * c) / double(dim));
    return f;
}

// --- random inputs ----------------------------------------------------------

inline std::vector<cplx> random_vector(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<cplx> v(dim);
    double n = 0.0;
    for (auto &x : v) {
        x = cplx(g(rng), g(rng));
        n += std::norm(x);
    }
    n = 1.0 / std::sqrt(n);
    for (auto &x : v) x *= n;
    return v;
}

inline spinsim::StateVector random_state(int L, std::uint64_t seed) {
    spinsim::StateVector s(static_cast<std::size_t>(L));
    s.amplitudes() = random_vector(s.dimension(), seed);
    return s;
}

/// Random 2x2 unitary from a random Hermitian generator.
inline spinsim::Mat2 random_unitary_1q(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return spinsim::rot_axis(u(rng) * 3.0, u(rng) * 3.0, u(rng) * 3.0);
}

/// Random 4x4 unitary: Gram-Schmidt on a random complex matrix.
inline spinsim::Mat4 random_unitary_2q(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::array<std::array<cplx, 4>, 4> col{};
    for (int c = 0; c < 4; ++c) {
        for (int r = 0; r < 4; ++r) col[c][r] = cplx(g(rng), g(rng));
        for (int p = 0; p < c; ++p) {
            cplx dot{};
            for (int r = 0; r < 4; ++r) dot += std::conj(col[p][r]) * col[c][r];
            for (int r = 0; r < 4; ++r) col[c][r] -= dot * col[p][r];
        }
        double n = 0.0;
        for (int r = 0; r < 4; ++r) n += std::norm(col[c][r]);
        n = 1.0 / std::sqrt(n);
        for (int r = 0; r < 4; ++r) col[c][r] *= n;
    }
    spinsim::Mat4 m{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m[r * 4 + c] = col[c][r];
    return m;
}

/// Random static spin model: dense couplings on all axes plus static fields.
inline spinsim::SpinModel random_model(int L, std::uint64_t seed,
                                       bool with_sin = false) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    spinsim::SpinModel m(L);
    for (int j = 1; j <= L; ++j)
        for (int k = j + 1; k <= L; ++k)
            for (spinsim::Axis a :
                 {spinsim::Axis::X, spinsim::Axis::Y, spinsim::Axis::Z})
                m.set_coupling(j, k, a, u(rng));
    for (int j = 1; j <= L; ++j)
        for (spinsim::Axis a :
             {spinsim::Axis::X, spinsim::Axis::Y, spinsim::Axis::Z}) {
            m.set_static_field(j, a, u(rng));
            if (with_sin)
                m.set_sin_field(j, a, u(rng), 0.5 + std::abs(u(rng)),
                                u(rng) * 3.0);
        }
    return m;
}

/// Dense matrix of the library's own action: feeds every basis vector through
/// the callable and collects the columns.
template <typename Apply>
inline DMat matrix_of(int L, Apply &&apply_to_state) {
    const std::size_t dim = std::size_t{1} << L;
    DMat m(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        spinsim::StateVector s =
            spinsim::StateVector::basis_state(static_cast<std::size_t>(L), c);
        apply_to_state(s);
        for (std::size_t r = 0; r < dim; ++r) m.at(r, c) = s[r];
    }
    return m;
}

} // namespace oracle

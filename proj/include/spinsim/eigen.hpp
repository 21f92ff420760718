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

#include <algorithm>
#include <numeric>

namespace spinsim {

/// Eigenvalues (ascending) and eigenvectors of a real symmetric tridiagonal
/// matrix via implicit-shift QL sweeps. d: diagonal (length n), e: lower
/// off-diagonal with e[i] coupling rows i-1 and i (length n, e[0] unused).
/// vec has n columns of length
/// vec_rows stored row-major; the rotations are accumulated into them.
/// Pass vec_rows = 0 to skip eigenvector accumulation.
inline void tridiag_ql(std::vector<double> &d, std::vector<double> &e,
                       std::vector<cplx> &vec, std::size_t vec_rows) {
    const std::size_t n = d.size();
    if (n == 0) return;
    for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 2.3e-16 * dd)
                    break;
            }
            if (m != l) {
                if (iter++ == 64)
                    throw std::runtime_error("tridiag_ql: no convergence");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (std::size_t i1 = m; i1-- > l;) {
                    double f = s * e[i1];
                    const double b = c * e[i1];
                    r = std::hypot(f, g);
                    e[i1 + 1] = r;
                    if (r == 0.0) {
                        d[i1 + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i1 + 1] - p;
                    r = (d[i1] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i1 + 1] = g + p;
                    g = c * r - b;
                    for (std::size_t k = 0; k < vec_rows; ++k) {
                        const cplx t = vec[k * n + i1 + 1];
                        vec[k * n + i1 + 1] = s * vec[k * n + i1] + c * t;
                        vec[k * n + i1] = c * vec[k * n + i1] - s * t;
                    }
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    // Sort ascending, permuting eigenvector columns along.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
    std::vector<double> ds(n);
    for (std::size_t i = 0; i < n; ++i) ds[i] = d[order[i]];
    d = std::move(ds);
    if (vec_rows) {
        std::vector<cplx> row(n);
        for (std::size_t k = 0; k < vec_rows; ++k) {
            for (std::size_t i = 0; i < n; ++i) row[i] = vec[k * n + order[i]];
            std::copy(row.begin(), row.end(), vec.begin() + k * n);
        }
    }
}

/// Full eigendecomposition of a Hermitian matrix: A = V diag(eval) V^dagger.
/// a is row-major D x D and is destroyed. On return eval holds ascending
/// eigenvalues and vec the eigenvectors as columns (row-major D x D).
/// Householder reduction to real tridiagonal form, then QL iteration.
inline void hermitian_eigen(std::vector<cplx> a, std::size_t dim,
                            std::vector<double> &eval, std::vector<cplx> &vec) {
    const std::size_t n = dim;
    if (a.size() != n * n) throw std::domain_error("hermitian_eigen: bad size");
    vec.assign(n * n, cplx{});
    for (std::size_t i = 0; i < n; ++i) vec[i * n + i] = 1.0;
    eval.assign(n, 0.0);
    if (n == 1) {
        eval[0] = a[0].real();
        return;
    }

    std::vector<double> d(n), esub(n, 0.0);
    std::vector<cplx> subdiag(n, cplx{});
    std::vector<cplx> v(n), w(n);

    for (std::size_t k = 0; k + 2 <= n; ++k) {
        const std::size_t m = n - 1 - k; // length of the column below the diagonal
        if (m == 1) {
            subdiag[k] = a[(k + 1) * n + k];
            continue;
        }
        double xnorm2 = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            v[i] = a[(k + 1 + i) * n + k];
            xnorm2 += std::norm(v[i]);
        }
        const double xnorm = std::sqrt(xnorm2);
        if (xnorm == 0.0) {
            subdiag[k] = 0.0;
            continue;
        }
        const double x0abs = std::abs(v[0]);
        const cplx phase = x0abs == 0.0 ? cplx{1.0} : v[0] / x0abs;
        const cplx beta = -phase * xnorm;
        v[0] -= beta; // v = x - beta e1
        double vnorm2 = 0.0;
        for (std::size_t i = 0; i < m; ++i) vnorm2 += std::norm(v[i]);
        if (vnorm2 == 0.0) {
            subdiag[k] = beta;
            continue;
        }
        const double tau = 2.0 / vnorm2;

        // Update trailing block B = a[k+1.., k+1..]: B -= v w^+ + w v^+
        // with p = tau B v, w = p - (tau/2)(v^+ p) v.
        for (std::size_t i = 0; i < m; ++i) {
            cplx s{};
            const cplx *row = &a[(k + 1 + i) * n + k + 1];
            for (std::size_t j2 = 0; j2 < m; ++j2) s += row[j2] * v[j2];
            w[i] = tau * s;
        }
        cplx vp{};
        for (std::size_t i = 0; i < m; ++i) vp += std::conj(v[i]) * w[i];
        const cplx corr = 0.5 * tau * vp;
        for (std::size_t i = 0; i < m; ++i) w[i] -= corr * v[i];
        for (std::size_t i = 0; i < m; ++i) {
            cplx *row = &a[(k + 1 + i) * n + k + 1];
            for (std::size_t j2 = 0; j2 < m; ++j2)
                row[j2] -= v[i] * std::conj(w[j2]) + w[i] * std::conj(v[j2]);
        }
        subdiag[k] = beta;

        // Accumulate the reflector into vec: vec <- vec (I - tau v v^+),
        // touching columns k+1..n-1 only.
        for (std::size_t r = 0; r < n; ++r) {
            cplx s{};
            cplx *row = &vec[r * n + k + 1];
            for (std::size_t j2 = 0; j2 < m; ++j2) s += row[j2] * v[j2];
            s *= tau;
            for (std::size_t j2 = 0; j2 < m; ++j2) row[j2] -= s * std::conj(v[j2]);
        }
    }

    for (std::size_t i = 0; i < n; ++i) d[i] = a[i * n + i].real();

    // Phase similarity making the subdiagonal real non-negative.
    cplx p = 1.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double mag = std::abs(subdiag[k]);
        esub[k + 1] = mag;
        if (mag > 0.0) p *= subdiag[k] / mag;
        for (std::size_t r = 0; r < n; ++r) vec[r * n + k + 1] *= p;
    }

    // tridiag_ql expects the off-diagonal in e[1..n-1].
    tridiag_ql(d, esub, vec, n);
    eval = std::move(d);
}

} // namespace spinsim

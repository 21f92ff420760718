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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

// Marks element-wise loops with disjoint writes as data parallel. Results
// are bit-identical with any worker count.
#ifdef _OPENMP
#define SPINSIM_PAR_FOR _Pragma("omp parallel for")
#else
#define SPINSIM_PAR_FOR
#endif

namespace spinsim {

using cplx = std::complex<double>;

/// 2x2 complex matrix, row major.
using Mat2 = std::array<cplx, 4>;

/// 4x4 complex matrix, row major. The two-bit row/column index is
/// (bit of the second target << 1) | (bit of the first target).
using Mat4 = std::array<cplx, 16>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

enum class Axis : int { X = 0, Y = 1, Z = 2 };

inline const char *axis_name(Axis a) {
    switch (a) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    default: return "z";
    }
}

inline Mat2 mat2_identity() { return {1.0, 0.0, 0.0, 1.0}; }

inline Mat2 mat2_mul(const Mat2 &a, const Mat2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline Mat2 mat2_dagger(const Mat2 &a) {
    return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

inline Mat4 mat4_identity() {
    Mat4 m{};
    for (int i = 0; i < 4; ++i) m[i * 4 + i] = 1.0;
    return m;
}

inline Mat4 mat4_mul(const Mat4 &a, const Mat4 &b) {
    Mat4 c{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const cplx aik = a[i * 4 + k];
            if (aik == cplx{}) continue;
            for (int j = 0; j < 4; ++j) c[i * 4 + j] += aik * b[k * 4 + j];
        }
    return c;
}

inline Mat4 mat4_dagger(const Mat4 &a) {
    Mat4 c{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) c[i * 4 + j] = std::conj(a[j * 4 + i]);
    return c;
}

inline double mat2_unitarity_defect(const Mat2 &u) {
    const Mat2 p = mat2_mul(mat2_dagger(u), u);
    double d = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            d = std::max(d, std::abs(p[i * 2 + j] - (i == j ? cplx{1.0} : cplx{})));
    return d;
}

inline double mat4_unitarity_defect(const Mat4 &u) {
    const Mat4 p = mat4_mul(mat4_dagger(u), u);
    double d = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            d = std::max(d, std::abs(p[i * 4 + j] - (i == j ? cplx{1.0} : cplx{})));
    return d;
}

} // namespace spinsim

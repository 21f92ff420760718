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

#include <random>
#include <tuple>

namespace spinsim {

/// h(t) = static + amp * sin(freq t + phase). Time t is in radians (the
/// natural e^{-iHt} phase variable); freq is in cycles per t/2pi, so one
/// cycle spans t = 2 pi and a spin in a static field h precesses in step
/// with a sinusoid of freq = h.
struct FieldTerm {
    double static_part = 0.0;
    double amp = 0.0;
    double freq = 0.0;
    double phase = 0.0;

    double at(double t) const {
        double v = static_part;
        if (amp != 0.0) v += amp * std::sin(freq * t + phase);
        return v;
    }
    bool is_static() const { return amp == 0.0; }
    double magnitude_bound() const { return std::abs(static_part) + std::abs(amp); }
};

struct Coupling {
    int j = 0, k = 0; // canonical j < k
    Axis axis = Axis::Z;
    double value = 0.0;
};

/// H(t) = - sum_{j<k,a} J^a_{jk} S^a_j S^a_k - sum_{j,a} h^a_j(t) S^a_j.
///
/// With rotating_field set, a spin's x-axis sinusoid (amp, freq, phase) is
/// interpreted as the rotating drive amp*(S^x sin + S^y cos)(2 pi freq t +
/// phase); y-axis sinusoids must then be absent for that spin.
class SpinModel {
  public:
    SpinModel() = default;
    explicit SpinModel(int num_spins) : num_spins_(num_spins) {
        if (num_spins < 1) throw std::domain_error("SpinModel: bad spin count");
        fields_.assign(static_cast<std::size_t>(num_spins) * 3, FieldTerm{});
    }

    int num_spins() const { return num_spins_; }
    const std::vector<Coupling> &couplings() const { return couplings_; }
    bool rotating_field() const { return rotating_field_; }
    void set_rotating_field(bool flag) { rotating_field_ = flag; }

    void set_coupling(int j, int k, Axis axis, double value) {
        check_spin(j);
        check_spin(k);
        if (j == k) throw std::domain_error("set_coupling: equal spins");
        if (j > k) std::swap(j, k);
        for (auto &c : couplings_)
            if (c.j == j && c.k == k && c.axis == axis) {
                c.value = value;
                return;
            }
        couplings_.push_back(Coupling{j, k, axis, value});
        std::sort(couplings_.begin(), couplings_.end(),
                  [](const Coupling &a, const Coupling &b) {
                      if (a.j != b.j) return a.j < b.j;
                      if (a.k != b.k) return a.k < b.k;
                      return static_cast<int>(a.axis) < static_cast<int>(b.axis);
                  });
    }

    FieldTerm &field(int j, Axis axis) {
        check_spin(j);
        return fields_[static_cast<std::size_t>(j - 1) * 3 +
                       static_cast<std::size_t>(axis)];
    }
    const FieldTerm &field(int j, Axis axis) const {
        check_spin(j);
        return fields_[static_cast<std::size_t>(j - 1) * 3 +
                       static_cast<std::size_t>(axis)];
    }

    void set_static_field(int j, Axis axis, double value) {
        field(j, axis).static_part = value;
    }
    void set_sin_field(int j, Axis axis, double amp, double freq, double phase) {
        FieldTerm &f = field(j, axis);
        f.amp = amp;
        f.freq = freq;
        f.phase = phase;
    }

    /// Instantaneous field (hx, hy, hz) on spin j.
    std::array<double, 3> field_at(int j, double t) const {
        std::array<double, 3> h{field(j, Axis::X).at(t), field(j, Axis::Y).at(t),
                                field(j, Axis::Z).at(t)};
        if (rotating_field_) {
            const FieldTerm &fx = field(j, Axis::X);
            if (fx.amp != 0.0) {
                // Replace the sin part by the rotating pair sin/cos.
                const double arg = two_pi * fx.freq * t + fx.phase;
                h[0] = fx.static_part + fx.amp * std::sin(arg);
                h[1] = field(j, Axis::Y).at(t) + fx.amp * std::cos(arg);
            }
        }
        return h;
    }

    bool is_static() const {
        for (const auto &f : fields_)
            if (f.amp != 0.0) return false;
        return true;
    }

    /// True when H(t) is diagonal in the computational basis for all t:
    /// only z couplings and static z fields.
    bool is_diagonal() const {
        for (const auto &c : couplings_)
            if (c.axis != Axis::Z) return false;
        for (int j = 1; j <= num_spins_; ++j) {
            if (field(j, Axis::X).static_part != 0.0 ||
                field(j, Axis::X).amp != 0.0)
                return false;
            if (field(j, Axis::Y).static_part != 0.0 ||
                field(j, Axis::Y).amp != 0.0)
                return false;
            if (field(j, Axis::Z).amp != 0.0) return false;
        }
        return true;
    }

    /// Triangle-inequality bound: ||H|| <= 1/4 sum|J| + 1/2 sum (|static|+|amp|).
    double norm_bound() const {
        double b = 0.0;
        for (const auto &c : couplings_) b += 0.25 * std::abs(c.value);
        for (int j = 1; j <= num_spins_; ++j)
            for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
                double m = field(j, a).magnitude_bound();
                if (rotating_field_ && a == Axis::Y)
                    m += std::abs(field(j, Axis::X).amp);
                b += 0.5 * m;
            }
        return b;
    }

    /// Diagonal energy of one basis state (valid when is_diagonal()).
    double diagonal_energy(std::size_t index) const {
        double e = 0.0;
        for (const auto &c : couplings_) {
            const double sj = (index >> (c.j - 1)) & 1 ? -0.5 : 0.5;
            const double sk = (index >> (c.k - 1)) & 1 ? -0.5 : 0.5;
            e -= c.value * sj * sk;
        }
        for (int j = 1; j <= num_spins_; ++j) {
            const double hz = field(j, Axis::Z).static_part;
            if (hz != 0.0) e -= hz * ((index >> (j - 1)) & 1 ? -0.5 : 0.5);
        }
        return e;
    }

  private:
    void check_spin(int j) const {
        if (j < 1 || j > num_spins_)
            throw std::domain_error("SpinModel: spin index out of range");
    }

    int num_spins_ = 0;
    std::vector<Coupling> couplings_;
    std::vector<FieldTerm> fields_;
    bool rotating_field_ = false;
};

/// out = H(t) |phi>; the input state is untouched.
inline void apply_h(const StateVector &state, const SpinModel &model, double t,
                    StateVector &out) {
    if (model.num_spins() != static_cast<int>(state.num_qubits()) ||
        out.num_qubits() != state.num_qubits())
        throw std::domain_error("apply_h: size mismatch");
    const std::size_t d = state.dimension();
    const auto &a = state.amplitudes();
    auto &r = out.amplitudes();
    std::fill(r.begin(), r.end(), cplx{});

    for (const auto &c : model.couplings()) {
        const std::size_t mj = std::size_t{1} << (c.j - 1);
        const std::size_t mk = std::size_t{1} << (c.k - 1);
        const double J = c.value;
        if (J == 0.0) continue;
        switch (c.axis) {
        case Axis::Z:
            SPINSIM_PAR_FOR
            for (std::size_t i = 0; i < d; ++i) {
                const bool same = ((i & mj) != 0) == ((i & mk) != 0);
                r[i] += (same ? -0.25 : 0.25) * J * a[i];
            }
            break;
        case Axis::X:
            SPINSIM_PAR_FOR
            for (std::size_t i = 0; i < d; ++i)
                r[i] += -0.25 * J * a[i ^ mj ^ mk];
            break;
        case Axis::Y:
            SPINSIM_PAR_FOR
            for (std::size_t i = 0; i < d; ++i) {
                const bool same = ((i & mj) != 0) == ((i & mk) != 0);
                r[i] += (same ? 0.25 : -0.25) * J * a[i ^ mj ^ mk];
            }
            break;
        }
    }

    for (int j = 1; j <= model.num_spins(); ++j) {
        const auto h = model.field_at(j, t);
        const std::size_t mj = std::size_t{1} << (j - 1);
        if (h[0] != 0.0) {
            SPINSIM_PAR_FOR
            for (std::size_t i = 0; i < d; ++i)
                r[i] += -0.5 * h[0] * a[i ^ mj];
        }
        if (h[1] != 0.0) {
            SPINSIM_PAR_FOR
            for (std::size_t i = 0; i < d; ++i) {
                // (S^y a)(..0..) = -(i/2) a(..1..); (S^y a)(..1..) = +(i/2) a(..0..)
                const cplx f = (i & mj) ? cplx(0.0, 0.5) : cplx(0.0, -0.5);
                r[i] += -h[1] * f * a[i ^ mj];
            }
        }
        if (h[2] != 0.0) {
            SPINSIM_PAR_FOR
            for (std::size_t i = 0; i < d; ++i)
                r[i] += -0.5 * h[2] * ((i & mj) ? -1.0 : 1.0) * a[i];
        }
    }
}

/// Duration is stored as tau / 2 pi; the model is held constant over the
/// instruction's local clock [0, tau].
struct Microinstruction {
    std::string label;
    double duration_over_2pi = 0.0;
    SpinModel model;
};

// --- model builders -------------------------------------------------------

struct IsingEntry {
    int j, k;
    double value;
};

/// z-z couplings plus arbitrary static fields.
inline SpinModel build_ising(int num_spins, const std::vector<IsingEntry> &zz,
                             const std::vector<std::tuple<int, Axis, double>> &fields) {
    SpinModel m(num_spins);
    for (const auto &e : zz) m.set_coupling(e.j, e.k, Axis::Z, e.value);
    for (const auto &[j, axis, v] : fields) m.set_static_field(j, axis, v);
    return m;
}

inline constexpr double chloroform_J = -0.43e-6;
inline constexpr double chloroform_h1z = 1.0;
inline constexpr double chloroform_h2z = 0.25;

/// Two-spin liquid-state NMR model: H = -J S1z S2z - h1z S1z - h2z S2z.
inline SpinModel build_chloroform() {
    SpinModel m(2);
    m.set_coupling(1, 2, Axis::Z, chloroform_J);
    m.set_static_field(1, Axis::Z, chloroform_h1z);
    m.set_static_field(2, Axis::Z, chloroform_h2z);
    return m;
}

/// Central pair with strong Heisenberg coupling J0 (from (S1+S2)^2 with the
/// constant dropped) plus L-2 bath spins, each Heisenberg-coupled to both
/// central spins with a random strength in (0, j_max).
inline SpinModel build_spin_bath(int num_spins, double j0, double j_max,
                                 std::uint64_t seed) {
    if (num_spins < 3) throw std::domain_error("build_spin_bath: need >= 3 spins");
    SpinModel m(num_spins);
    // H = J0 (S1+S2)^2 + sum_n Jn In.(S1+S2); our sign convention stores -J.
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) m.set_coupling(1, 2, a, -2.0 * j0);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, j_max);
    for (int n = 3; n <= num_spins; ++n) {
        const double jn = dist(rng);
        for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
            m.set_coupling(1, n, a, -jn);
            m.set_coupling(2, n, a, -jn);
        }
    }
    return m;
}

/// Alternating-site exchange chain: nearest-neighbour Heisenberg couplings
/// that switch between E0 and 2 E0 along the chain.
inline SpinModel build_quantum_dot(int num_spins, double e0) {
    SpinModel m(num_spins);
    for (int j = 1; j < num_spins; ++j) {
        const double e = (j % 2 == 1) ? e0 : 2.0 * e0;
        for (Axis a : {Axis::X, Axis::Y, Axis::Z}) m.set_coupling(j, j + 1, a, -e);
    }
    return m;
}

/// Charge-qubit chain: per-site x tunneling amplitude and z bias, plus
/// nearest-neighbour z-z couplings.
inline SpinModel build_josephson(int num_spins, const std::vector<double> &ej,
                                 const std::vector<double> &ei,
                                 const std::vector<double> &hz) {
    if (static_cast<int>(ej.size()) != num_spins ||
        static_cast<int>(hz.size()) != num_spins ||
        static_cast<int>(ei.size()) + 1 != num_spins)
        throw std::domain_error("build_josephson: bad schedule sizes");
    SpinModel m(num_spins);
    for (int j = 1; j <= num_spins; ++j) {
        m.set_static_field(j, Axis::X, ej[j - 1]);
        m.set_static_field(j, Axis::Z, hz[j - 1]);
    }
    for (int j = 1; j < num_spins; ++j)
        m.set_coupling(j, j + 1, Axis::Z, ei[j - 1]);
    return m;
}

/// Spins 1 and 2 in |up down>, every bath spin an independent uniformly
/// random pure state; product state.
inline StateVector random_bath_state(int num_spins, std::uint64_t seed) {
    if (num_spins < 3) throw std::domain_error("random_bath_state: need >= 3 spins");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    // Single-spin factors: spin 1 |0> (up), spin 2 |1> (down).
    std::vector<std::array<cplx, 2>> f(static_cast<std::size_t>(num_spins));
    f[0] = {1.0, 0.0};
    f[1] = {0.0, 1.0};
    for (int n = 3; n <= num_spins; ++n) {
        const double ct = 2.0 * uni(rng) - 1.0; // cos(theta) uniform
        const double theta = std::acos(ct);
        const double phi = two_pi * uni(rng);
        f[n - 1] = {std::cos(0.5 * theta),
                    std::polar(std::sin(0.5 * theta), phi)};
    }
    StateVector s(static_cast<std::size_t>(num_spins));
    auto &amp = s.amplitudes();
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        cplx v = 1.0;
        for (int n = 0; n < num_spins; ++n) v *= f[n][(i >> n) & 1];
        amp[i] = v;
    }
    return s;
}

} // namespace spinsim

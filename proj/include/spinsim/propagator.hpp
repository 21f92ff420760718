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

#include "eigen.hpp"
#include "spin_model.hpp"

namespace spinsim {

enum class Backend {
    Ideal, // gate programs only; no Hamiltonian integration
    Diag,
    Chebyshev,
    Lanczos,
    ST2Pair,
    ST4Pair,
    ST2XYZ,
    ST4XYZ,
};

inline const char *backend_name(Backend b) {
    switch (b) {
    case Backend::Ideal: return "ideal";
    case Backend::Diag: return "diag";
    case Backend::Chebyshev: return "chebyshev";
    case Backend::Lanczos: return "lanczos";
    case Backend::ST2Pair: return "st2-pair";
    case Backend::ST4Pair: return "st4-pair";
    case Backend::ST2XYZ: return "st2-xyz";
    default: return "st4-xyz";
    }
}

inline Backend backend_from_name(const std::string &name) {
    for (Backend b : {Backend::Ideal, Backend::Diag, Backend::Chebyshev,
                      Backend::Lanczos, Backend::ST2Pair, Backend::ST4Pair,
                      Backend::ST2XYZ, Backend::ST4XYZ})
        if (name == backend_name(b)) return b;
    throw std::domain_error("unknown backend: " + name);
}

struct PropagatorConfig {
    Backend backend = Backend::Chebyshev;
    double dt = 0.01 * two_pi;  // substep for Suzuki and time-dependent driving
    int lanczos_order = 5;
    bool lanczos_reortho = false;
    double cheb_kappa = 1e-17;
    std::size_t cheb_max_terms = 10'000'000;
    std::size_t diag_max_qubits = 13;
};

// --- Bessel coefficients ----------------------------------------------------

/// J_0(z) .. J_K(z) by downward (Miller) recurrence with rescaling,
/// normalized through J0 + 2 sum J_{2k} = 1. Needs z >= 0.
inline std::vector<double> bessel_coeffs(double z, std::size_t K) {
    std::vector<double> out(K + 1, 0.0);
    if (z == 0.0) {
        out[0] = 1.0;
        return out;
    }
    const std::size_t start =
        K + 60 +
        static_cast<std::size_t>(z + 12.0 * std::cbrt(z + 1.0) + 40.0);
    double jp = 0.0, jc = 1e-300;
    double norm = 0.0; // accumulates J0 + 2 sum_{even k>0} J_k, pre-normalization
    for (std::size_t k = start; k-- > 0;) {
        const double jm = (2.0 * static_cast<double>(k + 1) / z) * jc - jp;
        jp = jc;
        jc = jm;
        if (k + 1 <= K) out[k + 1] = jp;
        if ((k + 1) % 2 == 0 && k + 1 > 0) norm += 2.0 * jp;
        if (std::abs(jc) > 1e260) {
            jc *= 1e-260;
            jp *= 1e-260;
            norm *= 1e-260;
            for (auto &v : out) v *= 1e-260;
        }
    }
    out[0] = jc;
    norm += jc;
    for (auto &v : out) v /= norm;
    return out;
}

// --- Chebyshev expansion ----------------------------------------------------

namespace detail {

/// Truncation order: smallest K with |J_k(z)| < kappa holding for the next
/// 50 indices; full coefficient table up to that point.
inline std::pair<std::size_t, std::vector<double>>
chebyshev_coefficients(double z, double kappa, std::size_t max_terms) {
    const std::size_t cap =
        static_cast<std::size_t>(z + 14.0 * std::cbrt(z + 1.0) + 300.0);
    if (cap > max_terms + 350)
        throw std::runtime_error("chebyshev: expansion order exceeds cap");
    std::vector<double> j = bessel_coeffs(z, cap);
    std::size_t K = cap;
    std::size_t below = 0;
    for (std::size_t k = 1; k <= cap; ++k) {
        if (std::abs(j[k]) < kappa) {
            if (++below == 50) {
                K = k - 50;
                break;
            }
        } else {
            below = 0;
        }
    }
    return {K, std::move(j)};
}

} // namespace detail

/// One leap |phi> <- exp(-i tau H(t_mid)) |phi> through the Chebyshev series
/// with Bessel coefficients; effectively exact at the chosen kappa.
inline void kernel_chebyshev(StateVector &state, const SpinModel &model,
                             double t_mid, double tau, double kappa,
                             std::size_t max_terms = 10'000'000) {
    const double b = model.norm_bound();
    const double z = std::abs(tau) * b;
    if (z == 0.0) return;
    auto [K, jk] = detail::chebyshev_coefficients(z, kappa, max_terms);
    const double sgn = tau >= 0.0 ? 1.0 : -1.0; // J_k(-z) = (-1)^k J_k(z)

    const std::size_t d = state.dimension();
    StateVector vprev = state;       // T0 |phi>
    StateVector vcur(state.num_qubits()), tmp(state.num_qubits());
    apply_h(vprev, model, t_mid, vcur); // H |phi>
    {
        auto &vc = vcur.amplitudes();
        const double inv = 1.0 / b;
        for (std::size_t i = 0; i < d; ++i)
            vc[i] = cplx(0.0, inv) * vc[i]; // T1 = i H/b
    }
    // acc = J0(-z) T0 + 2 J1(-z) T1 + ...
    std::vector<cplx> acc(d);
    {
        const auto &v0 = vprev.amplitudes();
        const auto &v1 = vcur.amplitudes();
        const double c0 = jk[0];
        const double c1 = -2.0 * sgn * jk[1]; // (-1)^1 for positive tau
        for (std::size_t i = 0; i < d; ++i) acc[i] = c0 * v0[i] + c1 * v1[i];
    }
    for (std::size_t k = 2; k <= K; ++k) {
        // v_next = 2 i (H/b) v_cur + v_prev, written into vprev
        apply_h(vcur, model, t_mid, tmp);
        auto &vp = vprev.amplitudes();
        const auto &tm = tmp.amplitudes();
        const double inv2 = 2.0 / b;
        for (std::size_t i = 0; i < d; ++i)
            vp[i] += cplx(0.0, inv2) * tm[i];
        std::swap(vprev, vcur);
        const double ck = 2.0 * (sgn > 0 ? (k % 2 == 0 ? 1.0 : -1.0) : 1.0) * jk[k];
        const auto &vn = vcur.amplitudes();
        for (std::size_t i = 0; i < d; ++i) acc[i] += ck * vn[i];
    }
    state.amplitudes().assign(acc.begin(), acc.end());
}

// --- exact diagonalization --------------------------------------------------

/// Dense H(t_mid) built column-by-column, eigendecomposed in-repo, applied
/// as V exp(-i tau Lambda) V^dagger.
inline void kernel_diag(StateVector &state, const SpinModel &model, double t_mid,
                        double tau, std::size_t max_qubits = 13) {
    if (state.num_qubits() > max_qubits)
        throw std::runtime_error("diag backend: dimension cap exceeded");
    const std::size_t d = state.dimension();
    std::vector<cplx> h(d * d);
    StateVector col(state.num_qubits()), basis(state.num_qubits());
    for (std::size_t c = 0; c < d; ++c) {
        basis.set_basis(c);
        apply_h(basis, model, t_mid, col);
        for (std::size_t r = 0; r < d; ++r) h[r * d + c] = col[r];
    }
    std::vector<double> eval;
    std::vector<cplx> vec;
    hermitian_eigen(std::move(h), d, eval, vec);

    std::vector<cplx> y(d, cplx{});
    const auto &a = state.amplitudes();
    for (std::size_t c = 0; c < d; ++c) {
        cplx s{};
        for (std::size_t r = 0; r < d; ++r) s += std::conj(vec[r * d + c]) * a[r];
        y[c] = s * std::polar(1.0, -tau * eval[c]);
    }
    auto &out = state.amplitudes();
    std::fill(out.begin(), out.end(), cplx{});
    for (std::size_t r = 0; r < d; ++r) {
        cplx s{};
        const cplx *row = &vec[r * d];
        for (std::size_t c = 0; c < d; ++c) s += row[c] * y[c];
        out[r] = s;
    }
}

// --- short iterative Lanczos -------------------------------------------------

inline void kernel_lanczos(StateVector &state, const SpinModel &model,
                           double t_mid, double tau, int order,
                           bool reortho = false) {
    if (order < 1) throw std::domain_error("lanczos: order must be >= 1");
    const std::size_t d = state.dimension();
    const int nmax = order;
    std::vector<StateVector> v;
    v.reserve(static_cast<std::size_t>(nmax));
    v.push_back(state);
    const double n0 = v[0].norm();
    v[0].scale(1.0 / n0);

    std::vector<double> alpha, beta;
    StateVector w(state.num_qubits());
    int n = nmax;
    for (int k = 0; k < nmax; ++k) {
        apply_h(v[static_cast<std::size_t>(k)], model, t_mid, w);
        const double ak =
            v[static_cast<std::size_t>(k)].inner_product(w).real();
        alpha.push_back(ak);
        if (k == nmax - 1) break;
        auto &wa = w.amplitudes();
        const auto &vk = v[static_cast<std::size_t>(k)].amplitudes();
        for (std::size_t i = 0; i < d; ++i) wa[i] -= ak * vk[i];
        if (k > 0) {
            const double bk = beta.back();
            const auto &vm = v[static_cast<std::size_t>(k - 1)].amplitudes();
            for (std::size_t i = 0; i < d; ++i) wa[i] -= bk * vm[i];
        }
        if (reortho)
            for (const auto &u : v) {
                const cplx ov = u.inner_product(w);
                const auto &ua = u.amplitudes();
                for (std::size_t i = 0; i < d; ++i) wa[i] -= ov * ua[i];
            }
        const double bk1 = w.norm();
        if (bk1 < 1e-14) { // invariant subspace found; exact truncation
            n = k + 1;
            break;
        }
        beta.push_back(bk1);
        w.scale(1.0 / bk1);
        v.push_back(w);
    }
    n = std::min<int>(n, static_cast<int>(alpha.size()));

    // exp(-i tau T) e1 for the n x n tridiagonal T.
    const std::size_t nn = static_cast<std::size_t>(n);
    std::vector<double> td(alpha.begin(), alpha.begin() + n);
    std::vector<double> te(nn, 0.0);
    for (std::size_t i = 1; i < nn; ++i) te[i] = beta[i - 1];
    std::vector<cplx> z(nn * nn, cplx{});
    for (std::size_t i = 0; i < nn; ++i) z[i * nn + i] = 1.0;
    tridiag_ql(td, te, z, nn);
    std::vector<cplx> y(nn, cplx{});
    for (std::size_t c = 0; c < nn; ++c) {
        const cplx proj = std::conj(z[0 * nn + c]); // <eigvec_c | e1>
        const cplx ph = std::polar(1.0, -tau * td[c]);
        for (std::size_t r = 0; r < nn; ++r) y[r] += z[r * nn + c] * ph * proj;
    }

    auto &out = state.amplitudes();
    std::fill(out.begin(), out.end(), cplx{});
    for (std::size_t k = 0; k < nn; ++k) {
        const auto &vk = v[k].amplitudes();
        const cplx c = n0 * y[k];
        for (std::size_t i = 0; i < d; ++i) out[i] += c * vk[i];
    }
}

// --- Suzuki product formulas -------------------------------------------------

enum class SuzukiSplit { Pair, XYZ };

/// exp(i tau S.h): exact single-spin rotation generated by a field vector.
inline Mat2 single_spin_exponential(const std::array<double, 3> &h, double tau) {
    return rot_axis(tau * h[0], tau * h[1], tau * h[2]);
}

/// exp(i tau (Jx SxSx + Jy SySy + Jz SzSz)) on a pair, closed form.
inline Mat4 pair_exponential(double jx, double jy, double jz, double tau) {
    const double a = 0.25 * jz, b = 0.25 * (jx - jy), c = 0.25 * (jx + jy);
    const cplx ea = std::polar(1.0, a * tau), eam = std::polar(1.0, -a * tau);
    const double cb = std::cos(b * tau), sb = std::sin(b * tau);
    const double cc = std::cos(c * tau), sc = std::sin(c * tau);
    Mat4 m{};
    m[0 * 4 + 0] = ea * cb;
    m[0 * 4 + 3] = ea * cplx(0.0, sb);
    m[1 * 4 + 1] = eam * cc;
    m[1 * 4 + 2] = eam * cplx(0.0, sc);
    m[2 * 4 + 1] = eam * cplx(0.0, sc);
    m[2 * 4 + 2] = eam * cc;
    m[3 * 4 + 0] = ea * cplx(0.0, sb);
    m[3 * 4 + 3] = ea * cb;
    return m;
}

namespace detail {

struct PairTerm {
    int j, k;
    double jx = 0.0, jy = 0.0, jz = 0.0;
};

/// Per-substep factor data shared by the Suzuki kernels.
struct SuzukiPlan {
    const SpinModel *model = nullptr;
    std::vector<int> field_spins;
    std::vector<PairTerm> pairs;           // ascending (j,k)
    // XYZ split: per axis, the coupled-pair diagonal sum_J S^z S^z table and
    // the list of spins to rotate.
    std::array<std::vector<double>, 3> diag;
    std::array<std::vector<int>, 3> axis_spins;
    SuzukiSplit split = SuzukiSplit::Pair;

    SuzukiPlan(const SpinModel &m, SuzukiSplit s, std::size_t dim) : model(&m), split(s) {
        for (int j = 1; j <= m.num_spins(); ++j) {
            bool any = false;
            for (Axis a : {Axis::X, Axis::Y, Axis::Z})
                if (m.field(j, a).static_part != 0.0 || m.field(j, a).amp != 0.0)
                    any = true;
            if (any) field_spins.push_back(j);
        }
        if (split == SuzukiSplit::Pair) {
            for (const auto &c : m.couplings()) {
                PairTerm *pt = nullptr;
                for (auto &p : pairs)
                    if (p.j == c.j && p.k == c.k) pt = &p;
                if (!pt) {
                    pairs.push_back(PairTerm{c.j, c.k});
                    pt = &pairs.back();
                }
                if (c.axis == Axis::X) pt->jx = c.value;
                else if (c.axis == Axis::Y) pt->jy = c.value;
                else pt->jz = c.value;
            }
        } else {
            for (int ax = 0; ax < 3; ++ax) {
                std::vector<const Coupling *> cs;
                for (const auto &c : m.couplings())
                    if (static_cast<int>(c.axis) == ax && c.value != 0.0)
                        cs.push_back(&c);
                if (cs.empty()) continue;
                auto &tab = diag[static_cast<std::size_t>(ax)];
                tab.assign(dim, 0.0);
                std::vector<bool> used(static_cast<std::size_t>(m.num_spins()) + 1,
                                       false);
                for (const auto *c : cs) {
                    const std::size_t mj = std::size_t{1} << (c->j - 1);
                    const std::size_t mk = std::size_t{1} << (c->k - 1);
                    for (std::size_t i = 0; i < dim; ++i) {
                        const bool same = ((i & mj) != 0) == ((i & mk) != 0);
                        tab[i] += (same ? 0.25 : -0.25) * c->value;
                    }
                    used[static_cast<std::size_t>(c->j)] = true;
                    used[static_cast<std::size_t>(c->k)] = true;
                }
                for (int j = 1; j <= m.num_spins(); ++j)
                    if (used[static_cast<std::size_t>(j)])
                        axis_spins[static_cast<std::size_t>(ax)].push_back(j);
            }
        }
    }

    /// Diagonal phase factor exp(i tau sum J S^z S^z) from a cached table.
    void apply_diag(StateVector &state, int axis, double tau) const {
        const auto &tab = diag[static_cast<std::size_t>(axis)];
        if (tab.empty()) return;
        auto &a = state.amplitudes();
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] *= std::polar(1.0, tau * tab[i]);
    }

    /// First-order brick at fixed fields; forward = singles then two-spin
    /// factors in canonical order, reverse = mirrored.
    void apply_u1(StateVector &state, double t_mid, double tau, bool forward) const {
        if (forward) {
            apply_singles(state, t_mid, tau, true);
            apply_couplers(state, tau, true);
        } else {
            apply_couplers(state, tau, false);
            apply_singles(state, t_mid, tau, false);
        }
    }

    void apply_singles(StateVector &state, double t_mid, double tau,
                       bool forward) const {
        const auto go = [&](int j) {
            state.apply_1q_unitary(
                j, single_spin_exponential(model->field_at(j, t_mid), tau), false);
        };
        if (forward)
            for (auto it = field_spins.begin(); it != field_spins.end(); ++it) go(*it);
        else
            for (auto it = field_spins.rbegin(); it != field_spins.rend(); ++it)
                go(*it);
    }

    void apply_couplers(StateVector &state, double tau, bool forward) const {
        if (split == SuzukiSplit::Pair) {
            const auto go = [&](const PairTerm &p) {
                state.apply_2q_unitary(p.j, p.k,
                                       pair_exponential(p.jx, p.jy, p.jz, tau),
                                       false);
            };
            if (forward)
                for (auto it = pairs.begin(); it != pairs.end(); ++it) go(*it);
            else
                for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) go(*it);
        } else {
            // z factor, then x = Ybar diag Y, then y = X diag Xbar
            // (in application order: Y ... Ybar and Xbar ... X).
            const auto do_z = [&] { apply_diag(state, 2, tau); };
            const auto do_x = [&] {
                if (diag[0].empty()) return;
                for (int j : axis_spins[0]) state.apply_1q_unitary(j, gate_y(), false);
                apply_diag(state, 0, tau);
                for (int j : axis_spins[0])
                    state.apply_1q_unitary(j, gate_ybar(), false);
            };
            const auto do_y = [&] {
                if (diag[1].empty()) return;
                for (int j : axis_spins[1])
                    state.apply_1q_unitary(j, gate_xbar(), false);
                apply_diag(state, 1, tau);
                for (int j : axis_spins[1]) state.apply_1q_unitary(j, gate_x(), false);
            };
            if (forward) {
                do_z();
                do_x();
                do_y();
            } else {
                do_y();
                do_x();
                do_z();
            }
        }
    }

    void step2(StateVector &state, double t_mid, double tau) const {
        apply_u1(state, t_mid, 0.5 * tau, true);
        apply_u1(state, t_mid, 0.5 * tau, false);
    }

    void step4(StateVector &state, double t_mid, double tau) const {
        const double p = 1.0 / (4.0 - std::pow(4.0, 1.0 / 3.0));
        step2(state, t_mid, p * tau);
        step2(state, t_mid, p * tau);
        step2(state, t_mid, (1.0 - 4.0 * p) * tau);
        step2(state, t_mid, p * tau);
        step2(state, t_mid, p * tau);
    }
};

} // namespace detail

inline void kernel_st(StateVector &state, const SpinModel &model, double t_mid,
                      double tau, int order, SuzukiSplit split) {
    detail::SuzukiPlan plan(model, split, state.dimension());
    if (order == 2)
        plan.step2(state, t_mid, tau);
    else if (order == 4)
        plan.step4(state, t_mid, tau);
    else
        throw std::domain_error("kernel_st: order must be 2 or 4");
}

// --- piecewise-constant driver ------------------------------------------------

/// Advance the state over [t0, t0 + tau]. The interval is cut into substeps
/// of cfg.dt (last one shorter), the fields frozen at each substep midpoint.
/// Static special cases: a diagonal model is applied as exact phases in one
/// pass (identical to the stepped product, which telescopes), and static
/// models under Diag/Chebyshev take the whole interval in a single leap.
inline void evolve(StateVector &state, const SpinModel &model, double t0,
                   double tau, const PropagatorConfig &cfg) {
    if (tau == 0.0) return;
    if (tau < 0.0) throw std::domain_error("evolve: negative duration");
    if (cfg.backend == Backend::Ideal)
        throw std::domain_error("evolve: ideal backend has no Hamiltonian");
    if (model.num_spins() != static_cast<int>(state.num_qubits()))
        throw std::domain_error("evolve: size mismatch");

    if (model.is_diagonal()) {
        auto &a = state.amplitudes();
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] *= std::polar(1.0, -tau * model.diagonal_energy(i));
        return;
    }
    const bool static_leap =
        model.is_static() &&
        (cfg.backend == Backend::Diag || cfg.backend == Backend::Chebyshev);

    const double dt = cfg.dt;
    if (dt <= 0.0) throw std::domain_error("evolve: dt must be positive");
    const std::size_t nsub =
        static_leap ? 1
                    : static_cast<std::size_t>(std::ceil(tau / dt - 1e-12));
    double t = t0;
    for (std::size_t s = 0; s < nsub; ++s) {
        const double end = (s + 1 == nsub) ? t0 + tau : t0 + dt * double(s + 1);
        const double h = end - t;
        const double tm = t + 0.5 * h;
        switch (cfg.backend) {
        case Backend::Diag:
            kernel_diag(state, model, tm, h, cfg.diag_max_qubits);
            break;
        case Backend::Chebyshev:
            kernel_chebyshev(state, model, tm, h, cfg.cheb_kappa,
                             cfg.cheb_max_terms);
            break;
        case Backend::Lanczos:
            kernel_lanczos(state, model, tm, h, cfg.lanczos_order,
                           cfg.lanczos_reortho);
            break;
        case Backend::ST2Pair:
            kernel_st(state, model, tm, h, 2, SuzukiSplit::Pair);
            break;
        case Backend::ST4Pair:
            kernel_st(state, model, tm, h, 4, SuzukiSplit::Pair);
            break;
        case Backend::ST2XYZ:
            kernel_st(state, model, tm, h, 2, SuzukiSplit::XYZ);
            break;
        case Backend::ST4XYZ:
            kernel_st(state, model, tm, h, 4, SuzukiSplit::XYZ);
            break;
        case Backend::Ideal: break;
        }
        t = end;
    }
}

/// Run one microinstruction; its local clock starts at zero.
inline void run_micro(StateVector &state, const Microinstruction &mi,
                      const PropagatorConfig &cfg) {
    evolve(state, mi.model, 0.0, mi.duration_over_2pi * two_pi, cfg);
}

} // namespace spinsim

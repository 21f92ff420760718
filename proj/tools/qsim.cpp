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

// Command-line front end: parse a program file, pick an integration backend,
// run it, and report per-qubit expectation values.

#include "spinsim/program_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace spinsim;
using nlohmann::json;

namespace {

struct Options {
    std::string program;
    std::string backend = "chebyshev";
    double dt = 0.01; // t/2pi
    int lanczos_order = 5;
    double cheb_kappa = 1e-17;
    double s = 8.0;
    std::uint64_t seed = 1;
    bool dump_amplitudes = false;
    std::string format = "table";
    int workers = 0;
    bool selftest = false;
    std::string bench;
};

PropagatorConfig make_config(const Options &opt) {
    PropagatorConfig cfg;
    cfg.backend = backend_from_name(opt.backend);
    cfg.dt = opt.dt * two_pi;
    cfg.lanczos_order = opt.lanczos_order;
    cfg.cheb_kappa = opt.cheb_kappa;
    return cfg;
}

// --- report output ----------------------------------------------------------

void print_table(const RunReport &rep) {
    std::printf("backend: %s\n", rep.backend.c_str());
    for (const auto &cp : rep.checkpoints) {
        std::printf("%s\n", cp.label.c_str());
        std::printf("  qubit     qx     qy     qz\n");
        for (std::size_t j = 0; j < cp.qubits.size(); ++j)
            std::printf("  %5zu   %4.2f   %4.2f   %4.2f\n", j + 1,
                        cp.qubits[j].qx, cp.qubits[j].qy, cp.qubits[j].qz);
    }
    for (const auto &a : rep.assertions)
        std::printf("assert qz %d: expected %.6g got %.6g tol %.2g -> %s\n",
                    a.qubit, a.expected, a.actual, a.tol,
                    a.passed ? "pass" : "FAIL");
    if (!rep.amplitudes.empty()) {
        std::printf("amplitudes\n");
        for (std::size_t i = 0; i < rep.amplitudes.size(); ++i)
            std::printf("  %5zu  %+.15e %+.15e\n", i, rep.amplitudes[i].real(),
                        rep.amplitudes[i].imag());
    }
    std::printf("elapsed: %.3f s\n", rep.seconds);
}

void print_csv(const RunReport &rep) {
    std::printf("checkpoint,qubit,qx,qy,qz\n");
    for (const auto &cp : rep.checkpoints)
        for (std::size_t j = 0; j < cp.qubits.size(); ++j)
            std::printf("%s,%zu,%.15g,%.15g,%.15g\n", cp.label.c_str(), j + 1,
                        cp.qubits[j].qx, cp.qubits[j].qy, cp.qubits[j].qz);
    for (std::size_t i = 0; i < rep.amplitudes.size(); ++i)
        std::printf("amplitude,%zu,%.15g,%.15g,%.15g\n", i,
                    rep.amplitudes[i].real(), rep.amplitudes[i].imag(),
                    std::norm(rep.amplitudes[i]));
}

void print_json_lines(const RunReport &rep) {
    for (const auto &cp : rep.checkpoints)
        for (std::size_t j = 0; j < cp.qubits.size(); ++j) {
            json o = {{"type", "checkpoint"}, {"label", cp.label},
                      {"qubit", j + 1},       {"qx", cp.qubits[j].qx},
                      {"qy", cp.qubits[j].qy}, {"qz", cp.qubits[j].qz}};
            std::cout << o.dump() << "\n";
        }
    for (const auto &a : rep.assertions) {
        json o = {{"type", "assertion"}, {"qubit", a.qubit},
                  {"expected", a.expected}, {"actual", a.actual},
                  {"tol", a.tol},          {"passed", a.passed}};
        std::cout << o.dump() << "\n";
    }
    for (std::size_t i = 0; i < rep.amplitudes.size(); ++i) {
        json o = {{"type", "amplitude"},
                  {"index", i},
                  {"re", rep.amplitudes[i].real()},
                  {"im", rep.amplitudes[i].imag()}};
        std::cout << o.dump() << "\n";
    }
    json s = {{"type", "summary"},
              {"backend", rep.backend},
              {"seconds", rep.seconds},
              {"all_passed", rep.all_passed()}};
    std::cout << s.dump() << "\n";
}

int run_program_file(const Options &opt) {
    const Program prog = load_program(opt.program, opt.s);
    const RunReport rep = run_program(prog, make_config(opt), opt.dump_amplitudes);
    if (opt.format == "csv")
        print_csv(rep);
    else if (opt.format == "json-lines")
        print_json_lines(rep);
    else
        print_table(rep);
    if (!rep.all_passed()) {
        std::fprintf(stderr, "error: program assertion failed\n");
        return 1;
    }
    return 0;
}

// --- benchmark presets -------------------------------------------------------

struct BenchPreset {
    int num_spins;
    int steps;
};

int run_bench(const Options &opt) {
    static const std::map<std::string, BenchPreset> presets = {
        {"spin-bath-10", {10, 400}},
        {"spin-bath-12", {12, 400}},
        {"spin-bath-18", {18, 40}},
        {"spin-bath-22", {22, 8}},
    };
    const auto it = presets.find(opt.bench);
    if (it == presets.end()) {
        std::fprintf(stderr, "error: unknown bench preset '%s'\n",
                     opt.bench.c_str());
        return 1;
    }
    const BenchPreset preset = it->second;
    // Working set: a handful of state vectors of 16 bytes per amplitude.
    const double bytes =
        16.0 * std::pow(2.0, preset.num_spins) * 8.0;
    if (bytes > 8e9) {
        std::fprintf(stderr, "error: preset needs ~%.1f GB, refusing\n",
                     bytes / 1e9);
        return 1;
    }

    const double tau = 0.01 * two_pi;
    const SpinModel model = build_spin_bath(preset.num_spins, 8.0, 0.4, opt.seed);
    const StateVector init = random_bath_state(preset.num_spins, opt.seed + 1);

    const auto run_backend = [&](Backend b, int lanczos_order, StateVector &out) {
        PropagatorConfig cfg;
        cfg.backend = b;
        cfg.dt = tau;
        cfg.lanczos_order = lanczos_order;
        cfg.diag_max_qubits = 13;
        out = init;
        const auto t0 = std::chrono::steady_clock::now();
        if (b == Backend::Chebyshev || b == Backend::Diag) {
            // Static model: one exact leap over the full interval.
            evolve(out, model, 0.0, tau * preset.steps, cfg);
        } else {
            for (int s = 0; s < preset.steps; ++s)
                evolve(out, model, s * tau, tau, cfg);
        }
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    };

    StateVector ref = init;
    const double t_ref = run_backend(Backend::Chebyshev, 0, ref);

    struct Row {
        const char *name;
        Backend backend;
        int order;
    };
    std::vector<Row> rows = {{"lanczos (N=5)", Backend::Lanczos, 5},
                             {"lanczos (N=10)", Backend::Lanczos, 10},
                             {"st2-pair", Backend::ST2Pair, 0},
                             {"st4-pair", Backend::ST4Pair, 0},
                             {"st2-xyz", Backend::ST2XYZ, 0},
                             {"st4-xyz", Backend::ST4XYZ, 0}};

    std::printf("preset %s: %d spins, %d steps of tau/2pi = 0.01, seed %llu\n",
                opt.bench.c_str(), preset.num_spins, preset.steps,
                static_cast<unsigned long long>(opt.seed));
    std::printf("%-16s %12s %12s\n", "backend", "error", "cpu[s]");
    std::printf("%-16s %12s %12.2f\n", "chebyshev", "reference", t_ref);
    if (preset.num_spins <= 13) {
        StateVector out = init;
        const double t = run_backend(Backend::Diag, 0, out);
        std::printf("%-16s %12.2e %12.2f\n", "diag", out.distance(ref), t);
    }
    for (const Row &row : rows) {
        StateVector out = init;
        const double t = run_backend(row.backend, row.order, out);
        std::printf("%-16s %12.2e %12.2f\n", row.name, out.distance(ref), t);
    }
    return 0;
}

// --- built-in invariant suite --------------------------------------------------

int run_selftest() {
    int failures = 0;
    const auto check = [&](const char *what, bool ok) {
        std::printf("%-60s %s\n", what, ok ? "ok" : "FAIL");
        if (!ok) ++failures;
    };

    // Controlled NOT truth table.
    {
        bool ok = true;
        for (std::size_t in = 0; in < 4; ++in) {
            StateVector s = StateVector::basis_state(2, in);
            GateOp op{GateKind::Cnot, 1, 2};
            apply(s, op);
            const std::size_t want = (in & 1) ? in ^ 2 : in;
            ok = ok && std::abs(std::norm(s[want]) - 1.0) < 1e-12;
        }
        check("cnot truth table", ok);
    }
    // Fourier transform times its inverse.
    {
        const GateProgram fwd = qft_program(3, 1, 3, true);
        const GateProgram inv = inverse_program(fwd);
        bool ok = true;
        for (std::size_t i = 0; i < 8; ++i) {
            StateVector s = StateVector::basis_state(3, i);
            run(s, fwd);
            run(s, inv);
            ok = ok && std::abs(std::norm(s[i]) - 1.0) < 1e-12;
        }
        check("qft times inverse is identity", ok);
    }
    // Period-finding spectrum against the closed form.
    {
        bool ok = true;
        for (int M = 1; M <= 8; ++M) {
            const auto spec = period_find(M);
            for (int q = 0; q < 8; ++q)
                ok = ok && std::abs(spec.probabilities[q] -
                                    period_find_probability(q, M)) < 1e-10;
        }
        check("period finding matches closed form", ok);
    }
    // Search outputs are the four basis states.
    {
        bool ok = true;
        for (int item = 0; item < 4; ++item) {
            StateVector s(2);
            run(s, grover_program(item));
            ok = ok && std::abs(std::norm(s[std::size_t(item)]) - 1.0) < 1e-10;
        }
        check("search returns the marked basis state", ok);
    }
    // Pulse-design spot values at s = 8.
    {
        const ChloroformPulses book(8.0);
        const auto x1 = book.pulse("X1");
        const auto x2p = book.pulse("X2'");
        const bool ok = std::abs(x1.amp1 + 0.03125) < 1e-9 &&
                        std::abs(x1.amp2 + 0.0078125) < 1e-9 &&
                        x1.duration == 8.0 &&
                        std::abs(x2p.amp2 - 0.0111283) < 1e-7 &&
                        x2p.duration == 128.0;
        check("pulse table spot values", ok);
    }
    // Norm conservation across backends on a driven model.
    {
        SpinModel m(4);
        for (int j = 1; j < 4; ++j)
            for (Axis a : {Axis::X, Axis::Y, Axis::Z})
                m.set_coupling(j, j + 1, a, 0.3 * j);
        m.set_sin_field(1, Axis::X, 0.2, 1.0, 0.1);
        m.set_static_field(2, Axis::Z, 0.7);
        bool ok = true;
        for (Backend b : {Backend::Diag, Backend::Chebyshev, Backend::Lanczos,
                          Backend::ST2Pair, Backend::ST4Pair, Backend::ST2XYZ,
                          Backend::ST4XYZ}) {
            PropagatorConfig cfg;
            cfg.backend = b;
            StateVector s = StateVector::basis_state(4, 5);
            for (int step = 0; step < 100; ++step) {
                evolve(s, m, step * cfg.dt, cfg.dt, cfg);
                ok = ok && std::abs(s.norm() - 1.0) < 1e-12;
            }
        }
        check("norm conserved on every backend", ok);
    }
    // Serialization round trip.
    {
        bool ok = true;
        for (const char *src :
             {"qubits 2\ninit 3\ngate W 1\ngate CP 2 1 angle pi/2\nexpect\n",
              "qubits 2\nuse cnot-nmr 1 repeat 5\n"}) {
            const Program p = parse_program(src, 8.0);
            const Program q = parse_program(serialize_program(p), 8.0);
            ok = ok && serialize_program(p) == serialize_program(q);
        }
        check("program serialization round-trips", ok);
    }
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    Options opt;
    CLI::App app{"state-vector spin simulator"};
    app.add_option("--program", opt.program, "program file to execute");
    app.add_option("--backend", opt.backend,
                   "ideal|diag|chebyshev|lanczos|st2-pair|st4-pair|st2-xyz|st4-xyz")
        ->check(CLI::IsMember({"ideal", "diag", "chebyshev", "lanczos",
                               "st2-pair", "st4-pair", "st2-xyz", "st4-xyz"}));
    app.add_option("--dt", opt.dt, "integration substep as t/2pi");
    app.add_option("--lanczos-order", opt.lanczos_order,
                   "Krylov subspace dimension");
    app.add_option("--cheb-kappa", opt.cheb_kappa,
                   "Chebyshev truncation threshold");
    app.add_option("--s", opt.s, "pulse-strength family for generator programs")
        ->check(CLI::IsMember({"8", "16", "32", "64", "256"}));
    app.add_option("--seed", opt.seed, "seed for stochastic model builders");
    app.add_flag("--dump-amplitudes", opt.dump_amplitudes,
                 "emit final amplitudes");
    app.add_option("--format", opt.format, "table|csv|json-lines")
        ->check(CLI::IsMember({"table", "csv", "json-lines"}));
    app.add_option("--workers", opt.workers,
                   "worker threads for backend data parallelism");
    app.add_flag("--selftest", opt.selftest, "run the built-in invariant suite");
    app.add_option("--bench", opt.bench,
                   "bench preset: spin-bath-10|spin-bath-12|spin-bath-18|spin-bath-22");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (opt.workers > 0) omp_set_num_threads(opt.workers);
#endif

    try {
        if (opt.selftest) return run_selftest();
        if (!opt.bench.empty()) return run_bench(opt);
        if (!opt.program.empty()) return run_program_file(opt);
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    std::fprintf(stderr, "error: nothing to do (see --help)\n");
    return 1;
}

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

#include "algorithms.hpp"
#include "propagator.hpp"
#include "pulse_design.hpp"

#include <cctype>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

namespace spinsim {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int ln, const std::string &msg)
        : std::runtime_error("line " + std::to_string(ln) + ": " + msg),
          line(ln) {}
};

/// One executable step of a program file.
struct ProgramStep {
    enum class Kind { Gate, Micro, Expect, Assert } kind = Kind::Gate;
    GateOp gate{GateKind::W, 1};
    Microinstruction micro;
    int assert_qubit = 0;
    double assert_value = 0.0, assert_tol = 0.0;
};

struct Program {
    int num_qubits = 0;
    std::size_t init_index = 0;
    std::vector<ProgramStep> steps;
    // original generator directives ("use ..."), kept for serialization
    std::vector<std::string> uses;

    bool has_micro() const {
        for (const auto &s : steps)
            if (s.kind == ProgramStep::Kind::Micro) return true;
        return false;
    }
};

namespace detail {

inline std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

inline std::vector<std::string> tokens_of(const std::string &line) {
    std::istringstream is(line);
    std::vector<std::string> t;
    std::string w;
    while (is >> w) {
        if (w[0] == '#') break; // comment to end of line
        t.push_back(w);
    }
    return t;
}

inline double parse_number(const std::string &tok, int ln) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception &) {
        throw ParseError(ln, "malformed number '" + tok + "'");
    }
}

/// Angle expressions: decimals, `pi`, `-pi`, `pi/k`, `k*pi` (k decimal).
inline double parse_angle(const std::string &tok_in, int ln) {
    std::string tok = lower(tok_in);
    double sign = 1.0;
    if (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) {
        if (tok[0] == '-') sign = -1.0;
        tok = tok.substr(1);
    }
    const auto at = tok.find("pi");
    if (at == std::string::npos) return sign * parse_number(tok, ln);
    double value = pi;
    const std::string pre = tok.substr(0, at);
    const std::string post = tok.substr(at + 2);
    if (!pre.empty()) {
        if (pre.back() == '*')
            value *= parse_number(pre.substr(0, pre.size() - 1), ln);
        else
            value *= parse_number(pre, ln);
    }
    if (!post.empty()) {
        if (post[0] == '/')
            value /= parse_number(post.substr(1), ln);
        else if (post[0] == '*')
            value *= parse_number(post.substr(1), ln);
        else
            throw ParseError(ln, "malformed angle '" + tok_in + "'");
    }
    return sign * value;
}

inline Axis parse_axis(const std::string &tok, int ln) {
    const std::string a = lower(tok);
    if (a == "x") return Axis::X;
    if (a == "y") return Axis::Y;
    if (a == "z") return Axis::Z;
    throw ParseError(ln, "axis must be x, y or z");
}

inline int parse_qubit(const std::string &tok, int num_qubits, int ln) {
    const double v = parse_number(tok, ln);
    const int q = static_cast<int>(v);
    if (v != q || q < 1 || q > num_qubits)
        throw ParseError(ln, "qubit index out of range: " + tok);
    return q;
}

struct GateSpec {
    GateKind kind;
    int targets;
    bool needs_angle;
};

inline const GateSpec *gate_spec(const std::string &name) {
    static const std::map<std::string, GateSpec> table = {
        {"x", {GateKind::X, 1, false}},
        {"xbar", {GateKind::Xbar, 1, false}},
        {"y", {GateKind::Y, 1, false}},
        {"ybar", {GateKind::Ybar, 1, false}},
        {"w", {GateKind::W, 1, false}},
        {"not", {GateKind::Not, 1, false}},
        {"a", {GateKind::A, 1, false}},
        {"abar", {GateKind::Abar, 1, false}},
        {"v", {GateKind::V, 1, false}},
        {"r", {GateKind::Rphase, 1, true}},
        {"cp", {GateKind::CtrlPhase, 2, true}},
        {"i", {GateKind::IsingPhase, 2, true}},
        {"cnot", {GateKind::Cnot, 2, false}},
        {"swap", {GateKind::Swap, 2, false}},
        {"g2", {GateKind::G2, 2, false}},
        {"toffoli", {GateKind::Toffoli, 3, false}},
        {"phase", {GateKind::GlobalPhase, 0, true}},
    };
    const auto it = table.find(lower(name));
    return it == table.end() ? nullptr : &it->second;
}

} // namespace detail

/// Expand a generator directive into micro steps at load time; `s` selects
/// the pulse-strength family (longer pulses are weaker and more accurate).
inline std::vector<ProgramStep> expand_use(const std::string &directive,
                                           double s, int ln) {
    const auto tok = detail::tokens_of(directive);
    std::vector<ProgramStep> out;
    const auto push_all = [&](const std::vector<std::string> &names) {
        const ChloroformPulses book(s);
        for (const auto &mi : book.expand(names)) {
            ProgramStep st;
            st.kind = ProgramStep::Kind::Micro;
            st.micro = mi;
            out.push_back(st);
        }
    };
    if (tok.size() == 2 && detail::lower(tok[0]) == "grover-nmr") {
        push_all(grover_pulse_sequence(static_cast<int>(
            detail::parse_number(tok[1], ln))));
    } else if (tok.size() >= 2 && detail::lower(tok[0]) == "cnot-nmr") {
        const int variant = static_cast<int>(detail::parse_number(tok[1], ln));
        int repeat = 1;
        if (tok.size() == 4 && detail::lower(tok[2]) == "repeat")
            repeat = static_cast<int>(detail::parse_number(tok[3], ln));
        else if (tok.size() != 2)
            throw ParseError(ln, "usage: use cnot-nmr <variant> [repeat <n>]");
        for (int i = 0; i < repeat; ++i)
            push_all(cnot_pulse_sequence(variant));
    } else {
        throw ParseError(ln, "unknown generator directive: " + directive);
    }
    return out;
}

/// Parse program text. Generator directives expand using the pulse-family
/// parameter `s`.
inline Program parse_program(const std::string &text, double s = 8.0) {
    Program prog;
    std::istringstream in(text);
    std::string line;
    int ln = 0;
    Microinstruction *open_micro = nullptr;
    bool saw_qubits = false;

    while (std::getline(in, line)) {
        ++ln;
        const auto tok = detail::tokens_of(line);
        if (tok.empty()) continue;
        const std::string key = detail::lower(tok[0]);

        if (key == "field" || key == "coupling") {
            if (!open_micro)
                throw ParseError(ln, "'" + key + "' outside a micro block");
            if (key == "coupling") {
                if (tok.size() != 5)
                    throw ParseError(ln, "usage: coupling <j> <k> <axis> <v>");
                const int j = detail::parse_qubit(tok[1], prog.num_qubits, ln);
                const int k = detail::parse_qubit(tok[2], prog.num_qubits, ln);
                open_micro->model.set_coupling(
                    j, k, detail::parse_axis(tok[3], ln),
                    detail::parse_number(tok[4], ln));
            } else {
                // field <spin> <axis> static <v> [sin amp <v> freq <v> phase <v>]
                if (tok.size() != 5 && tok.size() != 12)
                    throw ParseError(
                        ln, "usage: field <spin> <axis> static <v> "
                            "[sin amp <v> freq <v> phase <v>]");
                const int j = detail::parse_qubit(tok[1], prog.num_qubits, ln);
                const Axis ax = detail::parse_axis(tok[2], ln);
                if (detail::lower(tok[3]) != "static")
                    throw ParseError(ln, "expected 'static'");
                open_micro->model.set_static_field(
                    j, ax, detail::parse_number(tok[4], ln));
                if (tok.size() == 12) {
                    if (detail::lower(tok[5]) != "sin" ||
                        detail::lower(tok[6]) != "amp" ||
                        detail::lower(tok[8]) != "freq" ||
                        detail::lower(tok[10]) != "phase")
                        throw ParseError(ln, "expected 'sin amp v freq v phase v'");
                    open_micro->model.set_sin_field(
                        j, ax, detail::parse_number(tok[7], ln),
                        detail::parse_number(tok[9], ln),
                        detail::parse_number(tok[11], ln));
                }
            }
            continue;
        }
        open_micro = nullptr;

        if (key == "qubits") {
            if (tok.size() != 2) throw ParseError(ln, "usage: qubits <L>");
            prog.num_qubits =
                static_cast<int>(detail::parse_number(tok[1], ln));
            if (prog.num_qubits < 1 || prog.num_qubits > 30)
                throw ParseError(ln, "qubit count out of range");
            saw_qubits = true;
        } else if (!saw_qubits) {
            throw ParseError(ln, "'qubits <L>' must come first");
        } else if (key == "init") {
            if (tok.size() != 2) throw ParseError(ln, "usage: init <index|bits>");
            const std::string &v = tok[1];
            const bool bits =
                static_cast<int>(v.size()) == prog.num_qubits &&
                v.find_first_not_of("01") == std::string::npos;
            if (bits) {
                // written like a ket: leftmost character is the highest qubit
                std::size_t idx = 0;
                for (char c : v) idx = (idx << 1) | (c == '1' ? 1u : 0u);
                prog.init_index = idx;
            } else {
                const double d = detail::parse_number(v, ln);
                if (d < 0 ||
                    d >= std::pow(2.0, prog.num_qubits) ||
                    d != std::floor(d))
                    throw ParseError(ln, "init index out of range");
                prog.init_index = static_cast<std::size_t>(d);
            }
        } else if (key == "gate") {
            if (tok.size() < 2) throw ParseError(ln, "usage: gate <NAME> ...");
            const auto *spec = detail::gate_spec(tok[1]);
            if (!spec) throw ParseError(ln, "unknown gate '" + tok[1] + "'");
            std::size_t at = 2;
            GateOp op{spec->kind, 0};
            int *qs[3] = {&op.q1, &op.q2, &op.q3};
            for (int i = 0; i < spec->targets; ++i, ++at) {
                if (at >= tok.size()) throw ParseError(ln, "missing target qubit");
                *qs[i] = detail::parse_qubit(tok[at], prog.num_qubits, ln);
            }
            if (spec->needs_angle) {
                if (at + 2 != tok.size() || detail::lower(tok[at]) != "angle")
                    throw ParseError(ln, "expected 'angle <expr>'");
                op.angle = detail::parse_angle(tok[at + 1], ln);
            } else if (at != tok.size()) {
                throw ParseError(ln, "unexpected trailing tokens");
            }
            if (spec->kind == GateKind::V) {
                op.kind = GateKind::Custom1q;
                op.u1 = gate_v();
            }
            ProgramStep st;
            st.kind = ProgramStep::Kind::Gate;
            st.gate = op;
            prog.steps.push_back(st);
        } else if (key == "micro") {
            if (tok.size() != 4 || detail::lower(tok[2]) != "dur")
                throw ParseError(ln, "usage: micro <label> dur <t/2pi>");
            ProgramStep st;
            st.kind = ProgramStep::Kind::Micro;
            st.micro.label = tok[1];
            st.micro.duration_over_2pi = detail::parse_number(tok[3], ln);
            st.micro.model = SpinModel(prog.num_qubits);
            prog.steps.push_back(st);
            open_micro = &prog.steps.back().micro;
        } else if (key == "expect") {
            ProgramStep st;
            st.kind = ProgramStep::Kind::Expect;
            prog.steps.push_back(st);
        } else if (key == "assert") {
            if (tok.size() != 6 || detail::lower(tok[1]) != "qz" ||
                detail::lower(tok[4]) != "tol")
                throw ParseError(ln, "usage: assert qz <j> <value> tol <t>");
            ProgramStep st;
            st.kind = ProgramStep::Kind::Assert;
            st.assert_qubit = detail::parse_qubit(tok[2], prog.num_qubits, ln);
            st.assert_value = detail::parse_number(tok[3], ln);
            st.assert_tol = detail::parse_number(tok[5], ln);
            prog.steps.push_back(st);
        } else if (key == "use") {
            std::string rest;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                if (i > 1) rest += ' ';
                rest += tok[i];
            }
            prog.uses.push_back(rest);
            for (auto &st : expand_use(rest, s, ln)) prog.steps.push_back(st);
        } else {
            throw ParseError(ln, "unknown statement '" + tok[0] + "'");
        }
    }
    if (!saw_qubits) throw ParseError(ln ? ln : 1, "missing 'qubits <L>'");
    return prog;
}

inline Program load_program(const std::string &path, double s = 8.0) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open program file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_program(ss.str(), s);
}

// --- serialization -------------------------------------------------------------

namespace detail {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline const char *gate_name(GateKind k) {
    switch (k) {
    case GateKind::X: return "X";
    case GateKind::Xbar: return "XBAR";
    case GateKind::Y: return "Y";
    case GateKind::Ybar: return "YBAR";
    case GateKind::W: return "W";
    case GateKind::Not: return "NOT";
    case GateKind::A: return "A";
    case GateKind::Abar: return "ABAR";
    case GateKind::Rphase: return "R";
    case GateKind::CtrlPhase: return "CP";
    case GateKind::IsingPhase: return "I";
    case GateKind::Cnot: return "CNOT";
    case GateKind::Swap: return "SWAP";
    case GateKind::G2: return "G2";
    case GateKind::Toffoli: return "TOFFOLI";
    case GateKind::GlobalPhase: return "PHASE";
    default: return nullptr; // V folded to Custom1q; customs not serializable
    }
}

} // namespace detail

/// Text form of a program; generator programs serialize their directives,
/// explicit micro blocks serialize field by field.
inline std::string serialize_program(const Program &prog) {
    std::ostringstream out;
    out << "qubits " << prog.num_qubits << "\n";
    if (prog.init_index != 0) out << "init " << prog.init_index << "\n";
    if (!prog.uses.empty()) {
        for (const auto &u : prog.uses) out << "use " << u << "\n";
        return out.str();
    }
    for (const auto &st : prog.steps) {
        switch (st.kind) {
        case ProgramStep::Kind::Gate: {
            const char *name = detail::gate_name(st.gate.kind);
            if (!name)
                throw std::runtime_error("custom gate is not serializable");
            const auto *spec = detail::gate_spec(name);
            out << "gate " << name;
            const int *qs[3] = {&st.gate.q1, &st.gate.q2, &st.gate.q3};
            for (int i = 0; i < spec->targets; ++i) out << ' ' << *qs[i];
            if (spec->needs_angle)
                out << " angle " << detail::format_double(st.gate.angle);
            out << "\n";
            break;
        }
        case ProgramStep::Kind::Micro: {
            const auto &mi = st.micro;
            out << "micro " << (mi.label.empty() ? "m" : mi.label) << " dur "
                << detail::format_double(mi.duration_over_2pi) << "\n";
            for (int j = 1; j <= mi.model.num_spins(); ++j)
                for (Axis ax : {Axis::X, Axis::Y, Axis::Z}) {
                    const FieldTerm &f = mi.model.field(j, ax);
                    if (f.static_part == 0.0 && f.amp == 0.0) continue;
                    out << "  field " << j << ' ' << axis_name(ax) << " static "
                        << detail::format_double(f.static_part);
                    if (f.amp != 0.0)
                        out << " sin amp " << detail::format_double(f.amp)
                            << " freq " << detail::format_double(f.freq)
                            << " phase " << detail::format_double(f.phase);
                    out << "\n";
                }
            for (const auto &c : mi.model.couplings())
                out << "  coupling " << c.j << ' ' << c.k << ' '
                    << axis_name(c.axis) << ' ' << detail::format_double(c.value)
                    << "\n";
            break;
        }
        case ProgramStep::Kind::Expect:
            out << "expect\n";
            break;
        case ProgramStep::Kind::Assert:
            out << "assert qz " << st.assert_qubit << ' '
                << detail::format_double(st.assert_value) << " tol "
                << detail::format_double(st.assert_tol) << "\n";
            break;
        }
    }
    return out.str();
}

// --- execution ------------------------------------------------------------------

struct Checkpoint {
    std::string label;
    std::vector<QubitExpectation> qubits;
};

struct AssertionResult {
    int qubit;
    double expected, actual, tol;
    bool passed;
};

struct RunReport {
    std::vector<Checkpoint> checkpoints;
    std::vector<AssertionResult> assertions;
    std::vector<cplx> amplitudes; // filled only on request
    double seconds = 0.0;
    std::string backend;

    bool all_passed() const {
        for (const auto &a : assertions)
            if (!a.passed) return false;
        return true;
    }
};

inline RunReport run_program(const Program &prog, const PropagatorConfig &cfg,
                             bool dump_amplitudes = false) {
    const auto t_start = std::chrono::steady_clock::now();
    StateVector state = StateVector::basis_state(
        static_cast<std::size_t>(prog.num_qubits), prog.init_index);
    RunReport report;
    report.backend = backend_name(cfg.backend);
    int micro_count = 0;

    const auto snapshot = [&](const std::string &label) {
        Checkpoint cp;
        cp.label = label;
        for (int j = 1; j <= prog.num_qubits; ++j)
            cp.qubits.push_back(state.expectation(j));
        report.checkpoints.push_back(std::move(cp));
    };

    for (const auto &st : prog.steps) {
        switch (st.kind) {
        case ProgramStep::Kind::Gate:
            apply(state, st.gate);
            break;
        case ProgramStep::Kind::Micro:
            if (cfg.backend == Backend::Ideal)
                throw std::runtime_error(
                    "microinstructions need a Hamiltonian backend (not ideal)");
            run_micro(state, st.micro, cfg);
            ++micro_count;
            break;
        case ProgramStep::Kind::Expect:
            snapshot("checkpoint " + std::to_string(report.checkpoints.size()));
            break;
        case ProgramStep::Kind::Assert: {
            const double qz = state.expectation(st.assert_qubit).qz;
            report.assertions.push_back(
                {st.assert_qubit, st.assert_value, qz, st.assert_tol,
                 std::abs(qz - st.assert_value) <= st.assert_tol});
            break;
        }
        }
    }
    snapshot("final");
    if (dump_amplitudes) report.amplitudes = state.amplitudes();
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
            .count();
    (void)micro_count;
    return report;
}

} // namespace spinsim

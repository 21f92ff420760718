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

// Regenerates the bundled example corpus under programs/. The gate programs
// carry self-checking assertions derived from closed-form expectations, so
// a nonzero qsim exit code on any of them flags a regression.

#include "spinsim/program_io.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace spinsim;

namespace {

std::filesystem::path out_dir;

void write_file(const std::string &name, const std::string &text) {
    const auto path = out_dir / name;
    std::ofstream os(path);
    os << text;
    if (!os) throw std::runtime_error("cannot write " + path.string());
    std::cout << "wrote " << path.string() << "\n";
}

Program wrap(const GateProgram &gp, std::size_t init_index) {
    Program p;
    p.num_qubits = gp.num_qubits;
    p.init_index = init_index;
    for (const auto &op : gp.ops) {
        ProgramStep st;
        st.kind = ProgramStep::Kind::Gate;
        st.gate = op;
        p.steps.push_back(st);
    }
    return p;
}

void add_assert(Program &p, int qubit, double value, double tol) {
    ProgramStep st;
    st.kind = ProgramStep::Kind::Assert;
    st.assert_qubit = qubit;
    st.assert_value = value;
    st.assert_tol = tol;
    p.steps.push_back(st);
}

void add_expect(Program &p) {
    ProgramStep st;
    st.kind = ProgramStep::Kind::Expect;
    p.steps.push_back(st);
}

/// Closed-form qz of physical register qubit j (1..3) after the swapless
/// 3-qubit transform of a period-M function: the bit-reversed spectrum
/// summed over states whose matching bit is set.
double register_qz(int j, int M) {
    double v = 0.0;
    for (int k = 0; k < 8; ++k)
        if ((k >> (3 - j)) & 1) v += period_find_probability(k, M);
    return v;
}

void gate_corpus() {
    // Controlled NOT demo: control high, target flips.
    {
        GateProgram gp;
        gp.num_qubits = 2;
        gp.add(GateOp{GateKind::Cnot, 1, 2});
        Program p = wrap(gp, 1); // |01> = qubit 1 set
        add_expect(p);
        add_assert(p, 1, 1.0, 1e-12);
        add_assert(p, 2, 1.0, 1e-12);
        write_file("cnot.qp", serialize_program(p));
    }
    // Toffoli demo: both controls set.
    {
        GateProgram gp;
        gp.num_qubits = 3;
        GateOp op{GateKind::Toffoli, 1, 2};
        op.q3 = 3;
        gp.add(op);
        Program p = wrap(gp, 3);
        add_expect(p);
        add_assert(p, 3, 1.0, 1e-12);
        write_file("toffoli.qp", serialize_program(p));
    }
    // Fourier transform of a basis state: uniform magnitudes.
    {
        Program p = wrap(qft_program(3, 1, 3, true), 5);
        add_expect(p);
        for (int j = 1; j <= 3; ++j) add_assert(p, j, 0.5, 1e-9);
        write_file("qft3.qp", serialize_program(p));
    }
    // Two-qubit search: the marked item comes out as a basis state.
    for (int item = 0; item < 4; ++item) {
        Program p = wrap(grover_program(item), 0);
        add_expect(p);
        add_assert(p, 1, item & 1 ? 1.0 : 0.0, 1e-9);
        add_assert(p, 2, item & 2 ? 1.0 : 0.0, 1e-9);
        write_file("grover" + std::to_string(item) + ".qp",
                   serialize_program(p));
    }
    // Order finding for a 3-cycle.
    {
        const std::vector<int> perm = {1, 2, 0, 3};
        const int y = 0;
        const int M = permutation_cycle_length(perm, y);
        Program p = wrap(permutation_order_program(perm, y), 0);
        add_expect(p);
        for (int j = 1; j <= 3; ++j) add_assert(p, j, register_qz(j, M), 1e-9);
        write_file("perm-order3.qp", serialize_program(p));
    }
    // Factoring 15.
    for (int a : {2, 4, 7, 8, 11, 13, 14}) {
        const int M = shor15_period(a);
        Program p = wrap(shor15_program(a), 0);
        add_expect(p);
        for (int j = 1; j <= 3; ++j) add_assert(p, j, register_qz(j, M), 1e-9);
        write_file("shor15-" + std::to_string(a) + ".qp",
                   serialize_program(p));
    }
    // Three-input adder examples.
    const auto adder_case = [&](int r1, int r2, int r3) {
        const std::size_t idx =
            std::size_t(r1) | (std::size_t(r2) << 4) | (std::size_t(r3) << 8);
        Program p = wrap(adder3_program(), idx);
        add_expect(p);
        const int sum = (r1 + r2 + r3) % 16;
        for (int b = 0; b < 4; ++b)
            add_assert(p, 9 + b, (sum >> b) & 1 ? 1.0 : 0.0, 1e-9);
        write_file("adder-" + std::to_string(r1) + "-" + std::to_string(r2) +
                       "-" + std::to_string(r3) + ".qp",
                   serialize_program(p));
    };
    adder_case(1, 2, 3);
    adder_case(1, 1, 1);
    adder_case(9, 9, 9);
}

void nmr_corpus() {
    // Generator-directive programs; the pulse-strength family is selected at
    // load time with the --s flag (8, 16, 32, 64 or 256).
    for (int v : {1, 2, 3}) {
        write_file("cnot" + std::to_string(v) + "-nmr.qp",
                   "qubits 2\ninit 0\nuse cnot-nmr " + std::to_string(v) +
                       "\nexpect\n");
        write_file("cnot" + std::to_string(v) + "-nmr-x5.qp",
                   "qubits 2\ninit 0\nuse cnot-nmr " + std::to_string(v) +
                       " repeat 5\nexpect\n");
    }
    for (int item = 0; item < 4; ++item)
        write_file("grover" + std::to_string(item) + "-nmr.qp",
                   "qubits 2\ninit 0\nuse grover-nmr " + std::to_string(item) +
                       "\nexpect\n");
    // One fully expanded instance (s = 8) with explicit micro blocks.
    Program p = parse_program("qubits 2\nuse cnot-nmr 1\n", 8.0);
    p.uses.clear();
    add_expect(p);
    write_file("cnot1-nmr-s8-explicit.qp", serialize_program(p));
}

} // namespace

int main(int argc, char **argv) {
    out_dir = argc > 1 ? argv[1] : "programs";
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    try {
        gate_corpus();
        nmr_corpus();
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

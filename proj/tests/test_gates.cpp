// Copyright 2026 The decosim authors
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

#include <cmath>
#include <numbers>

#include "doctest.h"

#include "decosim/errors.hpp"
#include "decosim/gates.hpp"
#include "decosim/state.hpp"
#include "helpers.hpp"

using namespace decosim;
using test_helpers::max_diff;

TEST_CASE("gate matrices match their definitions") {
    ComplexMatrix not_want(2, 2);
    not_want << 0, 1, 1, 0;
    CHECK(max_diff(gate_unitary(GateKind::kNot), not_want) == 0.0);

    const double s = 1.0 / std::numbers::sqrt2;
    ComplexMatrix h_want(2, 2);
    h_want << s, s, s, -s;
    CHECK(max_diff(gate_unitary(GateKind::kHadamard), h_want) == 0.0);

    const ComplexMatrix t = gate_unitary(GateKind::kT);
    CHECK(t(0, 0) == Complex(1.0, 0.0));
    CHECK(std::abs(t(1, 1) - std::polar(1.0, std::numbers::pi / 4.0)) < 1e-15);
}

TEST_CASE("every gate is unitary") {
    for (GateKind kind : kAllGates) {
        const ComplexMatrix u = gate_unitary(kind);
        CHECK(max_diff(u * u.adjoint(), identity(u.rows())) <= 1e-12);
    }
}

TEST_CASE("controlled gates act on the expected basis states") {
    // control on the more significant wire
    const ComplexMatrix cnot = gate_unitary(GateKind::kCnot);
    CHECK(cnot(3, 2) == Complex(1.0, 0.0)); // |10> -> |11>
    CHECK(cnot(1, 1) == Complex(1.0, 0.0)); // |01> fixed

    const ComplexMatrix toffoli = gate_unitary(GateKind::kToffoli);
    CHECK(toffoli(7, 6) == Complex(1.0, 0.0)); // |110> -> |111>
    CHECK(toffoli(5, 5) == Complex(1.0, 0.0)); // |101> fixed

    const ComplexMatrix fredkin = gate_unitary(GateKind::kFredkin);
    CHECK(fredkin(6, 5) == Complex(1.0, 0.0)); // |101> -> |110>
    CHECK(fredkin(3, 3) == Complex(1.0, 0.0)); // control 0: fixed
}

TEST_CASE("hermitian generators complete their gate at a quarter turn") {
    const double slot = std::numbers::pi / 2.0;
    for (GateKind kind : kAllGates) {
        const ComplexMatrix g = generator(kind, DriveMode::kHermitianGenerator);
        CHECK(hermiticity_deviation(g) == 0.0);
        const ComplexMatrix u = expm(Complex(0.0, -slot) * g);
        const ComplexMatrix want = gate_unitary(kind);
        // compare up to a global phase via the largest entry
        Eigen::Index r = 0, c = 0;
        want.cwiseAbs().maxCoeff(&r, &c);
        const Complex phase = u(r, c) / want(r, c);
        CHECK(std::abs(std::abs(phase) - 1.0) <= 1e-9);
        CHECK(max_diff(u, ComplexMatrix(phase * want)) <= 1e-9);
    }
}

TEST_CASE("hermitian unitaries evolve to -iU at a quarter turn") {
    const double slot = std::numbers::pi / 2.0;
    for (GateKind kind : {GateKind::kNot, GateKind::kHadamard, GateKind::kCnot,
                          GateKind::kToffoli, GateKind::kFredkin}) {
        const ComplexMatrix u = gate_unitary(kind);
        const ComplexMatrix evolved = expm(Complex(0.0, -slot) * u);
        CHECK(max_diff(evolved, ComplexMatrix(Complex(0.0, -1.0) * u)) <= 1e-9);
    }
}

TEST_CASE("paper-literal mode returns the unitary itself") {
    for (GateKind kind : kAllGates) {
        CHECK(max_diff(generator(kind, DriveMode::kPaperLiteral), gate_unitary(kind)) == 0.0);
    }
    CHECK_FALSE(drive_is_hermitian(GateKind::kPhaseS, DriveMode::kPaperLiteral));
    CHECK_FALSE(drive_is_hermitian(GateKind::kT, DriveMode::kPaperLiteral));
    CHECK(drive_is_hermitian(GateKind::kCnot, DriveMode::kPaperLiteral));
    CHECK(drive_is_hermitian(GateKind::kT, DriveMode::kHermitianGenerator));
}

TEST_CASE("T generator reproduces the T unitary") {
    const ComplexMatrix g = generator(GateKind::kT, DriveMode::kHermitianGenerator);
    CHECK(g(1, 1) == Complex(-0.5, 0.0));
    const ComplexMatrix u = expm(Complex(0.0, -std::numbers::pi / 2.0) * g);
    CHECK(max_diff(u, gate_unitary(GateKind::kT)) <= 1e-12);

    const ComplexMatrix gs = generator(GateKind::kPhaseS, DriveMode::kHermitianGenerator);
    const ComplexMatrix us = expm(Complex(0.0, -std::numbers::pi / 2.0) * gs);
    CHECK(max_diff(us, gate_unitary(GateKind::kPhaseS)) <= 1e-12);
}

TEST_CASE("embed on contiguous wires equals the literal kron chain") {
    const ComplexMatrix via_embed = embed(GateKind::kCnot, {1, 2}, 3);
    const ComplexMatrix via_kron = kron(identity(2), gate_unitary(GateKind::kCnot));
    CHECK(max_diff(via_embed, via_kron) == 0.0);

    const ComplexMatrix h_embed = embed(GateKind::kHadamard, {0}, 3);
    const ComplexMatrix h_kron =
        kron(kron(gate_unitary(GateKind::kHadamard), identity(2)), identity(2));
    CHECK(max_diff(h_embed, h_kron) == 0.0);

    CHECK(max_diff(embed(GateKind::kToffoli, {0, 1, 2}, 3),
                   gate_unitary(GateKind::kToffoli)) == 0.0);
}

TEST_CASE("embed handles non-contiguous and reversed wires") {
    // control on wire 2, target on wire 0: |001> -> |101>
    const ComplexMatrix u = embed(GateKind::kCnot, {2, 0}, 3);
    StateVector in = ket("001");
    const ComplexVector out = u * in.amplitudes;
    CHECK(std::abs(out[5] - Complex(1.0, 0.0)) <= 1e-15);
    CHECK(max_diff(u * u.adjoint(), identity(8)) <= 1e-12);
}

TEST_CASE("embed preserves unitarity for every gate and placement") {
    for (GateKind kind : kAllGates) {
        std::vector<int> wires(gate_arity(kind));
        for (int i = 0; i < gate_arity(kind); ++i) wires[i] = gate_arity(kind) - 1 - i + 1;
        const ComplexMatrix u = embed(kind, wires, 5);
        CHECK(max_diff(u * u.adjoint(), identity(32)) <= 1e-12);
    }
}

TEST_CASE("embed rejects bad wires") {
    CHECK_THROWS_AS(embed(GateKind::kCnot, {0, 0}, 3), ConfigError);
    CHECK_THROWS_AS(embed(GateKind::kCnot, {0, 3}, 3), ConfigError);
    CHECK_THROWS_AS(embed(GateKind::kCnot, {0}, 3), ConfigError);
}

TEST_CASE("gate names round-trip") {
    for (GateKind kind : kAllGates) {
        CHECK(gate_from_name(gate_name(kind)) == kind);
    }
    CHECK_FALSE(gate_from_name("xyz").has_value());
}

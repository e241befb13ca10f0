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

#include "decosim/gates.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "decosim/errors.hpp"

namespace decosim {

int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::kNot:
        case GateKind::kHadamard:
        case GateKind::kPhaseS:
        case GateKind::kT:
        case GateKind::kIdentity:
            return 1;
        case GateKind::kCnot:
            return 2;
        case GateKind::kToffoli:
        case GateKind::kFredkin:
            return 3;
    }
    throw ConfigError("gate_arity: unknown gate kind");
}

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::kNot: return "not";
        case GateKind::kHadamard: return "h";
        case GateKind::kCnot: return "cnot";
        case GateKind::kPhaseS: return "s";
        case GateKind::kT: return "t";
        case GateKind::kToffoli: return "toffoli";
        case GateKind::kFredkin: return "fredkin";
        case GateKind::kIdentity: return "id";
    }
    throw ConfigError("gate_name: unknown gate kind");
}

std::optional<GateKind> gate_from_name(std::string_view name) {
    for (GateKind kind : kAllGates) {
        if (gate_name(kind) == name) return kind;
    }
    return std::nullopt;
}

ComplexMatrix gate_unitary(GateKind kind) {
    switch (kind) {
        case GateKind::kNot: {
            ComplexMatrix u(2, 2);
            u << 0, 1, 1, 0;
            return u;
        }
        case GateKind::kHadamard: {
            const double s = 1.0 / std::numbers::sqrt2;
            ComplexMatrix u(2, 2);
            u << s, s, s, -s;
            return u;
        }
        case GateKind::kPhaseS: {
            ComplexMatrix u = ComplexMatrix::Identity(2, 2);
            u(1, 1) = Complex(0.0, 1.0);
            return u;
        }
        case GateKind::kT: {
            ComplexMatrix u = ComplexMatrix::Identity(2, 2);
            u(1, 1) = std::polar(1.0, std::numbers::pi / 4.0);
            return u;
        }
        case GateKind::kIdentity:
            return ComplexMatrix::Identity(2, 2);
        case GateKind::kCnot: {
            // flips the target (less significant wire) when the control is 1
            ComplexMatrix u = ComplexMatrix::Identity(4, 4);
            u(2, 2) = 0; u(3, 3) = 0;
            u(2, 3) = 1; u(3, 2) = 1;
            return u;
        }
        case GateKind::kToffoli: {
            ComplexMatrix u = ComplexMatrix::Identity(8, 8);
            u(6, 6) = 0; u(7, 7) = 0;
            u(6, 7) = 1; u(7, 6) = 1;
            return u;
        }
        case GateKind::kFredkin: {
            // control on the most significant wire, swaps the other two
            ComplexMatrix u = ComplexMatrix::Identity(8, 8);
            u(5, 5) = 0; u(6, 6) = 0;
            u(5, 6) = 1; u(6, 5) = 1;
            return u;
        }
    }
    throw ConfigError("gate_unitary: unknown gate kind");
}

ComplexMatrix generator(GateKind kind, DriveMode mode) {
    if (mode == DriveMode::kPaperLiteral) {
        return gate_unitary(kind);
    }
    switch (kind) {
        case GateKind::kPhaseS: {
            // exp(-i diag(0,-1) pi/2) = diag(1, i)
            ComplexMatrix g = ComplexMatrix::Zero(2, 2);
            g(1, 1) = -1.0;
            return g;
        }
        case GateKind::kT: {
            // exp(-i diag(0,-1/2) pi/2) = diag(1, e^{i pi/4})
            ComplexMatrix g = ComplexMatrix::Zero(2, 2);
            g(1, 1) = -0.5;
            return g;
        }
        case GateKind::kIdentity:
            return ComplexMatrix::Zero(2, 2);
        default:
            // the remaining gates are Hermitian unitaries; the matrix is its
            // own generator and exp(-i U pi/2) = -i U
            return gate_unitary(kind);
    }
}

bool drive_is_hermitian(GateKind kind, DriveMode mode) {
    if (mode == DriveMode::kHermitianGenerator) return true;
    return kind != GateKind::kPhaseS && kind != GateKind::kT;
}

ComplexMatrix embed(const ComplexMatrix& g, const std::vector<int>& wires, int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxRegisterQubits) {
        throw ConfigError("embed: register width " + std::to_string(n_qubits) +
                          " out of range");
    }
    const int k = static_cast<int>(wires.size());
    if ((Eigen::Index{1} << k) != g.rows() || g.rows() != g.cols()) {
        throw ConfigError("embed: wire count does not match the gate dimension");
    }
    for (int i = 0; i < k; ++i) {
        if (wires[i] < 0 || wires[i] >= n_qubits) {
            throw ConfigError("embed: wire " + std::to_string(wires[i]) + " out of range");
        }
        for (int j = i + 1; j < k; ++j) {
            if (wires[i] == wires[j]) {
                throw ConfigError("embed: duplicate wire " + std::to_string(wires[i]));
            }
        }
    }

    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    // bit position of each wire within a register basis index (qubit 0 = MSB)
    std::vector<int> shifts(k);
    Eigen::Index wire_mask = 0;
    for (int b = 0; b < k; ++b) {
        shifts[b] = n_qubits - 1 - wires[b];
        wire_mask |= Eigen::Index{1} << shifts[b];
    }

    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    const Eigen::Index gdim = g.rows();
    for (Eigen::Index i = 0; i < dim; ++i) {
        Eigen::Index gi = 0;
        for (int b = 0; b < k; ++b) {
            gi |= ((i >> shifts[b]) & 1) << (k - 1 - b);
        }
        const Eigen::Index rest = i & ~wire_mask;
        for (Eigen::Index gj = 0; gj < gdim; ++gj) {
            const Complex v = g(gi, gj);
            if (v == Complex(0.0, 0.0)) continue;
            Eigen::Index j = rest;
            for (int b = 0; b < k; ++b) {
                j |= ((gj >> (k - 1 - b)) & 1) << shifts[b];
            }
            out(i, j) = v;
        }
    }
    return out;
}

ComplexMatrix embed(GateKind kind, const std::vector<int>& wires, int n_qubits) {
    if (static_cast<int>(wires.size()) != gate_arity(kind)) {
        throw ConfigError("embed: gate '" + std::string(gate_name(kind)) + "' takes " +
                          std::to_string(gate_arity(kind)) + " wires, got " +
                          std::to_string(wires.size()));
    }
    return embed(gate_unitary(kind), wires, n_qubits);
}

} // namespace decosim

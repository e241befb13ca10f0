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

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "decosim/linalg.hpp"

namespace decosim {

enum class GateKind {
    kNot,
    kHadamard,
    kCnot,
    kPhaseS,
    kT,
    kToffoli,
    kFredkin,
    kIdentity,
};

/// How a gate turns into the Hamiltonian that drives its slot.
///
/// kHermitianGenerator (default) picks a Hermitian G with
/// exp(-i G pi/2) equal to the gate unitary up to a global phase, so the
/// slot evolution is physical and completes the gate exactly.
/// kPaperLiteral uses the gate unitary itself, verbatim, even for the
/// non-Hermitian S and T matrices.
enum class DriveMode {
    kHermitianGenerator,
    kPaperLiteral,
};

inline constexpr GateKind kAllGates[] = {
    GateKind::kNot,     GateKind::kHadamard, GateKind::kCnot,
    GateKind::kPhaseS,  GateKind::kT,        GateKind::kToffoli,
    GateKind::kFredkin, GateKind::kIdentity,
};

int gate_arity(GateKind kind);

/// Lowercase netlist name: not, h, cnot, s, t, toffoli, fredkin, id.
std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_from_name(std::string_view name);

/// The standard unitary, dimension 2^arity. Controlled gates put controls
/// on the more significant wires, target last.
ComplexMatrix gate_unitary(GateKind kind);

/// Drive Hamiltonian for one slot, per DriveMode.
ComplexMatrix generator(GateKind kind, DriveMode mode);

/// True when generator() is Hermitian in the given mode (always, except
/// S and T under kPaperLiteral).
bool drive_is_hermitian(GateKind kind, DriveMode mode);

/// Extend a gate matrix to an n-qubit register: acts as `g` on the listed
/// wires (wires[0] = most significant gate bit) and as identity elsewhere.
/// Wires may be in any order; qubit 0 is the register's most significant
/// position.
ComplexMatrix embed(const ComplexMatrix& g, const std::vector<int>& wires, int n_qubits);
ComplexMatrix embed(GateKind kind, const std::vector<int>& wires, int n_qubits);

} // namespace decosim

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

#include "decosim/noise.hpp"

#include <cmath>
#include <string>

#include "decosim/errors.hpp"

namespace decosim {

std::string_view noise_name(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::kAmplitude: return "amp";
        case NoiseKind::kPhase: return "phase";
        case NoiseKind::kNone: return "none";
    }
    throw ConfigError("noise_name: unknown noise kind");
}

std::vector<ComplexMatrix> lindblad_ops(const NoiseSpec& spec) {
    if (spec.strength < 0.0) {
        throw ConfigError("lindblad_ops: negative noise strength");
    }
    if (spec.n_qubits < 1 || spec.n_qubits > kMaxRegisterQubits) {
        throw ConfigError("lindblad_ops: register width out of range");
    }
    if (spec.kind == NoiseKind::kNone) {
        return {};
    }

    ComplexMatrix single(2, 2);
    if (spec.kind == NoiseKind::kAmplitude) {
        single << 0, 1, 0, 0; // lowering operator
    } else {
        single << 1, 0, 0, -1; // Pauli-Z
    }
    single *= std::sqrt(spec.strength);

    // one operator per qubit, identities at all other positions
    std::vector<ComplexMatrix> ops;
    ops.reserve(spec.n_qubits);
    const ComplexMatrix eye = identity(2);
    for (int q = 0; q < spec.n_qubits; ++q) {
        ComplexMatrix op = ComplexMatrix::Ones(1, 1);
        for (int pos = 0; pos < spec.n_qubits; ++pos) {
            op = kron(op, pos == q ? single : eye);
        }
        ops.push_back(std::move(op));
    }
    return ops;
}

std::pair<ComplexMatrix, ComplexMatrix> kraus_amplitude_step(double gamma, double dt) {
    if (gamma < 0.0 || dt <= 0.0) {
        throw ConfigError("kraus_amplitude_step: need gamma >= 0 and dt > 0");
    }
    const double p = 1.0 - std::exp(-2.0 * gamma * dt);
    ComplexMatrix k0 = ComplexMatrix::Identity(2, 2);
    k0(1, 1) = std::sqrt(1.0 - p);
    ComplexMatrix k1 = ComplexMatrix::Zero(2, 2);
    k1(0, 1) = std::sqrt(p);
    return {std::move(k0), std::move(k1)};
}

ComplexMatrix kraus_apply(const std::pair<ComplexMatrix, ComplexMatrix>& kraus,
                          const ComplexMatrix& rho) {
    return kraus.first * rho * kraus.first.adjoint() +
           kraus.second * rho * kraus.second.adjoint();
}

} // namespace decosim

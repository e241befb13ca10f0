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

#include <string_view>
#include <utility>
#include <vector>

#include "decosim/linalg.hpp"

namespace decosim {

enum class NoiseKind {
    kAmplitude, // energy loss at rate gamma, single-qubit operator sqrt(gamma)*[[0,1],[0,0]]
    kPhase,     // dephasing at rate lambda, single-qubit operator sqrt(lambda)*diag(1,-1)
    kNone,
};

std::string_view noise_name(NoiseKind kind);

/// One noise channel, applied homogeneously to every qubit of a register.
struct NoiseSpec {
    NoiseKind kind = NoiseKind::kNone;
    double strength = 0.0; // gamma for amplitude, lambda for phase
    int n_qubits = 1;
};

/// One Lindblad operator per qubit, each the single-qubit
/// operator tensored with identities at every other position. kNone yields
/// an empty list; zero strength yields zero matrices.
std::vector<ComplexMatrix> lindblad_ops(const NoiseSpec& spec);

/// Discrete amplitude-damping channel over one step of length dt,
/// K0 = [[1,0],[0,sqrt(1-p)]], K1 = [[0,sqrt(p)],[0,0]] with
/// p = 1 - e^{-2 gamma dt}, calibrated so repeated application matches the
/// master equation's population decay e^{-2 gamma t}. Verification oracle
/// for the continuous evolution; the engine itself never uses it.
std::pair<ComplexMatrix, ComplexMatrix> kraus_amplitude_step(double gamma, double dt);

/// rho -> K0 rho K0^dag + K1 rho K1^dag.
ComplexMatrix kraus_apply(const std::pair<ComplexMatrix, ComplexMatrix>& kraus,
                          const ComplexMatrix& rho);

} // namespace decosim

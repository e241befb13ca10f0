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

/// Pure n-qubit state. Qubit 0 is the most significant tensor factor, so
/// basis index i carries qubit q in bit (n-1-q).
struct StateVector {
    int n_qubits = 0;
    ComplexVector amplitudes;

    Eigen::Index dim() const { return amplitudes.size(); }
};

/// Possibly mixed n-qubit state. Invariants (Hermitian, unit trace, PSD)
/// are checked by validate() and by the constructors that build one.
struct DensityMatrix {
    int n_qubits = 0;
    ComplexMatrix mat;

    Eigen::Index dim() const { return mat.rows(); }
};

struct ValidationTolerances {
    double trace = 1e-9;
    double hermiticity = 1e-9;
    double min_eigenvalue = -1e-8;
};

struct ValidationReport {
    double trace_deviation = 0.0;
    double hermiticity_deviation = 0.0;
    double min_eigenvalue = 0.0;
    bool pass = false;
};

/// Basis state from a bitstring, big-endian (qubit 0 leftmost):
/// ket("110") has amplitude 1 at index 6.
StateVector ket(std::string_view bits);

/// Tensor product of per-qubit states (a|0> + b|1>), qubit 0 most
/// significant. Each pair must be normalized to 1e-9.
StateVector product_state(const std::vector<std::pair<Complex, Complex>>& per_qubit);

/// rho = sum_i p_i |psi_i><psi_i|. Probabilities must be nonnegative and
/// sum to 1 within 1e-9; all states must share a width.
DensityMatrix density_from_ensemble(const std::vector<StateVector>& states,
                                    const std::vector<double>& probs);

/// Shorthand for the single-state ensemble.
DensityMatrix pure_density(const StateVector& psi);

/// Diagnostic only: reports deviations and flags pass/fail, never throws.
ValidationReport validate(const DensityMatrix& rho,
                          const ValidationTolerances& tol = {});

} // namespace decosim

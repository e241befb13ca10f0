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

#include "decosim/state.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "decosim/errors.hpp"

namespace decosim {

namespace {
constexpr double kNormTolerance = 1e-9;
}

StateVector ket(std::string_view bits) {
    if (bits.empty()) {
        throw ConfigError("ket: empty bitstring");
    }
    if (bits.size() > static_cast<std::size_t>(kMaxRegisterQubits)) {
        throw ConfigError("ket: bitstring wider than the register cap");
    }
    Eigen::Index index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw ConfigError("ket: invalid character '" + std::string(1, c) +
                              "' in bitstring \"" + std::string(bits) + "\"");
        }
        index = (index << 1) | (c == '1' ? 1 : 0);
    }
    StateVector psi;
    psi.n_qubits = static_cast<int>(bits.size());
    psi.amplitudes = ComplexVector::Zero(Eigen::Index{1} << psi.n_qubits);
    psi.amplitudes[index] = 1.0;
    return psi;
}

StateVector product_state(const std::vector<std::pair<Complex, Complex>>& per_qubit) {
    if (per_qubit.empty()) {
        throw ConfigError("product_state: no qubits given");
    }
    if (per_qubit.size() > static_cast<std::size_t>(kMaxRegisterQubits)) {
        throw ConfigError("product_state: wider than the register cap");
    }
    for (std::size_t q = 0; q < per_qubit.size(); ++q) {
        const auto& [a, b] = per_qubit[q];
        const double norm = std::norm(a) + std::norm(b);
        if (std::abs(norm - 1.0) > kNormTolerance) {
            throw ConfigError("product_state: qubit " + std::to_string(q) +
                              " amplitudes not normalized, |a|^2+|b|^2 = " +
                              std::to_string(norm));
        }
    }
    ComplexVector amps = ComplexVector::Ones(1);
    for (const auto& [a, b] : per_qubit) {
        ComplexVector next(amps.size() * 2);
        for (Eigen::Index i = 0; i < amps.size(); ++i) {
            next[2 * i] = amps[i] * a;
            next[2 * i + 1] = amps[i] * b;
        }
        amps = std::move(next);
    }
    StateVector psi;
    psi.n_qubits = static_cast<int>(per_qubit.size());
    psi.amplitudes = std::move(amps);
    return psi;
}

DensityMatrix density_from_ensemble(const std::vector<StateVector>& states,
                                    const std::vector<double>& probs) {
    if (states.empty() || states.size() != probs.size()) {
        throw ConfigError("density_from_ensemble: need equally many states and probabilities");
    }
    const int n = states.front().n_qubits;
    double total = 0.0;
    for (double p : probs) {
        if (p < 0.0) {
            throw ConfigError("density_from_ensemble: negative probability");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kNormTolerance) {
        throw ConfigError("density_from_ensemble: probabilities sum to " +
                          std::to_string(total));
    }
    const Eigen::Index dim = states.front().dim();
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].n_qubits != n) {
            throw ConfigError("density_from_ensemble: mixed state widths");
        }
        rho.noalias() += probs[i] * (states[i].amplitudes * states[i].amplitudes.adjoint());
    }
    DensityMatrix out{n, std::move(rho)};
    ValidationReport report = validate(out);
    if (!report.pass) {
        throw NumericalError("density_from_ensemble: constructed matrix fails validation");
    }
    return out;
}

DensityMatrix pure_density(const StateVector& psi) {
    return density_from_ensemble({psi}, {1.0});
}

ValidationReport validate(const DensityMatrix& rho, const ValidationTolerances& tol) {
    ValidationReport report;
    report.trace_deviation = std::abs(rho.mat.trace() - Complex(1.0, 0.0));
    report.hermiticity_deviation = hermiticity_deviation(rho.mat);
    // eigenvalues of the Hermitian part; a strongly non-Hermitian input
    // already fails on the deviation above
    const ComplexMatrix herm = 0.5 * (rho.mat + ComplexMatrix(rho.mat.adjoint()));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm, Eigen::EigenvaluesOnly);
    report.min_eigenvalue =
        solver.info() == Eigen::Success ? solver.eigenvalues().minCoeff()
                                        : -std::numeric_limits<double>::infinity();
    report.pass = report.trace_deviation <= tol.trace &&
                  report.hermiticity_deviation <= tol.hermiticity &&
                  report.min_eigenvalue >= tol.min_eigenvalue;
    return report;
}

} // namespace decosim

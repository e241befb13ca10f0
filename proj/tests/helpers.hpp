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

#include <random>

#include "decosim/linalg.hpp"
#include "decosim/state.hpp"

namespace test_helpers {

using decosim::Complex;
using decosim::ComplexMatrix;
using decosim::ComplexVector;

inline ComplexMatrix random_complex(std::mt19937& rng, Eigen::Index dim) {
    std::normal_distribution<double> dist;
    ComplexMatrix m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            m(r, c) = Complex(dist(rng), dist(rng));
        }
    }
    return m;
}

inline ComplexMatrix random_hermitian(std::mt19937& rng, Eigen::Index dim) {
    const ComplexMatrix m = random_complex(rng, dim);
    return 0.5 * (m + ComplexMatrix(m.adjoint()));
}

inline ComplexMatrix random_psd(std::mt19937& rng, Eigen::Index dim) {
    const ComplexMatrix m = random_complex(rng, dim);
    return (m * m.adjoint()) / static_cast<double>(dim);
}

inline decosim::StateVector random_pure(std::mt19937& rng, int n_qubits) {
    std::normal_distribution<double> dist;
    decosim::StateVector psi;
    psi.n_qubits = n_qubits;
    psi.amplitudes = ComplexVector(Eigen::Index{1} << n_qubits);
    for (Eigen::Index i = 0; i < psi.amplitudes.size(); ++i) {
        psi.amplitudes[i] = Complex(dist(rng), dist(rng));
    }
    psi.amplitudes.normalize();
    return psi;
}

inline decosim::DensityMatrix random_density(std::mt19937& rng, int n_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    ComplexMatrix m = random_psd(rng, dim);
    m /= m.trace().real();
    return {n_qubits, std::move(m)};
}

inline double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

} // namespace test_helpers

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

#include "decosim/linalg.hpp"

#include <string>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "decosim/errors.hpp"

namespace decosim {

namespace {

constexpr double kHermTolerance = 1e-10;
constexpr double kNegativityFloor = -1e-9;

void require_finite(const ComplexMatrix& m, const char* op) {
    if (!m.allFinite()) {
        throw NumericalError(std::string(op) + ": non-finite entries");
    }
}

} // namespace

double max_abs(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

double hermiticity_deviation(const ComplexMatrix& m) {
    return max_abs(m - m.adjoint());
}

ComplexMatrix identity(Eigen::Index dim) {
    return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() * b.rows() > kMaxMatrixDim) {
        throw ConfigError("kron: result dimension " + std::to_string(a.rows() * b.rows()) +
                          " exceeds the " + std::to_string(kMaxRegisterQubits) +
                          "-qubit register cap");
    }
    require_finite(a, "kron");
    require_finite(b, "kron");
    ComplexMatrix out = Eigen::kroneckerProduct(a, b);
    return out;
}

EighResult eigh(const ComplexMatrix& m) {
    require_finite(m, "eigh");
    const double dev = hermiticity_deviation(m);
    if (dev > kHermTolerance) {
        throw NumericalError("eigh: input not Hermitian, ||m - m^dag||_max = " +
                             std::to_string(dev));
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigh: eigendecomposition failed to converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix sqrtm_psd(const ComplexMatrix& m) {
    EighResult es = eigh(m);
    Eigen::VectorXd roots(es.eigenvalues.size());
    for (Eigen::Index i = 0; i < es.eigenvalues.size(); ++i) {
        const double lambda = es.eigenvalues[i];
        if (lambda < kNegativityFloor) {
            throw NumericalError("sqrtm_psd: eigenvalue " + std::to_string(lambda) +
                                 " below the clamp floor; positivity broken upstream");
        }
        roots[i] = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
    }
    ComplexMatrix s = es.eigenvectors * roots.asDiagonal() * es.eigenvectors.adjoint();
    // construction is Hermitian up to roundoff; symmetrize so S = S^dag exactly
    return 0.5 * (s + ComplexMatrix(s.adjoint()));
}

ComplexMatrix expm(const ComplexMatrix& m) {
    require_finite(m, "expm");
    ComplexMatrix out = m.exp();
    require_finite(out, "expm");
    return out;
}

} // namespace decosim

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

#include <complex>

#include <Eigen/Dense>

namespace decosim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Largest supported register. Dense storage only; everything in this
/// simulator tops out well below this.
inline constexpr int kMaxRegisterQubits = 10;
inline constexpr Eigen::Index kMaxMatrixDim = Eigen::Index{1} << kMaxRegisterQubits;

struct EighResult {
    Eigen::VectorXd eigenvalues; // ascending
    ComplexMatrix eigenvectors;  // columns, unitary
};

/// ||m||_max, the largest entry magnitude.
double max_abs(const ComplexMatrix& m);

/// ||m - m^dagger||_max.
double hermiticity_deviation(const ComplexMatrix& m);

ComplexMatrix identity(Eigen::Index dim);

/// Tensor product with big-endian ordering:
/// out[(i*db+k),(j*db+l)] = a(i,j) * b(k,l).
/// Throws ConfigError when the result would exceed the register cap.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hermitian eigendecomposition, eigenvalues ascending.
/// Throws NumericalError when the input is not Hermitian to 1e-10.
EighResult eigh(const ComplexMatrix& m);

/// Hermitian PSD square root. Eigenvalues in [-1e-9, 0) are clamped to 0;
/// anything below -1e-9 signals broken positivity upstream and throws
/// NumericalError.
ComplexMatrix sqrtm_psd(const ComplexMatrix& m);

/// Matrix exponential (Pade + scaling-and-squaring).
ComplexMatrix expm(const ComplexMatrix& m);

} // namespace decosim

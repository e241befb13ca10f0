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

#include "decosim/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "decosim/errors.hpp"

namespace decosim {

namespace {

double fidelity_raw(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
    const ComplexMatrix root = sqrtm_psd(rho);
    ComplexMatrix inner = root * sigma * root;
    inner = 0.5 * (inner + ComplexMatrix(inner.adjoint()));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(inner, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("fidelity: eigendecomposition failed");
    }
    double sum = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double lambda = solver.eigenvalues()[i];
        if (lambda > 0.0) sum += std::sqrt(lambda);
    }
    return sum;
}

} // namespace

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim()) {
        throw ConfigError("fidelity: dimension mismatch");
    }
    return std::clamp(fidelity_raw(rho.mat, sigma.mat), 0.0, 1.0);
}

double purity(const DensityMatrix& rho) {
    return (rho.mat * rho.mat).trace().real();
}

FidelitySeries fidelity_series(const Trajectory& noisy, const Trajectory& target,
                               RunLabels labels) {
    if (noisy.size() != target.size()) {
        throw ConfigError("fidelity_series: trajectories have different sample counts");
    }
    FidelitySeries series;
    series.labels = std::move(labels);
    series.times_slots.reserve(noisy.size());
    series.fidelity.reserve(noisy.size());
    for (std::size_t i = 0; i < noisy.size(); ++i) {
        if (std::abs(noisy.times[i] - target.times[i]) > 1e-9) {
            throw ConfigError("fidelity_series: sampling grids differ at index " +
                              std::to_string(i));
        }
        series.times_slots.push_back(noisy.times[i] / kSlotDuration);
        series.fidelity.push_back(
            std::clamp(fidelity_raw(noisy.states[i], target.states[i]), 0.0, 1.0));
    }
    return series;
}

} // namespace decosim

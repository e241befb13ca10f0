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

#include <vector>

#include "decosim/linalg.hpp"
#include "decosim/state.hpp"

namespace decosim {

/// Piecewise-constant drive: one Hamiltonian per segment, hbar = 1.
struct ScheduleSegment {
    ComplexMatrix hamiltonian;
    double duration = 0.0; // time units, > 0
};
using Schedule = std::vector<ScheduleSegment>;

struct EvolutionProblem {
    DensityMatrix rho0;
    Schedule schedule;
    std::vector<ComplexMatrix> lindblad_ops;
    double dt = 1e-3;
    int sample_every = 25;
    /// Cleared for paper-literal runs with a non-Hermitian drive, whose
    /// evolution is intentionally non-physical.
    bool enforce_invariants = true;
};

/// Sampled evolution. Samples land at t = 0, every `sample_every` steps,
/// and at every schedule boundary; times are strictly increasing.
struct Trajectory {
    int n_qubits = 0;
    std::vector<double> times;
    std::vector<ComplexMatrix> states;
    std::vector<double> purity;     // tr(rho^2) per sample
    std::vector<double> trace_real; // Re tr(rho) per sample

    bool invariants_checked = true;
    double max_trace_deviation = 0.0;
    double max_hermiticity_deviation = 0.0;
    double min_eigenvalue = 0.0; // most negative eigenvalue seen
    /// Largest |duration - rounded duration| over the schedule; segment
    /// durations are rounded to whole steps so boundaries land on the grid.
    double schedule_rounding_error = 0.0;

    std::size_t size() const { return times.size(); }
    /// Index of the sample closest to time t.
    std::size_t index_at(double t) const;
};

/// Right-hand side of the master equation in the convention used
/// throughout this project:
///   drho/dt = -i[H,rho] + sum_j (2 L_j rho L_j^dag
///                                - L_j^dag L_j rho - rho L_j^dag L_j)
/// Note the factor 2 on the sandwich term and the unhalved anticommutator;
/// all analytic targets (population decay e^{-2 gamma t}, coherence decay
/// e^{-gamma t} and e^{-4 lambda t}) follow from exactly this form.
ComplexMatrix lindblad_rhs(const ComplexMatrix& h,
                           const std::vector<ComplexMatrix>& ls,
                           const ComplexMatrix& rho);

/// Classical fixed-step 4th-order integration of lindblad_rhs over the
/// schedule. No trace renormalization is applied: drift is a quality
/// signal. Throws NumericalError when trace drift exceeds 1e-6 or an
/// eigenvalue falls below -1e-6 (use a smaller dt).
Trajectory evolve(const EvolutionProblem& problem);

/// Noiseless reference: rho(t) = U rho0 U^dag with U accumulated per
/// segment from exp(-i H dt). Sampled on the same grid as evolve() so the
/// two trajectories can be compared pointwise.
Trajectory evolve_noiseless(const DensityMatrix& rho0, const Schedule& schedule,
                            double dt = 1e-3, int sample_every = 25);

/// Independent validation path: vectorizes rho column-wise, builds the
/// Liouvillian matrix and propagates by its exact exponential. Registers
/// wider than 2 qubits are refused.
Trajectory evolve_superop(const EvolutionProblem& problem);

} // namespace decosim

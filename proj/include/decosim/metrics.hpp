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

#include <string>
#include <vector>

#include "decosim/engine.hpp"
#include "decosim/state.hpp"

namespace decosim {

/// One gate slot lasts pi/2 time units; times are reported to users in
/// slot units so circuit plots line up with gate counts.
inline constexpr double kSlotDuration = 1.5707963267948966;

struct RunLabels {
    std::string subject; // gate or netlist name
    std::string input;
    std::string noise;
    double strength = 0.0;
    std::string mode;
};

struct FidelitySeries {
    std::vector<double> times_slots; // gate-slot units
    std::vector<double> fidelity;    // clamped to [0, 1]
    RunLabels labels;
};

/// Uhlmann fidelity F(rho, sigma) = tr sqrt(rho^{1/2} sigma rho^{1/2}),
/// the square-root form without the outer square. Equals |<psi|phi>| on
/// pure states. Symmetric in its arguments to 1e-8.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// tr(rho^2), in [1/2^n, 1].
double purity(const DensityMatrix& rho);

/// Pointwise fidelity of a noisy trajectory against its noiseless target.
/// The two trajectories must share the sampling grid.
FidelitySeries fidelity_series(const Trajectory& noisy, const Trajectory& target,
                               RunLabels labels = {});

} // namespace decosim

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

#include <cmath>

#include "doctest.h"

#include "decosim/errors.hpp"
#include "decosim/gates.hpp"
#include "decosim/metrics.hpp"
#include "decosim/noise.hpp"
#include "helpers.hpp"

using namespace decosim;

TEST_CASE("fidelity of identical and orthogonal states") {
    std::mt19937 rng(51);
    const DensityMatrix rho = test_helpers::random_density(rng, 2);
    CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-9));

    CHECK(fidelity(pure_density(ket("0")), pure_density(ket("1"))) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("fidelity of |0> against |+> is 1/sqrt(2)") {
    const double s = 1.0 / std::sqrt(2.0);
    const DensityMatrix plus = pure_density(product_state({{s, s}}));
    CHECK(fidelity(pure_density(ket("0")), plus) ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-8));
}

TEST_CASE("fidelity is symmetric") {
    std::mt19937 rng(52);
    for (int trial = 0; trial < 5; ++trial) {
        const DensityMatrix a = test_helpers::random_density(rng, 2);
        const DensityMatrix b = test_helpers::random_density(rng, 2);
        CHECK(std::abs(fidelity(a, b) - fidelity(b, a)) <= 1e-8);
    }
}

TEST_CASE("fidelity reduces to the overlap on pure states") {
    std::mt19937 rng(53);
    for (int n : {1, 2, 3}) {
        const StateVector psi = test_helpers::random_pure(rng, n);
        const StateVector phi = test_helpers::random_pure(rng, n);
        // Eigen's dot conjugates its first operand, so this is <psi|phi>
        const double overlap = std::abs(psi.amplitudes.dot(phi.amplitudes));
        CHECK(std::abs(fidelity(pure_density(psi), pure_density(phi)) - overlap) <= 1e-8);
    }
}

TEST_CASE("fidelity rejects dimension mismatches and broken positivity") {
    CHECK_THROWS_AS(fidelity(pure_density(ket("0")), pure_density(ket("00"))), ConfigError);

    ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
    bad(0, 0) = 1.5;
    bad(1, 1) = -0.5;
    CHECK_THROWS_AS(fidelity({1, bad}, pure_density(ket("0"))), NumericalError);
}

TEST_CASE("purity closed forms") {
    CHECK(purity(pure_density(ket("101"))) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(purity({1, 0.5 * identity(2)}) == doctest::Approx(0.5).epsilon(1e-12));

    // amplitude-damped |1><1| at gamma t = 0.1:
    // purity = e^{-0.4} + (1 - e^{-0.2})^2
    ComplexMatrix damped = ComplexMatrix::Zero(2, 2);
    damped(0, 0) = 1.0 - std::exp(-0.2);
    damped(1, 1) = std::exp(-0.2);
    const double want = std::exp(-0.4) + std::pow(1.0 - std::exp(-0.2), 2.0);
    CHECK(want == doctest::Approx(0.7031785862).epsilon(1e-9));
    CHECK(purity({1, damped}) == doctest::Approx(want).epsilon(1e-12));
}

namespace {

struct SeriesFixture {
    FidelitySeries series;
    Trajectory noisy;
    Trajectory target;
};

SeriesFixture gate_series(GateKind kind, const std::string& input, NoiseKind noise,
                          double strength, int window_slots) {
    const int n = static_cast<int>(input.size());
    std::vector<int> wires(gate_arity(kind));
    for (std::size_t i = 0; i < wires.size(); ++i) wires[i] = static_cast<int>(i);

    EvolutionProblem p;
    p.rho0 = pure_density(ket(input));
    p.schedule = {{embed(kind, wires, n).eval(), kSlotDuration}};
    p.schedule[0].hamiltonian = embed(generator(kind, DriveMode::kHermitianGenerator),
                                      wires, n);
    if (window_slots > 1) {
        p.schedule.push_back(
            {ComplexMatrix::Zero(p.rho0.dim(), p.rho0.dim()), (window_slots - 1) * kSlotDuration});
    }
    p.lindblad_ops = lindblad_ops({noise, strength, n});

    SeriesFixture fx;
    fx.noisy = evolve(p);
    fx.target = evolve_noiseless(p.rho0, p.schedule);
    fx.series = fidelity_series(fx.noisy, fx.target,
                                {std::string(gate_name(kind)), input,
                                 std::string(noise_name(noise)), strength, "hermitian"});
    return fx;
}

} // namespace

TEST_CASE("fidelity series of a noiseless run stays at 1") {
    const auto fx = gate_series(GateKind::kToffoli, "110", NoiseKind::kNone, 0.0, 2);
    for (double f : fx.series.fidelity) {
        CHECK(std::abs(f - 1.0) <= 1e-7);
    }
    CHECK(fx.series.labels.subject == "toffoli");
    // times are reported in slot units
    CHECK(fx.series.times_slots.back() == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("Toffoli on |110> under amplitude damping decays monotonically") {
    const auto fx = gate_series(GateKind::kToffoli, "110", NoiseKind::kAmplitude, 0.02, 3);
    for (std::size_t i = 1; i < fx.series.fidelity.size(); ++i) {
        CHECK(fx.series.fidelity[i] <= fx.series.fidelity[i - 1] + 1e-9);
    }
    CHECK(fx.series.fidelity.back() < 0.99);
}

TEST_CASE("phase damping through CNOT on |110> goes flat after the slot") {
    const auto fx = gate_series(GateKind::kCnot, "110", NoiseKind::kPhase, 0.02, 3);
    double readout = 0.0;
    bool constant_after = true;
    double prev = -1.0;
    for (std::size_t i = 0; i < fx.series.fidelity.size(); ++i) {
        if (fx.series.times_slots[i] >= 1.0 - 1e-9) {
            if (prev >= 0.0 && std::abs(fx.series.fidelity[i] - prev) > 1e-6) {
                constant_after = false;
            }
            prev = fx.series.fidelity[i];
            if (readout == 0.0) readout = fx.series.fidelity[i];
        }
    }
    CHECK(readout < 1.0);
    CHECK(readout > 0.9);
    CHECK(constant_after);
}

TEST_CASE("fidelity against a frozen target never rises under free amplitude decay") {
    EvolutionProblem p;
    p.rho0 = pure_density(ket("11"));
    p.schedule = {{ComplexMatrix::Zero(4, 4), 5.0}};
    p.lindblad_ops = lindblad_ops({NoiseKind::kAmplitude, 0.05, 2});
    const Trajectory noisy = evolve(p);
    const Trajectory target = evolve_noiseless(p.rho0, p.schedule);
    const FidelitySeries series = fidelity_series(noisy, target);
    for (std::size_t i = 1; i < series.fidelity.size(); ++i) {
        CHECK(series.fidelity[i] <= series.fidelity[i - 1] + 1e-9);
    }
}

TEST_CASE("fidelity_series rejects mismatched grids") {
    EvolutionProblem p;
    p.rho0 = pure_density(ket("0"));
    p.schedule = {{ComplexMatrix::Zero(2, 2), 1.0}};
    const Trajectory a = evolve(p);
    p.schedule[0].duration = 2.0;
    const Trajectory b = evolve(p);
    CHECK_THROWS_AS(fidelity_series(a, b), ConfigError);
}

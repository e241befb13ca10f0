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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "decosim/engine.hpp"
#include "decosim/gates.hpp"
#include "decosim/metrics.hpp"
#include "decosim/noise.hpp"

namespace decosim {

struct GateInstance {
    GateKind kind;
    std::vector<int> wires; // controls first, target last
    int line = 0;           // source line, for diagnostics
};

/// Declared adder output roles; remaining wires are garbage.
struct AdderOutputs {
    int sum_wire = 0;
    int carry_wire = 0;
};

struct Netlist {
    std::string name;
    int n_qubits = 0;
    std::vector<GateInstance> gates;
    std::optional<AdderOutputs> outputs;

    int depth() const { return static_cast<int>(gates.size()); }
};

/// Netlist text format: '#' starts a comment; the first effective line is
/// "qubits N"; every other line is "name w0 [w1 [w2]]" with 0-based wires,
/// qubit 0 most significant. An optional "outputs sum=K carry=K" line
/// declares adder output roles. Errors carry line numbers.
Netlist parse_netlist(std::string_view text, std::string_view name = "netlist");
Netlist load_netlist(const std::filesystem::path& path);

/// One segment per gate, strictly sequential, each slot pi/2 long with
/// H = embed(generator(kind, mode), wires, n).
Schedule schedule(const Netlist& netlist, DriveMode mode);

/// Noiseless functional oracle: maps every basis input to its basis output
/// under exact unitary application. Refuses netlists containing
/// non-classical gates (h, s, t).
std::map<std::string, std::string> truth_table(const Netlist& netlist);

struct CircuitRun {
    std::string netlist_name;
    std::string input;
    NoiseSpec noise;
    DriveMode mode = DriveMode::kHermitianGenerator;
    Trajectory trajectory; // noisy evolution
    FidelitySeries fidelity;
    double readout_time = 0.0; // end of the final gate slot, time units
    double readout_fidelity = 0.0;
};

/// Full noisy run: noise acts over the whole window, including any idle
/// tail past the last gate; the readout stays at depth * pi/2. A
/// window_slots of 0 means exactly the circuit depth.
CircuitRun simulate_circuit(const Netlist& netlist, std::string_view input_bits,
                            const NoiseSpec& noise, DriveMode mode, double dt = 1e-3,
                            int window_slots = 0);

struct AdderComparison {
    struct InputResult {
        std::string input; // abc bits
        double fidelity_a = 0.0;
        double fidelity_b = 0.0;
    };
    struct RunDiagnostics {
        double max_trace_deviation = 0.0;
        double max_hermiticity_deviation = 0.0;
        double min_eigenvalue = 0.0;
    };

    std::vector<InputResult> per_input; // all 8 classical inputs, in order
    double average_a = 0.0;
    double average_b = 0.0;
    double improvement_percent = 0.0; // (average_a / average_b - 1) * 100

    // fidelity-vs-time curves for input 111, over a shared window
    FidelitySeries series_a_111;
    FidelitySeries series_b_111;

    std::vector<RunDiagnostics> run_diagnostics; // all 16 noisy runs
};

/// Simulates both adders over all 8 classical inputs (ancillas 0), reading
/// each circuit out at its own final slot. The functional oracle runs
/// first; a truth-table mismatch aborts before any noisy simulation.
AdderComparison adder_compare(const Netlist& a, const Netlist& b, const NoiseSpec& noise,
                              DriveMode mode, double dt = 1e-3);

} // namespace decosim

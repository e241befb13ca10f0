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
#include <iosfwd>
#include <string>
#include <vector>

#include "decosim/circuit.hpp"

namespace decosim {

/// Resolved experiment parameters; field names match the CLI flags.
struct ExperimentConfig {
    std::string experiment;               // single-gate | sweep | circuit | adder-compare
    std::vector<std::string> gates;       // empty = the six standard gates
    std::string input = "000";            // bitstring, or per-qubit "a,b;a,b;..."
    std::string noise = "amp";            // amp | phase | none
    std::vector<double> gammas = {0.02};
    std::vector<double> lambdas = {0.02};
    bool gamma_set = false;               // flag explicitly given on the CLI
    bool lambda_set = false;
    std::string mode = "hermitian";       // hermitian | paper-literal
    double dt = 1e-3;
    int slots = 0;                        // simulated window; 0 = experiment default
    std::vector<std::string> netlists;
    std::string out = "out";              // output directory
};

NoiseKind parse_noise_kind(const std::string& text);
DriveMode parse_drive_mode(const std::string& text);

/// Bitstring ("110"), or real amplitude pairs: "a,b" applies the same
/// superposition to every qubit, "a,b;a,b;..." lists one pair per qubit.
StateVector parse_input_state(const std::string& text, int expected_width);

/// Fidelity-vs-time CSV for each selected gate on a common 3-qubit
/// register; prints readout fidelities (sorted) to `summary`.
void run_single_gate(const ExperimentConfig& config, std::ostream& summary);

/// One gate, one input, one fidelity column per noise strength, plus a
/// pointwise monotonicity check in the summary.
void run_sweep(const ExperimentConfig& config, std::ostream& summary);

/// Full noisy run of one netlist.
void run_circuit(const ExperimentConfig& config, std::ostream& summary);

/// Both adders over all 8 classical inputs: per-input table, averages,
/// relative improvement, and the input-111 curves as CSV.
void run_adder_compare(const ExperimentConfig& config, std::ostream& summary);

} // namespace decosim

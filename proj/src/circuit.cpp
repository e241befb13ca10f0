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

#include "decosim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "decosim/errors.hpp"

namespace decosim {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::istringstream stream{std::string(line)};
    std::string tok;
    while (stream >> tok) tokens.push_back(tok);
    return tokens;
}

int parse_wire(const std::string& tok, int line_no, std::string_view name) {
    try {
        std::size_t used = 0;
        const int wire = std::stoi(tok, &used);
        if (used != tok.size() || wire < 0) throw std::invalid_argument(tok);
        return wire;
    } catch (const std::exception&) {
        throw ConfigError(std::string(name) + ":" + std::to_string(line_no) +
                          ": bad wire index '" + tok + "'");
    }
}

int parse_assignment(const std::string& tok, std::string_view key, int line_no,
                     std::string_view name) {
    const std::string prefix = std::string(key) + "=";
    if (tok.rfind(prefix, 0) != 0) {
        throw ConfigError(std::string(name) + ":" + std::to_string(line_no) +
                          ": expected '" + prefix + "<wire>', got '" + tok + "'");
    }
    return parse_wire(tok.substr(prefix.size()), line_no, name);
}

bool is_classical(GateKind kind) {
    switch (kind) {
        case GateKind::kNot:
        case GateKind::kCnot:
        case GateKind::kToffoli:
        case GateKind::kFredkin:
        case GateKind::kIdentity:
            return true;
        default:
            return false;
    }
}

std::string bits_of(Eigen::Index index, int n_qubits) {
    std::string bits(n_qubits, '0');
    for (int q = 0; q < n_qubits; ++q) {
        if ((index >> (n_qubits - 1 - q)) & 1) bits[q] = '1';
    }
    return bits;
}

} // namespace

Netlist parse_netlist(std::string_view text, std::string_view name) {
    Netlist netlist;
    netlist.name = std::string(name);

    std::istringstream stream{std::string(text)};
    std::string raw;
    int line_no = 0;
    bool have_header = false;

    while (std::getline(stream, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        const auto tokens = tokenize(raw);
        if (tokens.empty()) continue;

        if (!have_header) {
            if (tokens[0] != "qubits" || tokens.size() != 2) {
                throw ConfigError(std::string(name) + ":" + std::to_string(line_no) +
                                  ": expected 'qubits N' as the first line");
            }
            netlist.n_qubits = parse_wire(tokens[1], line_no, name);
            if (netlist.n_qubits < 1 || netlist.n_qubits > kMaxRegisterQubits) {
                throw ConfigError(std::string(name) + ":" + std::to_string(line_no) +
                                  ": register width must be in [1, " +
                                  std::to_string(kMaxRegisterQubits) + "]");
            }
            have_header = true;
            continue;
        }

        if (tokens[0] == "outputs") {
            if (tokens.size() != 3) {
                throw ConfigError(std::string(name) + ":" + std::to_string(line_no) +
                                  ": expected 'outputs sum=K carry=K'");
            }
            AdderOutputs outputs;
            outputs.sum_wire = parse_assignment(tokens[1], "sum", line_no, name);
            outputs.carry_wire = parse_assignment(tokens[2], "carry", line_no, name);
            if (outputs.sum_wire >= netlist.n_qubits ||
                outputs.carry_wire >= netlist.n_qubits ||
                outputs.sum_wire == outputs.carry_wire) {
                throw ConfigError(std::string(name) + ":" + std::to_string(line_no) +
                                  ": output wires out of range or not distinct");
            }
            netlist.outputs = outputs;
            continue;
        }

        const auto kind = gate_from_name(tokens[0]);
        if (!kind) {
            throw ConfigError(std::string(name) + ":" + std::to_string(line_no) +
                              ": unknown gate '" + tokens[0] + "'");
        }
        GateInstance inst;
        inst.kind = *kind;
        inst.line = line_no;
        const int arity = gate_arity(*kind);
        if (static_cast<int>(tokens.size()) - 1 != arity) {
            throw ConfigError(std::string(name) + ":" + std::to_string(line_no) + ": gate '" +
                              tokens[0] + "' takes " + std::to_string(arity) +
                              " wires, got " + std::to_string(tokens.size() - 1));
        }
        for (int i = 1; i <= arity; ++i) {
            const int wire = parse_wire(tokens[i], line_no, name);
            if (wire >= netlist.n_qubits) {
                throw ConfigError(std::string(name) + ":" + std::to_string(line_no) +
                                  ": wire " + std::to_string(wire) + " out of range");
            }
            if (std::find(inst.wires.begin(), inst.wires.end(), wire) != inst.wires.end()) {
                throw ConfigError(std::string(name) + ":" + std::to_string(line_no) +
                                  ": duplicate wire " + std::to_string(wire));
            }
            inst.wires.push_back(wire);
        }
        netlist.gates.push_back(std::move(inst));
    }

    if (!have_header) {
        throw ConfigError(std::string(name) + ": missing 'qubits N' header");
    }
    return netlist;
}

Netlist load_netlist(const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file) {
        throw ConfigError("cannot open netlist file: " + path.string());
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    return parse_netlist(buffer.str(), path.stem().string());
}

Schedule schedule(const Netlist& netlist, DriveMode mode) {
    Schedule out;
    out.reserve(netlist.gates.size());
    for (const auto& gate : netlist.gates) {
        out.push_back({embed(generator(gate.kind, mode), gate.wires, netlist.n_qubits),
                       kSlotDuration});
    }
    return out;
}

std::map<std::string, std::string> truth_table(const Netlist& netlist) {
    for (const auto& gate : netlist.gates) {
        if (!is_classical(gate.kind)) {
            throw FunctionalError("truth_table: netlist '" + netlist.name +
                                  "' contains non-classical gate '" +
                                  std::string(gate_name(gate.kind)) + "' (line " +
                                  std::to_string(gate.line) + ")");
        }
    }
    std::vector<ComplexMatrix> unitaries;
    unitaries.reserve(netlist.gates.size());
    for (const auto& gate : netlist.gates) {
        unitaries.push_back(embed(gate.kind, gate.wires, netlist.n_qubits));
    }

    const Eigen::Index dim = Eigen::Index{1} << netlist.n_qubits;
    std::map<std::string, std::string> table;
    for (Eigen::Index input = 0; input < dim; ++input) {
        ComplexVector v = ComplexVector::Zero(dim);
        v[input] = 1.0;
        for (const auto& u : unitaries) {
            v = u * v;
        }
        Eigen::Index out_index = 0;
        v.cwiseAbs().maxCoeff(&out_index);
        if (std::abs(std::abs(v[out_index]) - 1.0) > 1e-9) {
            throw FunctionalError("truth_table: output of '" + netlist.name +
                                  "' is not a basis state for input " +
                                  bits_of(input, netlist.n_qubits));
        }
        table[bits_of(input, netlist.n_qubits)] = bits_of(out_index, netlist.n_qubits);
    }
    return table;
}

CircuitRun simulate_circuit(const Netlist& netlist, std::string_view input_bits,
                            const NoiseSpec& noise, DriveMode mode, double dt,
                            int window_slots) {
    if (static_cast<int>(input_bits.size()) != netlist.n_qubits) {
        throw ConfigError("simulate_circuit: input width " +
                          std::to_string(input_bits.size()) + " does not match register " +
                          std::to_string(netlist.n_qubits));
    }
    if (noise.n_qubits != netlist.n_qubits) {
        throw ConfigError("simulate_circuit: noise spec register width mismatch");
    }
    if (window_slots != 0 && window_slots < netlist.depth()) {
        throw ConfigError("simulate_circuit: window shorter than the circuit depth");
    }

    EvolutionProblem problem;
    problem.rho0 = pure_density(ket(input_bits));
    problem.schedule = schedule(netlist, mode);
    problem.dt = dt;

    // idle tail past the last gate: drive off, noise stays on; one segment
    // per slot keeps the sampling grid identical across circuits of equal
    // window, whatever their depths
    const int depth = netlist.depth();
    const int window = window_slots == 0 ? depth : window_slots;
    const Eigen::Index dim = problem.rho0.dim();
    for (int slot = depth; slot < window; ++slot) {
        problem.schedule.push_back({ComplexMatrix::Zero(dim, dim), kSlotDuration});
    }
    if (problem.schedule.empty()) {
        throw ConfigError("simulate_circuit: empty schedule (zero-depth circuit and window)");
    }

    problem.lindblad_ops = lindblad_ops(noise);
    bool hermitian_drives = true;
    for (const auto& gate : netlist.gates) {
        hermitian_drives = hermitian_drives && drive_is_hermitian(gate.kind, mode);
    }
    problem.enforce_invariants = hermitian_drives;

    Trajectory noisy = evolve(problem);
    Trajectory target =
        evolve_noiseless(problem.rho0, problem.schedule, dt, problem.sample_every);

    CircuitRun run;
    run.netlist_name = netlist.name;
    run.input = std::string(input_bits);
    run.noise = noise;
    run.mode = mode;
    run.fidelity = fidelity_series(
        noisy, target,
        RunLabels{netlist.name, std::string(input_bits), std::string(noise_name(noise.kind)),
                  noise.strength,
                  mode == DriveMode::kHermitianGenerator ? "hermitian" : "paper-literal"});
    run.readout_time = depth * kSlotDuration;
    run.readout_fidelity =
        depth == 0 ? 1.0 : run.fidelity.fidelity[noisy.index_at(run.readout_time)];
    run.trajectory = std::move(noisy);
    return run;
}

AdderComparison adder_compare(const Netlist& a, const Netlist& b, const NoiseSpec& noise,
                              DriveMode mode, double dt) {
    for (const Netlist* n : {&a, &b}) {
        if (n->n_qubits != 5) {
            throw ConfigError("adder_compare: netlist '" + n->name + "' is not a 5-wire adder");
        }
        if (!n->outputs) {
            throw ConfigError("adder_compare: netlist '" + n->name +
                              "' does not declare sum/carry outputs");
        }
    }
    if (noise.n_qubits != 5) {
        throw ConfigError("adder_compare: noise spec must cover 5 qubits");
    }

    // functional gate: both circuits must realize the classical full adder
    for (const Netlist* n : {&a, &b}) {
        const auto table = truth_table(*n);
        std::string diffs;
        for (int x = 0; x < 8; ++x) {
            const int bit_a = (x >> 2) & 1, bit_b = (x >> 1) & 1, bit_c = x & 1;
            const std::string input =
                std::string{char('0' + bit_a), char('0' + bit_b), char('0' + bit_c)} + "00";
            const std::string& output = table.at(input);
            const int sum = output[n->outputs->sum_wire] - '0';
            const int carry = output[n->outputs->carry_wire] - '0';
            const int want_sum = bit_a ^ bit_b ^ bit_c;
            const int want_carry = (bit_a & bit_b) | (bit_b & bit_c) | (bit_a & bit_c);
            if (sum != want_sum || carry != want_carry) {
                diffs += "\n  input " + input.substr(0, 3) + ": got sum=" +
                         std::to_string(sum) + " carry=" + std::to_string(carry) +
                         ", want sum=" + std::to_string(want_sum) +
                         " carry=" + std::to_string(want_carry);
            }
        }
        if (!diffs.empty()) {
            throw FunctionalError("adder_compare: netlist '" + n->name +
                                  "' is not a full adder:" + diffs);
        }
    }

    // shared window so both 111 curves live on one time axis
    const int window = std::max(a.depth(), b.depth());

    AdderComparison cmp;
    double total_a = 0.0, total_b = 0.0;
    for (int x = 0; x < 8; ++x) {
        const std::string abc = bits_of(x, 3);
        const std::string input = abc + "00";
        CircuitRun run_a = simulate_circuit(a, input, noise, mode, dt, window);
        CircuitRun run_b = simulate_circuit(b, input, noise, mode, dt, window);
        cmp.per_input.push_back({abc, run_a.readout_fidelity, run_b.readout_fidelity});
        total_a += run_a.readout_fidelity;
        total_b += run_b.readout_fidelity;
        for (const CircuitRun* run : {&run_a, &run_b}) {
            cmp.run_diagnostics.push_back({run->trajectory.max_trace_deviation,
                                           run->trajectory.max_hermiticity_deviation,
                                           run->trajectory.min_eigenvalue});
        }
        if (abc == "111") {
            cmp.series_a_111 = std::move(run_a.fidelity);
            cmp.series_b_111 = std::move(run_b.fidelity);
        }
    }
    cmp.average_a = total_a / 8.0;
    cmp.average_b = total_b / 8.0;
    cmp.improvement_percent = (cmp.average_a / cmp.average_b - 1.0) * 100.0;
    return cmp;
}

} // namespace decosim

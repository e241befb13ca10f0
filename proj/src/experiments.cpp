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

#include "decosim/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "decosim/errors.hpp"

#ifndef DECOSIM_VERSION
#define DECOSIM_VERSION "unknown"
#endif

namespace decosim {

namespace {

const std::vector<std::string> kDefaultGates = {"cnot", "h", "toffoli", "fredkin", "s", "t"};
constexpr int kSingleGateRegister = 3;
constexpr int kDefaultSingleGateWindowSlots = 4;

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

// single-gate experiment wiring: one-qubit gates drive q0, CNOT drives
// (control q0, target q1), three-qubit gates cover the whole register
std::vector<int> experiment_wires(GateKind kind) {
    switch (gate_arity(kind)) {
        case 1: return {0};
        case 2: return {0, 1};
        default: return {0, 1, 2};
    }
}

GateKind gate_or_throw(const std::string& name) {
    const auto kind = gate_from_name(name);
    if (!kind) {
        throw ConfigError("unknown gate '" + name + "' (known: not h cnot s t toffoli fredkin id)");
    }
    return *kind;
}

double single_strength(const ExperimentConfig& c, NoiseKind kind) {
    if (kind == NoiseKind::kNone) return 0.0;
    const auto& list = kind == NoiseKind::kAmplitude ? c.gammas : c.lambdas;
    const char* flag = kind == NoiseKind::kAmplitude ? "--gamma" : "--lambda";
    if (list.size() != 1) {
        throw ConfigError(std::string(flag) + " must be given exactly once for this experiment "
                          "(use the sweep experiment for several strengths)");
    }
    return list.front();
}

void reject_combined_noise(const ExperimentConfig& c, NoiseKind kind) {
    if (kind == NoiseKind::kAmplitude && c.lambda_set) {
        throw ConfigError("amplitude-damping run does not take --lambda; one damping kind per run");
    }
    if (kind == NoiseKind::kPhase && c.gamma_set) {
        throw ConfigError("phase-damping run does not take --gamma; one damping kind per run");
    }
    if (kind == NoiseKind::kNone && (c.gamma_set || c.lambda_set)) {
        throw ConfigError("--noise none does not take a strength");
    }
}

struct GateRun {
    FidelitySeries series;
    double readout_fidelity = 0.0;
    bool invariants_checked = true;
};

GateRun run_gate(GateKind kind, const StateVector& input, NoiseKind noise_kind,
                 double strength, DriveMode mode, double dt, int window_slots) {
    const int n = input.n_qubits;
    Schedule sched;
    sched.push_back({embed(generator(kind, mode), experiment_wires(kind), n), kSlotDuration});
    if (window_slots > 1) {
        const Eigen::Index dim = input.dim();
        sched.push_back({ComplexMatrix::Zero(dim, dim), (window_slots - 1) * kSlotDuration});
    }

    EvolutionProblem problem;
    problem.rho0 = pure_density(input);
    problem.schedule = sched;
    problem.lindblad_ops = lindblad_ops({noise_kind, strength, n});
    problem.dt = dt;
    problem.enforce_invariants = drive_is_hermitian(kind, mode);

    Trajectory noisy = evolve(problem);
    Trajectory target = evolve_noiseless(problem.rho0, sched, dt, problem.sample_every);

    GateRun run;
    run.invariants_checked = noisy.invariants_checked;
    run.series = fidelity_series(
        noisy, target,
        RunLabels{std::string(gate_name(kind)), "", std::string(noise_name(noise_kind)),
                  strength, mode == DriveMode::kHermitianGenerator ? "hermitian" : "paper-literal"});
    run.readout_fidelity = run.series.fidelity[noisy.index_at(kSlotDuration)];
    return run;
}

using CsvColumn = std::pair<std::string, const std::vector<double>*>;

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& metadata,
               const std::vector<double>& time_slots, const std::vector<CsvColumn>& columns) {
    std::ofstream file(path);
    if (!file) {
        throw ConfigError("cannot write CSV file: " + path.string());
    }
    for (const auto& line : metadata) {
        file << "# " << line << "\n";
    }
    file << "time";
    for (const auto& [name, values] : columns) {
        if (values->size() != time_slots.size()) {
            throw ConfigError("write_csv: column '" + name + "' length mismatch");
        }
        file << "," << name;
    }
    file << "\n";
    for (std::size_t i = 0; i < time_slots.size(); ++i) {
        file << fmt9(time_slots[i]);
        for (const auto& [name, values] : columns) {
            file << "," << fmt9((*values)[i]);
        }
        file << "\n";
    }
    if (!file.good()) {
        throw ConfigError("write failed: " + path.string());
    }
}

std::vector<std::string> common_metadata(const ExperimentConfig& c, NoiseKind kind,
                                         const std::string& strengths, int window_slots,
                                         bool invariants_checked) {
    std::vector<std::string> lines;
    lines.push_back("decosim " DECOSIM_VERSION);
    lines.push_back("experiment: " + c.experiment);
    lines.push_back("input: " + c.input);
    lines.push_back("noise: " + std::string(noise_name(kind)));
    lines.push_back((kind == NoiseKind::kPhase ? "lambda: " : "gamma: ") + strengths);
    lines.push_back("mode: " + c.mode);
    lines.push_back("dt: " + fmt9(c.dt));
    lines.push_back("slots: " + std::to_string(window_slots));
    lines.push_back("time unit: gate slots (1 slot = pi/2 time units)");
    lines.push_back(invariants_checked ? std::string("invariants: checked")
                                       : std::string("invariants: exempt (paper-literal "
                                                     "non-Hermitian drive)"));
    return lines;
}

std::filesystem::path ensure_out_dir(const ExperimentConfig& c) {
    std::filesystem::path dir(c.out);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw ConfigError("cannot create output directory '" + c.out + "': " + ec.message());
    }
    return dir;
}

} // namespace

NoiseKind parse_noise_kind(const std::string& text) {
    if (text == "amp") return NoiseKind::kAmplitude;
    if (text == "phase") return NoiseKind::kPhase;
    if (text == "none") return NoiseKind::kNone;
    throw ConfigError("--noise must be one of amp|phase|none, got '" + text + "'");
}

DriveMode parse_drive_mode(const std::string& text) {
    if (text == "hermitian") return DriveMode::kHermitianGenerator;
    if (text == "paper-literal") return DriveMode::kPaperLiteral;
    throw ConfigError("--mode must be hermitian or paper-literal, got '" + text + "'");
}

StateVector parse_input_state(const std::string& text, int expected_width) {
    if (text.find(',') == std::string::npos) {
        if (static_cast<int>(text.size()) != expected_width) {
            throw ConfigError("--input width " + std::to_string(text.size()) +
                              " does not match the register (" +
                              std::to_string(expected_width) + " qubits)");
        }
        return ket(text);
    }

    std::vector<std::pair<Complex, Complex>> pairs;
    std::istringstream stream(text);
    std::string chunk;
    while (std::getline(stream, chunk, ';')) {
        const auto comma = chunk.find(',');
        if (comma == std::string::npos) {
            throw ConfigError("--input: expected 'a,b' amplitude pair, got '" + chunk + "'");
        }
        try {
            const double a = std::stod(chunk.substr(0, comma));
            const double b = std::stod(chunk.substr(comma + 1));
            pairs.emplace_back(Complex(a, 0.0), Complex(b, 0.0));
        } catch (const std::exception&) {
            throw ConfigError("--input: cannot parse amplitude pair '" + chunk + "'");
        }
    }
    if (pairs.size() == 1) {
        pairs.resize(expected_width, pairs.front());
    }
    if (static_cast<int>(pairs.size()) != expected_width) {
        throw ConfigError("--input lists " + std::to_string(pairs.size()) +
                          " qubit states, register has " + std::to_string(expected_width));
    }
    return product_state(pairs);
}

void run_single_gate(const ExperimentConfig& config, std::ostream& summary) {
    const NoiseKind noise_kind = parse_noise_kind(config.noise);
    reject_combined_noise(config, noise_kind);
    const DriveMode mode = parse_drive_mode(config.mode);
    const double strength = single_strength(config, noise_kind);
    const int window = config.slots > 0 ? config.slots : kDefaultSingleGateWindowSlots;
    const StateVector input = parse_input_state(config.input, kSingleGateRegister);
    const auto& gate_names = config.gates.empty() ? kDefaultGates : config.gates;
    const std::filesystem::path dir = ensure_out_dir(config);

    std::vector<std::pair<std::string, double>> readouts;
    for (const auto& name : gate_names) {
        const GateKind kind = gate_or_throw(name);
        const GateRun run =
            run_gate(kind, input, noise_kind, strength, mode, config.dt, window);

        auto metadata =
            common_metadata(config, noise_kind, fmt9(strength), window, run.invariants_checked);
        metadata.push_back("gate: " + name);
        const auto path = dir / ("single_gate_" + name + ".csv");
        write_csv(path, metadata, run.series.times_slots, {{"fidelity", &run.series.fidelity}});
        summary << "wrote " << path.string() << "\n";
        readouts.emplace_back(name, run.readout_fidelity);
    }

    std::stable_sort(readouts.begin(), readouts.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    summary << "readout fidelities at the end of the gate slot (highest first):\n";
    for (const auto& [name, f] : readouts) {
        summary << "  " << name << std::string(9 - std::min<std::size_t>(8, name.size()), ' ')
                << fmt9(f) << "\n";
    }
}

void run_sweep(const ExperimentConfig& config, std::ostream& summary) {
    const NoiseKind noise_kind = parse_noise_kind(config.noise);
    if (noise_kind == NoiseKind::kNone) {
        throw ConfigError("sweep needs --noise amp or --noise phase");
    }
    const DriveMode mode = parse_drive_mode(config.mode);
    const auto& strengths = noise_kind == NoiseKind::kAmplitude ? config.gammas : config.lambdas;
    if (strengths.empty()) {
        throw ConfigError("sweep needs at least one noise strength");
    }
    if (config.gates.size() != 1) {
        throw ConfigError("sweep takes exactly one --gate");
    }
    const GateKind kind = gate_or_throw(config.gates.front());
    const int window = config.slots > 0 ? config.slots : kDefaultSingleGateWindowSlots;
    const StateVector input = parse_input_state(config.input, kSingleGateRegister);
    const std::filesystem::path dir = ensure_out_dir(config);

    std::vector<GateRun> runs;
    runs.reserve(strengths.size());
    for (double strength : strengths) {
        if (strength < 0.0) throw ConfigError("noise strength must be nonnegative");
        runs.push_back(run_gate(kind, input, noise_kind, strength, mode, config.dt, window));
    }

    std::string strengths_text;
    for (std::size_t i = 0; i < strengths.size(); ++i) {
        strengths_text += (i ? "," : "") + fmt9(strengths[i]);
    }
    auto metadata = common_metadata(config, noise_kind, strengths_text, window,
                                    runs.front().invariants_checked);
    metadata.push_back("gate: " + config.gates.front());
    std::vector<CsvColumn> columns;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const std::string col = i == 0 ? "fidelity" : "fidelity_" + std::to_string(i + 1);
        metadata.push_back("column " + col + ": strength=" + fmt9(strengths[i]));
        columns.emplace_back(col, &runs[i].series.fidelity);
    }
    const auto path = dir / ("sweep_" + config.gates.front() + ".csv");
    write_csv(path, metadata, runs.front().series.times_slots, columns);
    summary << "wrote " << path.string() << "\n";

    // stronger damping should never raise fidelity at any sample
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
        if (strengths[i] > strengths[i + 1]) {
            monotone = false; // unordered strengths: skip the claim
            break;
        }
        for (std::size_t k = 0; k < runs[i].series.fidelity.size(); ++k) {
            if (runs[i + 1].series.fidelity[k] > runs[i].series.fidelity[k] + 1e-9) {
                monotone = false;
                break;
            }
        }
    }
    summary << "pointwise fidelity non-increasing with strength: " << (monotone ? "yes" : "NO")
            << "\n";
    summary << "final fidelities:\n";
    for (std::size_t i = 0; i < runs.size(); ++i) {
        summary << "  strength " << fmt9(strengths[i]) << " -> "
                << fmt9(runs[i].series.fidelity.back()) << "\n";
    }
}

void run_circuit(const ExperimentConfig& config, std::ostream& summary) {
    const NoiseKind noise_kind = parse_noise_kind(config.noise);
    reject_combined_noise(config, noise_kind);
    const DriveMode mode = parse_drive_mode(config.mode);
    const double strength = single_strength(config, noise_kind);
    if (config.netlists.size() != 1) {
        throw ConfigError("circuit takes exactly one --netlist");
    }
    const Netlist netlist = load_netlist(config.netlists.front());
    const int window = config.slots > 0 ? config.slots : netlist.depth();
    const std::filesystem::path dir = ensure_out_dir(config);

    const NoiseSpec spec{noise_kind, strength, netlist.n_qubits};
    const CircuitRun run =
        simulate_circuit(netlist, config.input, spec, mode, config.dt, window);

    auto metadata = common_metadata(config, noise_kind, fmt9(strength), window,
                                    run.trajectory.invariants_checked);
    metadata.push_back("netlist: " + netlist.name + " (depth " +
                       std::to_string(netlist.depth()) + ")");
    const auto path = dir / ("circuit_" + netlist.name + ".csv");
    write_csv(path, metadata, run.fidelity.times_slots, {{"fidelity", &run.fidelity.fidelity}});
    summary << "wrote " << path.string() << "\n";
    summary << "netlist " << netlist.name << ": depth " << netlist.depth() << ", readout at slot "
            << netlist.depth() << ", fidelity " << fmt9(run.readout_fidelity) << "\n";
    summary << "trace drift " << fmt9(run.trajectory.max_trace_deviation)
            << ", min eigenvalue " << fmt9(run.trajectory.min_eigenvalue) << "\n";
}

void run_adder_compare(const ExperimentConfig& config, std::ostream& summary) {
    const NoiseKind noise_kind = parse_noise_kind(config.noise);
    reject_combined_noise(config, noise_kind);
    const DriveMode mode = parse_drive_mode(config.mode);
    const double strength = single_strength(config, noise_kind);

    std::vector<std::string> paths = config.netlists;
    if (paths.empty()) {
        paths = {"adders/qckt1.net", "adders/qckt2.net"};
    }
    if (paths.size() != 2) {
        throw ConfigError("adder-compare takes exactly two --netlist files");
    }
    const Netlist a = load_netlist(paths[0]);
    const Netlist b = load_netlist(paths[1]);
    const std::filesystem::path dir = ensure_out_dir(config);

    const AdderComparison cmp =
        adder_compare(a, b, NoiseSpec{noise_kind, strength, 5}, mode, config.dt);

    const int window = std::max(a.depth(), b.depth());
    auto metadata = common_metadata(config, noise_kind, fmt9(strength), window, true);
    metadata.push_back("netlist a: " + a.name + " (depth " + std::to_string(a.depth()) + ")");
    metadata.push_back("netlist b: " + b.name + " (depth " + std::to_string(b.depth()) + ")");
    metadata.push_back("curves: input 11100, shared window, column fidelity = " + a.name +
                       ", column fidelity_2 = " + b.name);
    const auto curves_path = dir / "adder_compare_curves.csv";
    write_csv(curves_path, metadata, cmp.series_a_111.times_slots,
              {{"fidelity", &cmp.series_a_111.fidelity},
               {"fidelity_2", &cmp.series_b_111.fidelity}});
    summary << "wrote " << curves_path.string() << "\n";

    const auto inputs_path = dir / "adder_compare_inputs.csv";
    {
        std::ofstream file(inputs_path);
        if (!file) throw ConfigError("cannot write CSV file: " + inputs_path.string());
        for (const auto& line : metadata) file << "# " << line << "\n";
        file << "input," << a.name << "," << b.name << "\n";
        for (const auto& row : cmp.per_input) {
            file << row.input << "," << fmt9(row.fidelity_a) << "," << fmt9(row.fidelity_b)
                 << "\n";
        }
    }
    summary << "wrote " << inputs_path.string() << "\n";

    summary << "per-input readout fidelities (" << a.name << " at slot " << a.depth() << ", "
            << b.name << " at slot " << b.depth() << "):\n";
    summary << "  abc   " << a.name << "   " << b.name << "\n";
    for (const auto& row : cmp.per_input) {
        summary << "  " << row.input << "   " << fmt9(row.fidelity_a) << "   "
                << fmt9(row.fidelity_b) << "\n";
    }
    summary << "averages: " << a.name << " = " << fmt9(cmp.average_a) << ", " << b.name << " = "
            << fmt9(cmp.average_b) << "\n";
    summary << "relative improvement of " << a.name << " over " << b.name << ": "
            << fmt9(cmp.improvement_percent) << "%\n";
}

} // namespace decosim

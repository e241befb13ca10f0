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

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "decosim/errors.hpp"
#include "decosim/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitFunctional = 3;

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

std::vector<std::string> split_values(const std::string& value) {
    std::vector<std::string> out;
    std::istringstream stream(value);
    std::string item;
    while (std::getline(stream, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double to_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw decosim::ConfigError("config file: bad numeric value for '" + key + "': " + value);
    }
}

/// Flat key-value config file, keys matching the flag names. Values from
/// the command line win over the file. Repeatable keys (gate, netlist,
/// gamma, lambda) may be listed several times or comma-separated.
void apply_config_file(const std::string& path, const CLI::App* cmd,
                       decosim::ExperimentConfig& config) {
    std::ifstream file(path);
    if (!file) {
        throw decosim::ConfigError("cannot open config file: " + path);
    }
    std::map<std::string, std::vector<std::string>> keys;
    std::string raw;
    int line_no = 0;
    while (std::getline(file, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw decosim::ConfigError("config file " + path + ":" + std::to_string(line_no) +
                                       ": expected key=value");
        }
        std::string key = trim(line.substr(0, eq));
        // the dotted spellings are accepted as aliases of the flag names
        if (key == "noise.kind") key = "noise";
        else if (key == "noise.gamma") key = "gamma";
        else if (key == "noise.lambda") key = "lambda";
        for (const std::string& value : split_values(line.substr(eq + 1))) {
            keys[key].push_back(value);
        }
    }

    const auto given = [&](const char* flag) { return cmd->count(flag) > 0; };
    for (const auto& [key, values] : keys) {
        if (key == "gate" && cmd->get_option_no_throw("--gate") != nullptr) {
            if (!given("--gate")) config.gates = values;
        } else if (key == "netlist" && cmd->get_option_no_throw("--netlist") != nullptr) {
            if (!given("--netlist")) config.netlists = values;
        } else if (key == "input") {
            if (!given("--input")) config.input = values.back();
        } else if (key == "noise") {
            if (!given("--noise")) config.noise = values.back();
        } else if (key == "mode") {
            if (!given("--mode")) config.mode = values.back();
        } else if (key == "out") {
            if (!given("--out")) config.out = values.back();
        } else if (key == "dt") {
            if (!given("--dt")) config.dt = to_double(key, values.back());
        } else if (key == "slots") {
            if (!given("--slots")) config.slots = static_cast<int>(to_double(key, values.back()));
        } else if (key == "gamma") {
            if (!given("--gamma")) {
                config.gammas.clear();
                for (const auto& v : values) config.gammas.push_back(to_double(key, v));
                config.gamma_set = true;
            }
        } else if (key == "lambda") {
            if (!given("--lambda")) {
                config.lambdas.clear();
                for (const auto& v : values) config.lambdas.push_back(to_double(key, v));
                config.lambda_set = true;
            }
        } else {
            throw decosim::ConfigError("config file: unknown key '" + key + "'");
        }
    }
}

void add_common_options(CLI::App* cmd, decosim::ExperimentConfig& config,
                        std::string& config_path) {
    cmd->add_option("--config", config_path,
                    "flat key-value config file; keys match flag names");
    cmd->add_option("--input", config.input,
                    "input state: bitstring, or amplitude pairs 'a,b[;a,b;...]'");
    cmd->add_option("--noise", config.noise, "noise kind: amp|phase|none")
        ->check(CLI::IsMember({"amp", "phase", "none"}));
    cmd->add_option("--gamma", config.gammas,
                    "amplitude damping strength(s); repeat for a sweep");
    cmd->add_option("--lambda", config.lambdas,
                    "phase damping strength(s); repeat for a sweep");
    cmd->add_option("--dt", config.dt, "integrator step, time units")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--slots", config.slots, "simulated window, gate slots (0 = default)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--mode", config.mode, "drive mode: hermitian|paper-literal")
        ->check(CLI::IsMember({"hermitian", "paper-literal"}));
    cmd->add_option("--out", config.out, "output directory for CSV files");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"decosim: density-matrix simulation of noisy quantum gates and circuits"};
    app.require_subcommand(1);

    decosim::ExperimentConfig config;
    std::string config_path;

    CLI::App* single = app.add_subcommand(
        "single-gate", "fidelity vs time for gates on a 3-qubit register");
    single->add_option("--gate", config.gates, "gate(s) to run; default: the six standard gates");
    add_common_options(single, config, config_path);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "one gate and input across several noise strengths");
    sweep->add_option("--gate", config.gates, "gate to sweep");
    add_common_options(sweep, config, config_path);

    CLI::App* circuit = app.add_subcommand("circuit", "full noisy run of one netlist");
    circuit->add_option("--netlist", config.netlists, "netlist file");
    add_common_options(circuit, config, config_path);

    CLI::App* adders = app.add_subcommand(
        "adder-compare", "compare two full-adder netlists over all 8 classical inputs");
    adders->add_option("--netlist", config.netlists,
                       "the two netlist files; default: bundled adders/qckt*.net");
    add_common_options(adders, config, config_path);

    if (argc <= 1) {
        std::cerr << app.help();
        return kExitConfig;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        CLI::App* cmd = app.get_subcommands().front();
        config.experiment = cmd->get_name();
        if (!config_path.empty()) {
            apply_config_file(config_path, cmd, config);
        }
        config.gamma_set = config.gamma_set || cmd->count("--gamma") > 0;
        config.lambda_set = config.lambda_set || cmd->count("--lambda") > 0;

        if (cmd == single) {
            decosim::run_single_gate(config, std::cout);
        } else if (cmd == sweep) {
            decosim::run_sweep(config, std::cout);
        } else if (cmd == circuit) {
            decosim::run_circuit(config, std::cout);
        } else {
            decosim::run_adder_compare(config, std::cout);
        }
        return kExitOk;
    } catch (const decosim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const decosim::NumericalError& e) {
        std::cerr << "numerical-quality error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const decosim::FunctionalError& e) {
        std::cerr << "functional-oracle error: " << e.what() << "\n";
        return kExitFunctional;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}

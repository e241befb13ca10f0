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

#include <stdexcept>

namespace decosim {

/// Invalid user input or arguments: CLI flags, config files, netlist syntax,
/// out-of-range wires or register sizes. CLI exit code 1.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numerical-quality failure: integrator drift beyond tolerance, broken
/// Hermiticity or positivity, non-finite values. CLI exit code 2.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A circuit failed its functional (truth-table) oracle. CLI exit code 3.
class FunctionalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace decosim

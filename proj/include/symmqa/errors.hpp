// Copyright 2026 The symmqa authors
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

#include <cstdio>
#include <stdexcept>
#include <string>

namespace symmqa {

/// Short scientific formatting for error messages.
inline std::string format_sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

/// Bad call arguments (out-of-range site index, mismatched dimensions, ...).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A precondition stated by a module contract was violated by otherwise
/// well-formed inputs (non-Hermitian observable, symmetry leakage, ...).
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Numerical quality gate failed (imaginary residue, tolerance blow-up).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Integration aborted; `time` is the simulation time of the failure.
struct IntegrationError : NumericalError {
    double time;
    IntegrationError(const std::string& msg, double t)
        : NumericalError(msg + " (at t = " + std::to_string(t) + " ns)"), time(t) {}
};

/// The requested operation needs an explicit choice the inputs cannot
/// resolve (e.g. a ground state degenerate across magnetization sectors).
struct AmbiguityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace symmqa

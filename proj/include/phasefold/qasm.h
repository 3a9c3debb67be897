// Copyright 2026 The phasefold Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PHASEFOLD_QASM_H
#define PHASEFOLD_QASM_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phasefold/circuit.h"

namespace phasefold {

enum class DiagnosticKind { UnsupportedGate, SyntaxError, UndeclaredQubit, BadAngle };

struct ParseDiagnostic {
    int line = 0;
    int column = 0;
    std::string message;
    DiagnosticKind kind = DiagnosticKind::SyntaxError;

    /// "line:column: kind: message"
    std::string str() const;
};

struct ParseOptions {
    /// Lower `ccx` to Clifford+T (2 H, 6 CX, 7 T/Tdg). Off by default.
    bool decompose_ccx = false;
};

struct ParseResult {
    std::optional<Circuit> circuit;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return circuit.has_value(); }
};

/// Reads the OpenQASM 2.0 subset {h, x, cx, t, tdg, s, sdg, z, rz(expr)} (and
/// ccx when enabled). Every qreg is flattened into one register in
/// declaration order. Any diagnostic means no circuit is returned.
ParseResult parse_qasm(std::string_view source, const ParseOptions &options = {});

/// Writes the live gates as OpenQASM 2.0 over a single register `q`.
std::string emit_qasm(const Circuit &c);

const char *diagnostic_kind_name(DiagnosticKind kind);

}  // namespace phasefold

#endif

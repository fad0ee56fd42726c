// Copyright 2026 The cczsim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "ccz/protocol.hpp"
#include "ccz/types.hpp"

namespace ccz {

enum class OutputFormat { Json, Csv };

/// Structured-config violation; what() leads with the dotted key,
/// e.g. "couplings.g2: missing required key".
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& key, const std::string& message);

    const std::string& key() const { return key_; }

private:
    std::string key_;
};

/// Parsed run configuration. The raw fields mirror the file exactly
/// (frequencies in Hz); `protocol` holds the derived angular rates. The
/// multiplication by 2 pi happens only here, nowhere else in the library.
struct RunConfig {
    Real g1_hz = 0.0;
    Real g2_hz = 0.0;
    Real g3_hz = 0.0;
    std::optional<Real> rabi_over_g;  // exactly one of these two is engaged
    std::optional<Real> rabi_hz;
    EvolutionMode mode = EvolutionMode::Idealized;
    int n_max = 3;

    bool has_decoherence = false;
    Real gamma3r_inv_s = 0.0;  // meaningful when has_decoherence
    Real gamma3p_inv_s = 0.0;
    std::optional<Real> kappa_inv_s;  // exclusive with (q_factor, nu_c_hz)
    std::optional<Real> q_factor;
    std::optional<Real> nu_c_hz;

    OutputFormat format = OutputFormat::Json;
    bool format_explicit = false;  // provenance only; not part of equality

    ProtocolConfig protocol;  // derived: rad/s rates, collapses when enabled

    /// kappa_inv_s when given directly, else Q / (2 pi nu_c).
    Real resolved_kappa_inv_s() const;

    bool operator==(const RunConfig& other) const;
};

/// Parses and validates a JSON run configuration. Malformed JSON raises the
/// underlying parse error (with line/column); schema and value violations
/// raise ConfigError naming the dotted key. Unknown keys are rejected.
RunConfig parse_run_config(const std::string& json_text);

/// Reads the file and parses it; unreadable path raises ConfigError("path").
RunConfig load_run_config(const std::string& path);

/// Canonical JSON emission: fixed key order, 17 significant digits, raw
/// Hz-domain values, trailing newline. Re-parsing yields an equal RunConfig.
std::string emit_run_config(const RunConfig& cfg);

}  // namespace ccz

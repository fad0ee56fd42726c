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

#include "ccz/report.hpp"

#include <cmath>
#include <cstdio>

namespace ccz {

namespace {

const char* bool_word(bool b) { return b ? "true" : "false"; }

std::string bits_label(int k) {
    return {char('0' + ((k >> 2) & 1)), char('0' + ((k >> 1) & 1)),
            char('0' + (k & 1))};
}

/// "inf" sentinel for the Idealized sweep row; plain number otherwise.
std::string ratio_text(Real ratio) {
    return std::isinf(ratio) ? "inf" : format_real17(ratio);
}

}  // namespace

std::string format_real17(Real x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string emit_run_report(const RunReport& rep, OutputFormat format) {
    std::string out;
    const FidelityReport& f = rep.fidelity;
    if (format == OutputFormat::Json) {
        out += "{\n";
        out += "  \"mode\": \"" + rep.mode_name + "\",\n";
        out += "  \"tau_s\": " + format_real17(rep.tau_s) + ",\n";
        out += "  \"fidelity\": {\n";
        out += "    \"process_fidelity\": " + format_real17(f.process_fidelity) +
               ",\n";
        out += "    \"avg_gate_fidelity\": " +
               format_real17(f.avg_gate_fidelity) + ",\n";
        out += "    \"leakage\": " + format_real17(f.leakage) + ",\n";
        out += "    \"max_elementwise_error\": " +
               format_real17(f.max_elementwise_error) + "\n";
        out += "  },\n";
        out += "  \"truth_table\": [\n";
        for (int k = 0; k < 8; ++k) {
            out += "    {\"input\": \"" + bits_label(k) + "\", \"pass\": " +
                   bool_word(rep.truth.state_pass[k]) + "}";
            out += k < 7 ? ",\n" : "\n";
        }
        out += "  ],\n";
        out += "  \"truth_table_pass\": ";
        out += bool_word(rep.truth.all_pass);
        out += ",\n";
        out += "  \"truth_table_max_deviation\": " +
               format_real17(rep.truth.max_deviation) + ",\n";
        out += "  \"gate\": [\n";
        for (int r = 0; r < 8; ++r) {
            out += "    [";
            for (int c = 0; c < 8; ++c) {
                const Complex z = rep.gate(r, c);
                out += "[" + format_real17(z.real()) + ", " +
                       format_real17(z.imag()) + "]";
                if (c < 7) out += ", ";
            }
            out += r < 7 ? "],\n" : "]\n";
        }
        out += "  ]\n";
        out += "}\n";
        return out;
    }
    out += "mode," + rep.mode_name + "\n";
    out += "tau_s," + format_real17(rep.tau_s) + "\n";
    out += "process_fidelity," + format_real17(f.process_fidelity) + "\n";
    out += "avg_gate_fidelity," + format_real17(f.avg_gate_fidelity) + "\n";
    out += "leakage," + format_real17(f.leakage) + "\n";
    out += "max_elementwise_error," + format_real17(f.max_elementwise_error) +
           "\n";
    out += "truth_table_pass,";
    out += bool_word(rep.truth.all_pass);
    out += "\n";
    out += "truth_table_max_deviation," +
           format_real17(rep.truth.max_deviation) + "\n";
    for (int k = 0; k < 8; ++k) {
        out += "truth_pass_" + bits_label(k) + ",";
        out += bool_word(rep.truth.state_pass[k]);
        out += "\n";
    }
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
            const Complex z = rep.gate(r, c);
            out += "gate_" + std::to_string(r) + "_" + std::to_string(c) +
                   "," + format_real17(z.real()) + "," +
                   format_real17(z.imag()) + "\n";
        }
    }
    return out;
}

std::string emit_sweep_report(const std::vector<SweepRow>& rows,
                              OutputFormat format) {
    std::string out;
    if (format == OutputFormat::Csv) {
        out += "ratio,infidelity,leakage,tau_s\n";
        for (const SweepRow& row : rows) {
            out += ratio_text(row.ratio) + "," + format_real17(row.infidelity) +
                   "," + format_real17(row.leakage) + "," +
                   format_real17(row.tau_s) + "\n";
        }
        return out;
    }
    out += "{\n  \"rows\": [\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SweepRow& row = rows[i];
        out += "    {\"ratio\": ";
        out += std::isinf(row.ratio) ? "\"inf\"" : format_real17(row.ratio);
        out += ", \"infidelity\": " + format_real17(row.infidelity);
        out += ", \"leakage\": " + format_real17(row.leakage);
        out += ", \"tau_s\": " + format_real17(row.tau_s) + "}";
        out += i + 1 < rows.size() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

std::string emit_feasibility_report(const FeasibilityReport& rep,
                                    OutputFormat format) {
    std::string out;
    if (format == OutputFormat::Json) {
        out += "{\n";
        out += "  \"tau_s\": " + format_real17(rep.tau_s) + ",\n";
        out += "  \"kappa_inv_s\": " + format_real17(rep.kappa_inv_s) + ",\n";
        out += "  \"margins\": {\n";
        out += "    \"cavity\": " + format_real17(rep.cavity_margin) + ",\n";
        out += "    \"relaxation\": " + format_real17(rep.relaxation_margin) +
               ",\n";
        out += "    \"dephasing\": " + format_real17(rep.dephasing_margin) +
               "\n";
        out += "  },\n";
        out += "  \"margin_pass\": {\n";
        out += std::string("    \"cavity\": ") + bool_word(rep.cavity_pass) +
               ",\n";
        out += std::string("    \"relaxation\": ") +
               bool_word(rep.relaxation_pass) + ",\n";
        out += std::string("    \"dephasing\": ") +
               bool_word(rep.dephasing_pass) + "\n";
        out += "  },\n";
        out += std::string("  \"pass\": ") + bool_word(rep.pass) + "\n";
        out += "}\n";
        return out;
    }
    out += "tau_s," + format_real17(rep.tau_s) + "\n";
    out += "kappa_inv_s," + format_real17(rep.kappa_inv_s) + "\n";
    out += "cavity_margin," + format_real17(rep.cavity_margin) + "\n";
    out += "relaxation_margin," + format_real17(rep.relaxation_margin) + "\n";
    out += "dephasing_margin," + format_real17(rep.dephasing_margin) + "\n";
    out += std::string("cavity_pass,") + bool_word(rep.cavity_pass) + "\n";
    out += std::string("relaxation_pass,") + bool_word(rep.relaxation_pass) +
           "\n";
    out += std::string("dephasing_pass,") + bool_word(rep.dephasing_pass) +
           "\n";
    out += std::string("pass,") + bool_word(rep.pass) + "\n";
    return out;
}

std::string emit_decomposition_report(const GateCircuit& circuit,
                                      bool equivalent) {
    std::string out;
    for (const GateElement& el : circuit.elements) {
        out += describe(el) + "\n";
    }
    const GateCounts counts = count_gates(circuit);
    out += "CZ=" + std::to_string(counts.cz) + " H=" +
           std::to_string(counts.hadamard) + " T-type=" +
           std::to_string(counts.t_type) + "\n";
    out += std::string("equivalent to CCZ up to global phase: ") +
           (equivalent ? "yes" : "no") + "\n";
    return out;
}

}  // namespace ccz

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

#include <CLI11.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "ccz/analysis.hpp"
#include "ccz/circuit.hpp"
#include "ccz/config.hpp"
#include "ccz/protocol.hpp"
#include "ccz/report.hpp"
#include "ccz/schedule_io.hpp"

namespace {

using namespace ccz;

/// Exit codes: 0 success/pass, 1 parse or validation error, 2 truth-table
/// fail (run), 3 feasibility fail.
constexpr int EXIT_OK = 0;
constexpr int EXIT_INVALID = 1;
constexpr int EXIT_TRUTH_FAIL = 2;
constexpr int EXIT_MARGIN_FAIL = 3;

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return EXIT_OK;
    }
    std::ofstream file(out_path);
    if (!file) {
        std::cerr << "cannot write " << out_path << "\n";
        return EXIT_INVALID;
    }
    file << text;
    return EXIT_OK;
}

OutputFormat resolve_format(const RunConfig& cfg, const std::string& flag,
                            OutputFormat command_default) {
    if (flag == "json") return OutputFormat::Json;
    if (flag == "csv") return OutputFormat::Csv;
    return cfg.format_explicit ? cfg.format : command_default;
}

std::vector<Real> parse_ratio_list(const std::string& text) {
    std::vector<Real> ratios;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string token = comma == std::string::npos
                                ? text.substr(pos)
                                : text.substr(pos, comma - pos);
        const auto first = token.find_first_not_of(" \t");
        const auto last = token.find_last_not_of(" \t");
        token = first == std::string::npos
                    ? std::string()
                    : token.substr(first, last - first + 1);
        if (token.empty()) {
            throw std::invalid_argument("ratios: empty entry in list");
        }
        if (token == "inf") {
            ratios.push_back(std::numeric_limits<Real>::infinity());
        } else {
            char* end = nullptr;
            const Real value = std::strtod(token.c_str(), &end);
            if (end != token.c_str() + token.size()) {
                throw std::invalid_argument("ratios: invalid number \"" +
                                            token + "\"");
            }
            ratios.push_back(value);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return ratios;
}

int cmd_run(const std::string& config_path, const std::string& format_flag,
            const std::string& out_path) {
    const RunConfig cfg = load_run_config(config_path);
    if (const auto warning = rabi_ratio_warning(cfg.protocol)) {
        std::cerr << *warning << "\n";
    }
    const GateExtraction extraction = extract_gate(cfg.protocol);
    RunReport rep;
    rep.mode_name =
        cfg.mode == EvolutionMode::Idealized ? "idealized" : "simultaneous";
    rep.tau_s = total_operation_time(cfg.protocol);
    rep.gate = extraction.gate;
    rep.fidelity = gate_fidelities(extraction.gate, ccz_target());
    rep.truth = truth_table_check(extraction.gate);
    const int rc = write_output(
        emit_run_report(rep, resolve_format(cfg, format_flag,
                                            OutputFormat::Json)),
        out_path);
    if (rc != EXIT_OK) return rc;
    return rep.truth.all_pass ? EXIT_OK : EXIT_TRUTH_FAIL;
}

int cmd_sweep(const std::string& config_path, const std::string& ratios_text,
              const std::string& format_flag, const std::string& out_path) {
    const RunConfig cfg = load_run_config(config_path);
    const std::vector<Real> ratios = parse_ratio_list(ratios_text);
    const std::vector<SweepRow> sorted =
        error_scaling_sweep(cfg.protocol, ratios);

    // The sweep sorts by ratio; the report keeps the caller's order.
    std::vector<SweepRow> rows;
    rows.reserve(ratios.size());
    for (const Real ratio : ratios) {
        const auto it = std::find_if(
            sorted.begin(), sorted.end(),
            [ratio](const SweepRow& row) { return row.ratio == ratio; });
        rows.push_back(*it);
    }
    return write_output(
        emit_sweep_report(rows, resolve_format(cfg, format_flag,
                                               OutputFormat::Csv)),
        out_path);
}

int cmd_feasibility(const std::string& config_path,
                    const std::string& format_flag,
                    const std::string& out_path) {
    const RunConfig cfg = load_run_config(config_path);
    if (!cfg.has_decoherence) {
        throw ConfigError("decoherence",
                          "feasibility needs the decoherence section");
    }
    const FeasibilityReport rep = feasibility_check_lifetimes(
        cfg.protocol, cfg.resolved_kappa_inv_s(), cfg.gamma3r_inv_s,
        cfg.gamma3p_inv_s);
    const int rc = write_output(
        emit_feasibility_report(rep, resolve_format(cfg, format_flag,
                                                    OutputFormat::Json)),
        out_path);
    if (rc != EXIT_OK) return rc;
    return rep.pass ? EXIT_OK : EXIT_MARGIN_FAIL;
}

int cmd_decompose(const std::string& out_path) {
    const GateCircuit circuit = build_ccz_decomposition();
    const bool equivalent =
        gate_fidelities(circuit_unitary(circuit), ccz_target())
            .max_elementwise_error < 1e-12;
    return write_output(emit_decomposition_report(circuit, equivalent),
                        out_path);
}

int cmd_schedule(const std::string& schedule_path,
                 const std::string& out_path) {
    std::ifstream in(schedule_path);
    if (!in) {
        std::cerr << "cannot read " << schedule_path << "\n";
        return EXIT_INVALID;
    }
    std::ostringstream text;
    text << in.rdbuf();
    const Schedule sched = parse_schedule(text.str());
    return write_output(emit_schedule(sched), out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Pulse-level simulator of a cavity-mediated three-qubit phase gate"};
    app.require_subcommand(1);

    std::string config_path;
    std::string ratios_text;
    std::string format_flag;
    std::string out_path;

    CLI::App* run =
        app.add_subcommand("run", "Extract the realized gate and score it");
    run->add_option("--config", config_path, "Run configuration (JSON)")
        ->required();
    run->add_option("--format", format_flag, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    run->add_option("--out", out_path, "Write the report here, not stdout");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Gate error versus the drive-to-coupling ratio");
    sweep->add_option("--config", config_path, "Run configuration (JSON)")
        ->required();
    sweep
        ->add_option("--ratios", ratios_text,
                     "Comma list of ratios; \"inf\" marks the ideal limit")
        ->required();
    sweep->add_option("--format", format_flag, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sweep->add_option("--out", out_path, "Write the table here, not stdout");

    CLI::App* feasibility = app.add_subcommand(
        "feasibility", "Schedule duration against decoherence lifetimes");
    feasibility->add_option("--config", config_path, "Run configuration (JSON)")
        ->required();
    feasibility->add_option("--format", format_flag, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    feasibility->add_option("--out", out_path,
                            "Write the report here, not stdout");

    CLI::App* decompose = app.add_subcommand(
        "decompose", "List the 25-gate circuit equivalent and verify it");
    decompose->add_option("--out", out_path,
                          "Write the listing here, not stdout");

    CLI::App* schedule = app.add_subcommand(
        "schedule", "Parse a segment listing and re-emit its normal form");
    schedule->add_option("--config", config_path, "Segment listing (text)")
        ->required();
    schedule->add_option("--out", out_path,
                         "Write the listing here, not stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (run->parsed()) return cmd_run(config_path, format_flag, out_path);
        if (sweep->parsed()) {
            return cmd_sweep(config_path, ratios_text, format_flag, out_path);
        }
        if (feasibility->parsed()) {
            return cmd_feasibility(config_path, format_flag, out_path);
        }
        if (decompose->parsed()) return cmd_decompose(out_path);
        if (schedule->parsed()) return cmd_schedule(config_path, out_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return EXIT_INVALID;
    } catch (const ParseError& e) {
        std::cerr << "schedule error: " << e.what() << "\n";
        return EXIT_INVALID;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return EXIT_INVALID;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_INVALID;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_INVALID;
    }
    return EXIT_INVALID;
}

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

#include "ccz/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numbers>
#include <sstream>

#include "ccz/analysis.hpp"
#include "ccz/report.hpp"

namespace ccz {

namespace {

using nlohmann::json;

/// Section wrapper enforcing the schema: known keys only, typed reads,
/// dotted-key diagnostics.
class Section {
public:
    Section(const json& node, std::string prefix,
            std::initializer_list<const char*> allowed)
        : node_(node), prefix_(std::move(prefix)) {
        if (!node_.is_object()) {
            throw ConfigError(prefix_.empty() ? "<top>" : prefix_,
                              "must be an object");
        }
        for (const auto& item : node_.items()) {
            if (std::find_if(allowed.begin(), allowed.end(),
                             [&](const char* k) { return item.key() == k; }) ==
                allowed.end()) {
                throw ConfigError(dotted(item.key()), "unknown key");
            }
        }
    }

    bool has(const char* key) const { return node_.contains(key); }

    Real number(const char* key) const {
        require(key);
        if (!node_.at(key).is_number()) {
            throw ConfigError(dotted(key), "must be a number");
        }
        return node_.at(key).get<Real>();
    }

    Real positive_number(const char* key) const {
        const Real value = number(key);
        if (!(value > 0.0)) {
            throw ConfigError(dotted(key), "must be positive");
        }
        return value;
    }

    int integer(const char* key) const {
        require(key);
        if (!node_.at(key).is_number_integer()) {
            throw ConfigError(dotted(key), "must be an integer");
        }
        return node_.at(key).get<int>();
    }

    std::string text(const char* key) const {
        require(key);
        if (!node_.at(key).is_string()) {
            throw ConfigError(dotted(key), "must be a string");
        }
        return node_.at(key).get<std::string>();
    }

    const json& raw(const char* key) const { return node_.at(key); }

    std::string dotted(const std::string& key) const {
        return prefix_.empty() ? key : prefix_ + "." + key;
    }

private:
    void require(const char* key) const {
        if (!node_.contains(key)) {
            throw ConfigError(dotted(key), "missing required key");
        }
    }

    const json& node_;
    std::string prefix_;
};

constexpr Real TWO_PI = 2.0 * std::numbers::pi;

}  // namespace

ConfigError::ConfigError(const std::string& key, const std::string& message)
    : std::runtime_error(key + ": " + message), key_(key) {}

Real RunConfig::resolved_kappa_inv_s() const {
    return kappa_inv_s ? *kappa_inv_s : cavity_lifetime(*q_factor, *nu_c_hz);
}

bool RunConfig::operator==(const RunConfig& other) const {
    return g1_hz == other.g1_hz && g2_hz == other.g2_hz &&
           g3_hz == other.g3_hz && rabi_over_g == other.rabi_over_g &&
           rabi_hz == other.rabi_hz && mode == other.mode &&
           n_max == other.n_max && has_decoherence == other.has_decoherence &&
           gamma3r_inv_s == other.gamma3r_inv_s &&
           gamma3p_inv_s == other.gamma3p_inv_s &&
           kappa_inv_s == other.kappa_inv_s && q_factor == other.q_factor &&
           nu_c_hz == other.nu_c_hz && format == other.format;
}

RunConfig parse_run_config(const std::string& json_text) {
    const json doc = json::parse(json_text);
    const Section top(doc, "",
                      {"couplings", "pulse", "mode", "cavity", "decoherence",
                       "output"});
    RunConfig cfg;

    if (!top.has("couplings")) {
        throw ConfigError("couplings", "missing required key");
    }
    const Section couplings(top.raw("couplings"), "couplings",
                            {"g1", "g2", "g3"});
    cfg.g1_hz = couplings.positive_number("g1");
    cfg.g2_hz = couplings.positive_number("g2");
    cfg.g3_hz = couplings.positive_number("g3");

    if (!top.has("pulse")) {
        throw ConfigError("pulse", "missing required key");
    }
    const Section pulse(top.raw("pulse"), "pulse", {"rabi_over_g", "rabi_hz"});
    if (pulse.has("rabi_over_g") == pulse.has("rabi_hz")) {
        throw ConfigError(
            "pulse",
            "exactly one of pulse.rabi_over_g or pulse.rabi_hz is required");
    }
    if (pulse.has("rabi_over_g")) {
        cfg.rabi_over_g = pulse.positive_number("rabi_over_g");
    } else {
        cfg.rabi_hz = pulse.positive_number("rabi_hz");
    }

    if (top.has("mode")) {
        if (!top.raw("mode").is_string()) {
            throw ConfigError("mode", "must be a string");
        }
        const std::string name = top.raw("mode").get<std::string>();
        if (name == "idealized") {
            cfg.mode = EvolutionMode::Idealized;
        } else if (name == "simultaneous") {
            cfg.mode = EvolutionMode::Simultaneous;
        } else {
            throw ConfigError("mode",
                              "must be \"idealized\" or \"simultaneous\"");
        }
    }

    if (top.has("cavity")) {
        const Section cavity(top.raw("cavity"), "cavity", {"n_max"});
        cfg.n_max = cavity.integer("n_max");
        if (cfg.n_max < 2) {
            throw ConfigError("cavity.n_max", "must be at least 2");
        }
    }

    if (top.has("decoherence")) {
        cfg.has_decoherence = true;
        const Section deco(top.raw("decoherence"), "decoherence",
                           {"gamma3r_inv_s", "gamma3p_inv_s", "kappa_inv_s",
                            "Q", "nu_c_hz"});
        cfg.gamma3r_inv_s = deco.positive_number("gamma3r_inv_s");
        cfg.gamma3p_inv_s = deco.positive_number("gamma3p_inv_s");
        const bool direct = deco.has("kappa_inv_s");
        const bool via_q = deco.has("Q") || deco.has("nu_c_hz");
        if (direct && via_q) {
            throw ConfigError("decoherence",
                              "decoherence.kappa_inv_s and decoherence.Q/"
                              "nu_c_hz are mutually exclusive");
        }
        if (!direct && !via_q) {
            throw ConfigError("decoherence",
                              "one of decoherence.kappa_inv_s or "
                              "decoherence.Q with decoherence.nu_c_hz is "
                              "required");
        }
        if (direct) {
            cfg.kappa_inv_s = deco.positive_number("kappa_inv_s");
        } else {
            cfg.q_factor = deco.positive_number("Q");
            cfg.nu_c_hz = deco.positive_number("nu_c_hz");
        }
    }

    if (top.has("output")) {
        const Section output(top.raw("output"), "output", {"format"});
        if (output.has("format")) {
            const std::string name = output.text("format");
            cfg.format_explicit = true;
            if (name == "json") {
                cfg.format = OutputFormat::Json;
            } else if (name == "csv") {
                cfg.format = OutputFormat::Csv;
            } else {
                throw ConfigError("output.format",
                                  "must be \"json\" or \"csv\"");
            }
        }
    }

    // The only Hz -> rad/s boundary in the library.
    cfg.protocol.g1 = TWO_PI * cfg.g1_hz;
    cfg.protocol.g2 = TWO_PI * cfg.g2_hz;
    cfg.protocol.g3 = TWO_PI * cfg.g3_hz;
    cfg.protocol.omega =
        cfg.rabi_hz ? TWO_PI * *cfg.rabi_hz
                    : *cfg.rabi_over_g * std::max({cfg.protocol.g1,
                                                   cfg.protocol.g2,
                                                   cfg.protocol.g3});
    cfg.protocol.mode = cfg.mode;
    cfg.protocol.n_max = cfg.n_max;
    if (cfg.has_decoherence) {
        cfg.protocol.collapses = standard_collapse_set(
            cfg.gamma3r_inv_s, cfg.gamma3p_inv_s, cfg.resolved_kappa_inv_s());
    }
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("path", "cannot read config file " + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_run_config(text.str());
}

std::string emit_run_config(const RunConfig& cfg) {
    std::string out;
    out += "{\n";
    out += "  \"couplings\": {\"g1\": " + format_real17(cfg.g1_hz) +
           ", \"g2\": " + format_real17(cfg.g2_hz) +
           ", \"g3\": " + format_real17(cfg.g3_hz) + "},\n";
    out += "  \"pulse\": ";
    out += cfg.rabi_over_g
               ? "{\"rabi_over_g\": " + format_real17(*cfg.rabi_over_g) + "}"
               : "{\"rabi_hz\": " + format_real17(*cfg.rabi_hz) + "}";
    out += ",\n";
    out += std::string("  \"mode\": \"") +
           (cfg.mode == EvolutionMode::Idealized ? "idealized"
                                                 : "simultaneous") +
           "\",\n";
    out += "  \"cavity\": {\"n_max\": " + std::to_string(cfg.n_max) + "},\n";
    if (cfg.has_decoherence) {
        out += "  \"decoherence\": {\"gamma3r_inv_s\": " +
               format_real17(cfg.gamma3r_inv_s) +
               ", \"gamma3p_inv_s\": " + format_real17(cfg.gamma3p_inv_s);
        if (cfg.kappa_inv_s) {
            out += ", \"kappa_inv_s\": " + format_real17(*cfg.kappa_inv_s);
        } else {
            out += ", \"Q\": " + format_real17(*cfg.q_factor) +
                   ", \"nu_c_hz\": " + format_real17(*cfg.nu_c_hz);
        }
        out += "},\n";
    }
    out += std::string("  \"output\": {\"format\": \"") +
           (cfg.format == OutputFormat::Json ? "json" : "csv") + "\"}\n";
    out += "}\n";
    return out;
}

}  // namespace ccz

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

#include "ccz/schedule_io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <vector>

namespace ccz {

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[pos]))) {
            ++pos;
            continue;
        }
        if (line[pos] == '#') break;
        std::size_t end = pos;
        while (end < line.size() &&
               !std::isspace(static_cast<unsigned char>(line[end])) &&
               line[end] != '#') {
            ++end;
        }
        tokens.push_back({line.substr(pos, end - pos), static_cast<int>(pos) + 1});
        pos = end;
    }
    return tokens;
}

/// key=value fields of one segment line, with duplicate and shape checks.
class FieldSet {
public:
    FieldSet(const std::vector<Token>& tokens, int line) : line_(line) {
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            const Token& tok = tokens[i];
            const std::size_t eq = tok.text.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 >= tok.text.size()) {
                throw ParseError("expected key=value, got '" + tok.text + "'",
                                 line_, tok.column);
            }
            const std::string key = tok.text.substr(0, eq);
            if (fields_.count(key)) {
                throw ParseError("duplicate field '" + key + "'", line_, tok.column);
            }
            fields_[key] = {tok.text.substr(eq + 1),
                            tok.column + static_cast<int>(eq) + 1};
        }
    }

    Real number(const std::string& key) {
        const Token tok = take(key);
        const char* begin = tok.text.c_str();
        char* end = nullptr;
        const Real value = std::strtod(begin, &end);
        if (end == begin || *end != '\0') {
            throw ParseError("field '" + key + "' is not a number: '" + tok.text +
                                 "'",
                             line_, tok.column);
        }
        return value;
    }

    int integer(const std::string& key) {
        const Token tok = take(key);
        const char* begin = tok.text.c_str();
        char* end = nullptr;
        const long value = std::strtol(begin, &end, 10);
        if (end == begin || *end != '\0') {
            throw ParseError("field '" + key + "' is not an integer: '" +
                                 tok.text + "'",
                             line_, tok.column);
        }
        return static_cast<int>(value);
    }

    void finish() const {
        if (!fields_.empty()) {
            const auto& [key, tok] = *fields_.begin();
            throw ParseError("unexpected field '" + key + "'", line_, tok.column);
        }
    }

private:
    Token take(const std::string& key) {
        const auto it = fields_.find(key);
        if (it == fields_.end()) {
            throw ParseError("missing field '" + key + "'", line_, 1);
        }
        Token tok = it->second;
        fields_.erase(it);
        return tok;
    }

    int line_;
    std::map<std::string, Token> fields_;
};

std::string format_real(Real value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Schedule parse_schedule(const std::string& text) {
    Schedule sched;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const std::vector<Token> tokens = tokenize(line);
        if (tokens.empty()) continue;
        const Token& head = tokens[0];

        Segment seg;
        if (head.text == "pulse") {
            FieldSet fields(tokens, line_no);
            seg.kind = Segment::Kind::Pulse;
            seg.pulse.qudit = fields.integer("q");
            seg.pulse.transition.lower = fields.integer("lo");
            seg.pulse.transition.upper = fields.integer("hi");
            seg.pulse.phase = fields.number("phase");
            seg.pulse.rabi = fields.number("rabi");
            seg.pulse.duration = fields.number("t");
            seg.duration = seg.pulse.duration;
            fields.finish();
            if (seg.pulse.qudit < 1 || seg.pulse.qudit > NUM_QUDITS) {
                throw ParseError("qudit id must be 1, 2 or 3", line_no, head.column);
            }
            const auto& tr = seg.pulse.transition;
            if (tr.lower < 0 || tr.lower >= QUDIT_DIM || tr.upper < 0 ||
                tr.upper >= QUDIT_DIM || tr.lower == tr.upper) {
                throw ParseError("transition levels must be distinct and in 0..3",
                                 line_no, head.column);
            }
            if (!(seg.pulse.rabi > 0.0)) {
                throw ParseError("rabi must be positive", line_no, head.column);
            }
            if (seg.pulse.duration < 0.0) {
                throw ParseError("duration must be nonnegative", line_no,
                                 head.column);
            }
        } else if (head.text == "wait") {
            FieldSet fields(tokens, line_no);
            seg.kind = Segment::Kind::Wait;
            seg.duration = fields.number("t");
            fields.finish();
            if (seg.duration < 0.0) {
                throw ParseError("duration must be nonnegative", line_no,
                                 head.column);
            }
        } else {
            throw ParseError("expected 'pulse' or 'wait', got '" + head.text + "'",
                             line_no, head.column);
        }
        sched.total_duration += seg.duration;
        sched.segments.push_back(seg);
    }
    return sched;
}

std::string emit_schedule(const Schedule& sched) {
    std::string out;
    for (const Segment& seg : sched.segments) {
        if (seg.kind == Segment::Kind::Pulse) {
            out += "pulse q=" + std::to_string(seg.pulse.qudit) +
                   " lo=" + std::to_string(seg.pulse.transition.lower) +
                   " hi=" + std::to_string(seg.pulse.transition.upper) +
                   " phase=" + format_real(seg.pulse.phase) +
                   " rabi=" + format_real(seg.pulse.rabi) +
                   " t=" + format_real(seg.pulse.duration) + "\n";
        } else {
            out += "wait t=" + format_real(seg.duration) + "\n";
        }
    }
    return out;
}

}  // namespace ccz

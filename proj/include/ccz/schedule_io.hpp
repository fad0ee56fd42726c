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

#include <stdexcept>
#include <string>

#include "ccz/protocol.hpp"

namespace ccz {

/// Schedule text violation with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Parses the line-oriented segment format:
///   pulse q=<1|2|3> lo=<level> hi=<level> phase=<rad> rabi=<rad/s> t=<s>
///   wait t=<s>
/// `#` starts a comment; blank lines are ignored; numbers accept scientific
/// notation. Parsed segments carry no step annotations.
Schedule parse_schedule(const std::string& text);

/// One line per segment, numbers with 17 significant digits so that
/// parse(emit(s)) reproduces every value bit-exactly and emit is a fixed
/// point from then on.
std::string emit_schedule(const Schedule& sched);

}  // namespace ccz

// Copyright 2026 The cssqec Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cssqec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Parsed command line. Fields a command does not use keep their defaults.
struct RunConfig {
    std::string command;
    std::uint64_t seed = 0;
    /// Built-in code name or descriptor path.
    std::string code = "steane";
    std::string out;
    std::string log;

    double p = 0.0;
    std::uint64_t trials = 1000;
    unsigned n = 0;
    unsigned k = 0;
    unsigned d = 0;
    unsigned s = 1;
    double step = 0.001;
    /// Number of seeded random logical inputs added to the axis states.
    unsigned inputs = 20;
    std::string mode = "coherent";

    std::string error;
    unsigned logical = 0;
    std::string basis = "c";
};

/// Parses `argv` into a config. Returns the exit code to use when parsing
/// ended the run (help, bad flags), or -1 when `config` is ready.
int parse_args(int argc, const char* const* argv, RunConfig& config, std::ostream& out, std::ostream& err);

/// Executes one command, writing the summary line to `out` and diagnostics
/// to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cssqec::cli

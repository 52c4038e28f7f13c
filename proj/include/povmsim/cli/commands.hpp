// Copyright 2026 The povmsim Authors
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

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "povmsim/cli/job_spec.hpp"

namespace povmsim::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_invalid = 1,  // mathematically invalid input or result
    exit_parse = 2,    // malformed JSON, schema violation, bad flags
    exit_io = 3,
};

/// Entry point behind the `povmsim` binary; args[0] is the program name.
/// Subcommands: validate, simulate, export-qasm, histogram.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

nlohmann::json validation_report(const JobSpec &spec);

/// RFC 4180 CSV (CRLF line ends) with header outcome,label,analytic,sampled,mitigated.
std::string histogram_csv(const nlohmann::json &result);

/// gnuplot script drawing the CSV as a clustered histogram.
std::string gnuplot_script(const std::string &csv_path, const std::string &title);

}  // namespace povmsim::cli

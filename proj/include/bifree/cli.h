// Copyright 2026 The bifree Authors
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

#ifndef BIFREE_CLI_H
#define BIFREE_CLI_H

#include <cstdint>
#include <iosfwd>
#include <string>

namespace bifree {

enum class OutputFormat { json, csv };
enum class NumericMode { rational, float_point };

/// Size bounds checked before any enumeration starts. BIFREE_MAX_SIZE, when set
/// to a positive integer, replaces every bound.
struct CliCaps {
    int max_partition_n = 12;
    int max_cumulant_order = 10;
    int max_meander_size = 6;
    int max_clt_m = 8;
    int max_limit_order = 12;
    int max_matrix_n = 256;

    static CliCaps from_environment();
};

struct CliConfig {
    std::string subcommand;
    OutputFormat output = OutputFormat::json;
    NumericMode numeric = NumericMode::rational;
    std::uint64_t seed = 0;
    CliCaps caps;
};

/// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

/// Parses argv, runs one subcommand, writes results to `out` and diagnostics to `err`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace bifree

#endif

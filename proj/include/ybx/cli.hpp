// Copyright 2026 The ybxsim Authors
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

#ifndef YBX_CLI_HPP
#define YBX_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ybx {

/// Command-line front end. Subcommands: verify, sweep, simulate, grape, pps.
/// Exit codes: 0 success, 1 validation or relation failure, 2 optimizer
/// non-convergence.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

/// Fixed 9-decimal CSV cell formatting shared with the tests (negative zero
/// normalized away).
std::string format_fixed9(double v);

}  // namespace ybx

#endif  // YBX_CLI_HPP

// Copyright 2026 The causal-switch Authors
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

#include <iosfwd>
#include <string>
#include <vector>

namespace causal_switch::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalidInput = 1,
    kUnitaryFound = 2,
    kHypothesesNotMet = 3,
    kInconclusive = 4,
};

/// Runs one command line (without the program name). CSV goes to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 12 significant digits, shortest form, '.' separator.
std::string format_number(double v);

}  // namespace causal_switch::cli

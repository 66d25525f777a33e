// Copyright 2026 The Walshpulse Authors
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

#ifndef WALSHC_CLI_H
#define WALSHC_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace walshc {

enum ExitCode { kOk = 0, kUsage = 1, kInputError = 2, kNumericalFailure = 3 };

/// Entry point of the walshc tool. args[0] is the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace walshc

#endif

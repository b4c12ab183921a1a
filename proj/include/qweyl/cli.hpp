// Copyright 2026 The qweyl authors
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

#ifndef QWEYL_CLI_HPP
#define QWEYL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qweyl {

/// Runs the command line given the arguments after the program name.
/// Exit codes: 0 success, 1 usage or I/O error, 2 numerical or
/// verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qweyl

#endif  // QWEYL_CLI_HPP

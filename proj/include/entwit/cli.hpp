// Copyright 2026 The entwit authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTWIT_CLI_HPP
#define ENTWIT_CLI_HPP

#include <string>
#include <vector>

namespace entwit::cli {

// Exit codes: 0 success, 2 invalid input, 3 capacity exceeded,
// 4 numerical failure (bisection bracket).
int run(int argc, const char* const* argv);

// Same, for in-process driving; args excludes the program name.
int run(const std::vector<std::string>& args);

}  // namespace entwit::cli

#endif

// Copyright 2026 the sdh authors
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

#ifndef SDH_COMMAND_HPP_
#define SDH_COMMAND_HPP_

#include <map>
#include <string>
#include <vector>

namespace sdh {

// Outcome of one workbench command.  text and json render the same report;
// fields holds the scalar report values as canonical strings (numbers and
// booleans in their JSON spelling) for expectation matching.
//
// Exit codes: 0 success, 2 a verification check failed, 3 usage or runtime
// error.  Commands that merely report a computed answer (searches,
// equivalence queries) exit 0 for every answer.
struct CommandResult {
  int exit_code = 0;
  std::string text;
  std::string json;
  std::map<std::string, std::string> fields;
};

// Executes one command line (verb first, program name excluded).  Errors
// are reported through exit code 3 and an "error" field, never thrown.
//
// Object specs:
//   codes     nv:P:A | qr:P | pless:Q | neg4:I | code:PATH
//   matrices  hnv:P:A | hsds:P:S (S in 0..3, eq+1, eq-1) | paley1:Q |
//             paley2:Q | oct:PATH:N | sign:PATH
//
// Verbs: construct, verify, describe, hadamard (encode|decode),
// search (fullweight|minweight|clique|p36-classes),
// equiv (check|canon|autorder|code).
CommandResult run_command(const std::vector<std::string>& args);

// Parameters and verification checklist of an object spec, as plain text.
std::string describe(const std::string& spec);

}  // namespace sdh

#endif  // SDH_COMMAND_HPP_

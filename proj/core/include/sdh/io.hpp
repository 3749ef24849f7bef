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

#ifndef SDH_IO_HPP_
#define SDH_IO_HPP_

#include <string>

#include "sdh/gf3.hpp"
#include "sdh/sign_matrix.hpp"

namespace sdh {

// Text matrix format: one row per line.  Two alphabets are accepted and
// may not be mixed within a file: {0,1,2} for GF(3) entries and {+,-,0}
// for sign/integer entries (+ maps to 1, - maps to 2 over GF(3)).
Gf3Matrix parse_trit_matrix(const std::string& text);
std::string format_trit_matrix(const Gf3Matrix& m);

// Strict +- parser for sign matrices (zeros rejected).
SignMatrix parse_sign_matrix(const std::string& text);
std::string format_sign_matrix(const SignMatrix& m);

// Code serialization: a small header (name, n, k) followed by the
// generator rows in the trit alphabet.
std::string format_code(const TernaryCode& c, const std::string& name);
struct NamedCode {
  std::string name;
  TernaryCode code;
};
NamedCode parse_code(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace sdh

#endif  // SDH_IO_HPP_

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

#include "sdh/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sdh {

namespace {

std::vector<std::string> nonempty_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

int trit_of_char(char ch) {
  switch (ch) {
    case '0':
      return 0;
    case '1':
    case '+':
      return 1;
    case '2':
    case '-':
      return 2;
    default:
      throw std::invalid_argument(std::string("matrix parser: bad character '") +
                                  ch + "'");
  }
}

}  // namespace

Gf3Matrix parse_trit_matrix(const std::string& text) {
  std::vector<std::vector<int>> rows;
  for (const std::string& line : nonempty_lines(text)) {
    std::vector<int> row;
    row.reserve(line.size());
    for (char ch : line) row.push_back(trit_of_char(ch));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("matrix parser: empty input");
  return Gf3Matrix::from_trits(rows);
}

std::string format_trit_matrix(const Gf3Matrix& m) {
  std::string out;
  for (int i = 0; i < m.nrows(); ++i) {
    for (int j = 0; j < m.ncols(); ++j)
      out.push_back(static_cast<char>('0' + m.row(i).get(j)));
    out.push_back('\n');
  }
  return out;
}

SignMatrix parse_sign_matrix(const std::string& text) {
  const auto lines = nonempty_lines(text);
  const int n = static_cast<int>(lines.size());
  SignMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(lines[i].size()) != n)
      throw std::invalid_argument("sign matrix parser: not square");
    for (int j = 0; j < n; ++j) {
      const char ch = lines[i][j];
      if (ch == '+')
        m.set(i, j, 1);
      else if (ch == '-')
        m.set(i, j, -1);
      else
        throw std::invalid_argument(
            std::string("sign matrix parser: bad character '") + ch + "'");
    }
  }
  return m;
}

std::string format_sign_matrix(const SignMatrix& m) {
  std::string out;
  for (int i = 0; i < m.order(); ++i) {
    for (int j = 0; j < m.order(); ++j)
      out.push_back(m.get(i, j) == 1 ? '+' : '-');
    out.push_back('\n');
  }
  return out;
}

std::string format_code(const TernaryCode& c, const std::string& name) {
  std::ostringstream out;
  out << "name " << name << "\n";
  out << "n " << c.length() << "\n";
  out << "k " << c.dimension() << "\n";
  out << format_trit_matrix(c.generator());
  return out.str();
}

NamedCode parse_code(const std::string& text) {
  std::string name = "unnamed";
  int n = -1;
  int k = -1;
  std::string matrix_text;
  for (const std::string& line : nonempty_lines(text)) {
    if (line.rfind("name ", 0) == 0) {
      name = line.substr(5);
    } else if (line.rfind("n ", 0) == 0) {
      n = std::stoi(line.substr(2));
    } else if (line.rfind("k ", 0) == 0) {
      k = std::stoi(line.substr(2));
    } else {
      matrix_text += line;
      matrix_text += '\n';
    }
  }
  TernaryCode code = TernaryCode::from_generator(parse_trit_matrix(matrix_text));
  if (n >= 0 && code.length() != n)
    throw std::invalid_argument("code parser: header n does not match rows");
  if (k >= 0 && code.dimension() != k)
    throw std::invalid_argument("code parser: header k does not match rank");
  return NamedCode{name, code};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace sdh

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

#ifndef SDH_SIGN_MATRIX_HPP_
#define SDH_SIGN_MATRIX_HPP_

#include <string>
#include <vector>

#include "sdh/gf3.hpp"
#include "sdh/int_matrix.hpp"

namespace sdh {

// Square matrix with entries in {+1, -1}, one bit per entry (bit set = +1).
class SignMatrix {
 public:
  SignMatrix() : n_(0), wpr_(0) {}
  // All entries start at -1 (cleared bits).
  explicit SignMatrix(int n);
  static SignMatrix from_int(const IntMatrix& m);

  int order() const { return n_; }
  int words_per_row() const { return wpr_; }

  int get(int i, int j) const {
    return (bits_[static_cast<size_t>(i) * wpr_ + (j >> 6)] >> (j & 63)) & 1
               ? 1
               : -1;
  }
  void set(int i, int j, int value);

  const u64* row_bits(int i) const { return &bits_[static_cast<size_t>(i) * wpr_]; }

  // Integer inner product of rows i and j (n minus twice the Hamming
  // distance of the two sign rows).
  int row_dot(int i, int j) const;

  // Row read as a GF(3) vector under the global mapping +1 -> 1, -1 -> 2.
  Gf3Vector row_mod3(int i) const;

  IntMatrix to_int() const;
  SignMatrix transpose() const;
  SignMatrix negated() const;
  bool operator==(const SignMatrix& rhs) const {
    return n_ == rhs.n_ && bits_ == rhs.bits_;
  }
  bool operator!=(const SignMatrix& rhs) const { return !(*this == rhs); }
  bool operator<(const SignMatrix& rhs) const;

 private:
  int n_;
  int wpr_;
  std::vector<u64> bits_;
};

bool is_hadamard(const SignMatrix& m);

// SignMatrix whose Hadamard property has been verified at construction.
class HadamardMatrix {
 public:
  explicit HadamardMatrix(SignMatrix m);
  const SignMatrix& matrix() const { return m_; }
  int order() const { return m_.order(); }

 private:
  SignMatrix m_;
};

// H + H^T = 2I, i.e. H - I is antisymmetric.
bool is_skew(const HadamardMatrix& h);

// 0/1 matrix used by the binary encoding (1 <-> +1, 0 <-> -1).
struct BitMatrix {
  int n = 0;
  int wpr = 0;
  std::vector<u64> bits;

  BitMatrix() = default;
  explicit BitMatrix(int order);
  int get(int i, int j) const {
    return (bits[static_cast<size_t>(i) * wpr + (j >> 6)] >> (j & 63)) & 1;
  }
  void set(int i, int j, int value);
  bool operator==(const BitMatrix& rhs) const {
    return n == rhs.n && bits == rhs.bits;
  }
};

BitMatrix to_binary(const SignMatrix& m);
SignMatrix from_binary(const BitMatrix& b);

// Octal codec for 0/1 matrices whose order is divisible by 3: each digit
// expands to three bits, most significant first; digits fill rows left to
// right, rows top to bottom.  Whitespace in the input is ignored.
BitMatrix octal_decode(const std::string& text, int order);
std::string octal_encode(const BitMatrix& b);

// True iff every row of m, read mod 3, is a codeword of c.
bool rows_in_code(const SignMatrix& m, const TernaryCode& c);

}  // namespace sdh

#endif  // SDH_SIGN_MATRIX_HPP_

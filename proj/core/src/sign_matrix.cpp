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

#include "sdh/sign_matrix.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace sdh {

namespace {

int words_for(int n) { return (n + 63) / 64; }

}  // namespace

SignMatrix::SignMatrix(int n)
    : n_(n), wpr_(words_for(n)), bits_(static_cast<size_t>(n) * words_for(n), 0) {
  if (n < 0) throw std::invalid_argument("SignMatrix: negative order");
}

SignMatrix SignMatrix::from_int(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("SignMatrix: matrix not square");
  SignMatrix out(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const std::int64_t v = m.at(i, j);
      if (v != 1 && v != -1)
        throw std::invalid_argument("SignMatrix: entry not +-1");
      out.set(i, j, static_cast<int>(v));
    }
  return out;
}

void SignMatrix::set(int i, int j, int value) {
  if (value != 1 && value != -1)
    throw std::invalid_argument("SignMatrix: entry not +-1");
  const u64 bit = u64{1} << (j & 63);
  u64& w = bits_[static_cast<size_t>(i) * wpr_ + (j >> 6)];
  if (value == 1)
    w |= bit;
  else
    w &= ~bit;
}

int SignMatrix::row_dot(int i, int j) const {
  const u64* a = row_bits(i);
  const u64* b = row_bits(j);
  int diff = 0;
  for (int w = 0; w < wpr_; ++w) diff += std::popcount(a[w] ^ b[w]);
  // Trailing bits beyond n_ are zero in both rows, so they cancel in the xor.
  return n_ - 2 * diff;
}

Gf3Vector SignMatrix::row_mod3(int i) const {
  Gf3Vector v(n_);
  for (int w = 0; w < wpr_; ++w) {
    const u64 plus = row_bits(i)[w];
    u64 mask = ~u64{0};
    const int rem = n_ - 64 * w;
    if (rem < 64) mask = rem <= 0 ? 0 : ((u64{1} << rem) - 1);
    v.lo()[w] = plus & mask;
    v.hi()[w] = ~plus & mask;
  }
  return v;
}

IntMatrix SignMatrix::to_int() const {
  IntMatrix out(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(i, j) = get(i, j);
  return out;
}

SignMatrix SignMatrix::transpose() const {
  SignMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t.set(j, i, get(i, j));
  return t;
}

SignMatrix SignMatrix::negated() const {
  SignMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.set(i, j, -get(i, j));
  return out;
}

bool SignMatrix::operator<(const SignMatrix& rhs) const {
  if (n_ != rhs.n_) return n_ < rhs.n_;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const int a = get(i, j);
      const int b = rhs.get(i, j);
      // +1 sorts before -1, matching the 0/1 bit order with 1 = +1 flipped;
      // any fixed total order works as long as it is used consistently.
      if (a != b) return a > b;
    }
  return false;
}

bool is_hadamard(const SignMatrix& m) {
  const int n = m.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m.row_dot(i, j) != 0) return false;
  return true;
}

HadamardMatrix::HadamardMatrix(SignMatrix m) : m_(std::move(m)) {
  const int n = m_.order();
  if (!(n == 1 || n == 2 || n % 4 == 0))
    throw std::runtime_error("HadamardMatrix: order must be 1, 2 or 0 mod 4");
  if (!is_hadamard(m_))
    throw std::runtime_error("HadamardMatrix: rows are not pairwise orthogonal");
}

bool is_skew(const HadamardMatrix& h) {
  const SignMatrix& m = h.matrix();
  const int n = m.order();
  for (int i = 0; i < n; ++i) {
    if (m.get(i, i) != 1) return false;
    for (int j = i + 1; j < n; ++j)
      if (m.get(i, j) + m.get(j, i) != 0) return false;
  }
  return true;
}

BitMatrix::BitMatrix(int order)
    : n(order), wpr(words_for(order)),
      bits(static_cast<size_t>(order) * words_for(order), 0) {
  if (order < 0) throw std::invalid_argument("BitMatrix: negative order");
}

void BitMatrix::set(int i, int j, int value) {
  const u64 bit = u64{1} << (j & 63);
  u64& w = bits[static_cast<size_t>(i) * wpr + (j >> 6)];
  if (value)
    w |= bit;
  else
    w &= ~bit;
}

BitMatrix to_binary(const SignMatrix& m) {
  BitMatrix b(m.order());
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) b.set(i, j, m.get(i, j) == 1);
  return b;
}

SignMatrix from_binary(const BitMatrix& b) {
  SignMatrix m(b.n);
  for (int i = 0; i < b.n; ++i)
    for (int j = 0; j < b.n; ++j) m.set(i, j, b.get(i, j) ? 1 : -1);
  return m;
}

BitMatrix octal_decode(const std::string& text, int order) {
  if (order % 3 != 0)
    throw std::invalid_argument("octal_decode: order must be divisible by 3");
  std::vector<int> digits;
  digits.reserve(text.size());
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch < '0' || ch > '7')
      throw std::invalid_argument(std::string("octal_decode: bad character '") +
                                  ch + "'");
    digits.push_back(ch - '0');
  }
  const size_t expected = static_cast<size_t>(order) * order / 3;
  if (digits.size() != expected)
    throw std::invalid_argument("octal_decode: digit count mismatch");
  BitMatrix b(order);
  size_t pos = 0;
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; j += 3) {
      const int d = digits[pos++];
      b.set(i, j, (d >> 2) & 1);
      b.set(i, j + 1, (d >> 1) & 1);
      b.set(i, j + 2, d & 1);
    }
  return b;
}

std::string octal_encode(const BitMatrix& b) {
  if (b.n % 3 != 0)
    throw std::invalid_argument("octal_encode: order must be divisible by 3");
  std::string out;
  out.reserve(static_cast<size_t>(b.n) * (b.n / 3 + 1));
  for (int i = 0; i < b.n; ++i) {
    for (int j = 0; j < b.n; j += 3) {
      const int d = (b.get(i, j) << 2) | (b.get(i, j + 1) << 1) | b.get(i, j + 2);
      out.push_back(static_cast<char>('0' + d));
    }
    out.push_back('\n');
  }
  return out;
}

bool rows_in_code(const SignMatrix& m, const TernaryCode& c) {
  if (m.order() != c.length())
    throw std::invalid_argument("rows_in_code: order != code length");
  for (int i = 0; i < m.order(); ++i)
    if (!c.contains(m.row_mod3(i))) return false;
  return true;
}

}  // namespace sdh

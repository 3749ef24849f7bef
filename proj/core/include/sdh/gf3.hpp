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

#ifndef SDH_GF3_HPP_
#define SDH_GF3_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sdh/int_matrix.hpp"

namespace sdh {

using u64 = std::uint64_t;

namespace gf3 {

// Word-parallel GF(3) arithmetic on two bit planes per vector.
// Coordinate i holds value lo_i + 2*hi_i, so the legal plane pairs are
// (0,0) -> 0, (1,0) -> 1, (0,1) -> 2, and (1,1) is unrepresentable.
//
// The addition formula below is branch-free.  With t as defined,
//   t   = 1 exactly when the sum of the two trits is 1 or 2 plus a swap,
//   lo' = 1 exactly when the sum is 1,
//   hi' = 1 exactly when the sum is 2,
// which can be checked against all nine input combinations.
inline void add(u64* dst_lo, u64* dst_hi, const u64* a_lo, const u64* a_hi,
                const u64* b_lo, const u64* b_hi, int words) {
  for (int w = 0; w < words; ++w) {
    const u64 t = (a_lo[w] | b_hi[w]) ^ (a_hi[w] | b_lo[w]);
    dst_lo[w] = (a_hi[w] | b_hi[w]) ^ t;
    dst_hi[w] = (a_lo[w] | b_lo[w]) ^ t;
  }
}

// In-place variant: a += b.
inline void add_into(u64* a_lo, u64* a_hi, const u64* b_lo, const u64* b_hi,
                     int words) {
  for (int w = 0; w < words; ++w) {
    const u64 t = (a_lo[w] | b_hi[w]) ^ (a_hi[w] | b_lo[w]);
    const u64 nl = (a_hi[w] | b_hi[w]) ^ t;
    a_hi[w] = (a_lo[w] | b_lo[w]) ^ t;
    a_lo[w] = nl;
  }
}

// a -= b is a += (-b), and negation swaps the planes.
inline void sub_into(u64* a_lo, u64* a_hi, const u64* b_lo, const u64* b_hi,
                     int words) {
  add_into(a_lo, a_hi, b_hi, b_lo, words);
}

// Coordinatewise product (used for inner products).
inline void mul(u64* dst_lo, u64* dst_hi, const u64* a_lo, const u64* a_hi,
                const u64* b_lo, const u64* b_hi, int words) {
  for (int w = 0; w < words; ++w) {
    dst_lo[w] = (a_lo[w] & b_lo[w]) | (a_hi[w] & b_hi[w]);
    dst_hi[w] = (a_lo[w] & b_hi[w]) | (a_hi[w] & b_lo[w]);
  }
}

int popcount_words(const u64* p, int words);

}  // namespace gf3

// Immutable-by-convention vector over GF(3).  Mutating members exist for
// construction and for the enumeration kernels; everything the library
// hands out is treated as a value.
class Gf3Vector {
 public:
  Gf3Vector() : n_(0) {}
  explicit Gf3Vector(int n);
  static Gf3Vector from_trits(const std::vector<int>& trits);

  int length() const { return n_; }
  int words() const { return static_cast<int>(lo_.size()); }

  int get(int i) const {
    const u64 l = (lo_[i >> 6] >> (i & 63)) & 1;
    const u64 h = (hi_[i >> 6] >> (i & 63)) & 1;
    return static_cast<int>(l + 2 * h);
  }
  void set(int i, int value);

  int weight() const;
  bool is_zero() const;
  // True iff no coordinate is zero.
  bool full_weight() const { return weight() == n_; }

  void add_in_place(const Gf3Vector& rhs);
  void sub_in_place(const Gf3Vector& rhs);
  Gf3Vector operator+(const Gf3Vector& rhs) const;
  Gf3Vector negated() const;
  Gf3Vector scaled(int c) const;

  // Inner product over GF(3), returned as 0, 1 or 2.
  int dot(const Gf3Vector& rhs) const;

  std::vector<int> to_trits() const;

  bool operator==(const Gf3Vector& rhs) const {
    return n_ == rhs.n_ && lo_ == rhs.lo_ && hi_ == rhs.hi_;
  }
  bool operator!=(const Gf3Vector& rhs) const { return !(*this == rhs); }
  // Lexicographic on coordinate values; used for canonical sorting.
  bool operator<(const Gf3Vector& rhs) const;

  const u64* lo() const { return lo_.data(); }
  const u64* hi() const { return hi_.data(); }
  u64* lo() { return lo_.data(); }
  u64* hi() { return hi_.data(); }

 private:
  int n_;
  std::vector<u64> lo_;
  std::vector<u64> hi_;
};

class Gf3Matrix {
 public:
  Gf3Matrix() : ncols_(0) {}
  explicit Gf3Matrix(std::vector<Gf3Vector> rows);
  Gf3Matrix(int nrows, int ncols);
  static Gf3Matrix from_trits(const std::vector<std::vector<int>>& rows);

  int nrows() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }
  const Gf3Vector& row(int i) const { return rows_[i]; }
  const std::vector<Gf3Vector>& rows() const { return rows_; }
  Gf3Vector& mutable_row(int i) { return rows_[i]; }

  Gf3Matrix transpose() const;
  bool operator==(const Gf3Matrix& rhs) const {
    return ncols_ == rhs.ncols_ && rows_ == rhs.rows_;
  }

 private:
  std::vector<Gf3Vector> rows_;
  int ncols_;
};

struct RrefResult {
  Gf3Matrix matrix;       // reduced row-echelon form, zero rows dropped
  int rank = 0;
  std::vector<int> pivots;
};

// Unique reduced row-echelon form over GF(3).
RrefResult rref(const Gf3Matrix& m);

// GF(3) rank of an integer matrix after reduction mod 3.
int rank3(const IntMatrix& m);
Gf3Matrix reduce_mod3(const IntMatrix& m);

// A linear [n, k] code over GF(3) held as its reduced row-echelon
// generator matrix, which makes the representation canonical per code.
class TernaryCode {
 public:
  static TernaryCode from_generator(const Gf3Matrix& m);

  int length() const { return n_; }
  int dimension() const { return k_; }
  const Gf3Matrix& generator() const { return gen_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Gf3Vector& v) const;
  // Codeword for a length-k message vector.
  Gf3Vector encode(const Gf3Vector& message) const;

  bool operator==(const TernaryCode& rhs) const {
    return n_ == rhs.n_ && k_ == rhs.k_ && gen_ == rhs.gen_;
  }

 private:
  TernaryCode(int n, int k, Gf3Matrix gen, std::vector<int> pivots)
      : n_(n), k_(k), gen_(std::move(gen)), pivots_(std::move(pivots)) {}
  int n_;
  int k_;
  Gf3Matrix gen_;
  std::vector<int> pivots_;
};

TernaryCode dual_code(const TernaryCode& c);
bool is_self_dual(const TernaryCode& c);

struct StandardForm {
  Gf3Matrix generator;          // (I_k | A)
  std::vector<int> column_of;   // column_of[j] = source column at position j
};

// Permutes columns so the pivot columns (leftmost greedy set) come first.
StandardForm standard_form(const TernaryCode& c);

// Full weight distribution by 3^k enumeration; k is capped because the
// walk visits every codeword.
std::map<int, u64> weight_distribution_small(const TernaryCode& c);

}  // namespace sdh

#endif  // SDH_GF3_HPP_

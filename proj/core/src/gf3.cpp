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

#include "sdh/gf3.hpp"

#include <bit>
#include <stdexcept>

namespace sdh {

namespace gf3 {

int popcount_words(const u64* p, int words) {
  int c = 0;
  for (int w = 0; w < words; ++w) c += std::popcount(p[w]);
  return c;
}

}  // namespace gf3

namespace {

int words_for(int n) { return (n + 63) / 64; }

}  // namespace

Gf3Vector::Gf3Vector(int n) : n_(n), lo_(words_for(n), 0), hi_(words_for(n), 0) {
  if (n < 0) throw std::invalid_argument("Gf3Vector: negative length");
}

Gf3Vector Gf3Vector::from_trits(const std::vector<int>& trits) {
  Gf3Vector v(static_cast<int>(trits.size()));
  for (size_t i = 0; i < trits.size(); ++i) v.set(static_cast<int>(i), trits[i]);
  return v;
}

void Gf3Vector::set(int i, int value) {
  const int m = ((value % 3) + 3) % 3;
  const u64 bit = u64{1} << (i & 63);
  lo_[i >> 6] &= ~bit;
  hi_[i >> 6] &= ~bit;
  if (m == 1) lo_[i >> 6] |= bit;
  if (m == 2) hi_[i >> 6] |= bit;
}

int Gf3Vector::weight() const {
  int c = 0;
  for (size_t w = 0; w < lo_.size(); ++w) c += std::popcount(lo_[w] | hi_[w]);
  return c;
}

bool Gf3Vector::is_zero() const {
  for (size_t w = 0; w < lo_.size(); ++w)
    if (lo_[w] | hi_[w]) return false;
  return true;
}

void Gf3Vector::add_in_place(const Gf3Vector& rhs) {
  if (n_ != rhs.n_) throw std::invalid_argument("Gf3Vector: length mismatch");
  gf3::add_into(lo_.data(), hi_.data(), rhs.lo_.data(), rhs.hi_.data(), words());
}

void Gf3Vector::sub_in_place(const Gf3Vector& rhs) {
  if (n_ != rhs.n_) throw std::invalid_argument("Gf3Vector: length mismatch");
  gf3::sub_into(lo_.data(), hi_.data(), rhs.lo_.data(), rhs.hi_.data(), words());
}

Gf3Vector Gf3Vector::operator+(const Gf3Vector& rhs) const {
  Gf3Vector out = *this;
  out.add_in_place(rhs);
  return out;
}

Gf3Vector Gf3Vector::negated() const {
  Gf3Vector out = *this;
  out.lo_.swap(out.hi_);
  return out;
}

Gf3Vector Gf3Vector::scaled(int c) const {
  const int m = ((c % 3) + 3) % 3;
  if (m == 0) return Gf3Vector(n_);
  if (m == 1) return *this;
  return negated();
}

int Gf3Vector::dot(const Gf3Vector& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("Gf3Vector: length mismatch");
  int ones = 0;
  int twos = 0;
  for (int w = 0; w < words(); ++w) {
    const u64 pl = (lo_[w] & rhs.lo_[w]) | (hi_[w] & rhs.hi_[w]);
    const u64 ph = (lo_[w] & rhs.hi_[w]) | (hi_[w] & rhs.lo_[w]);
    ones += std::popcount(pl);
    twos += std::popcount(ph);
  }
  return (ones + 2 * twos) % 3;
}

std::vector<int> Gf3Vector::to_trits() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = get(i);
  return out;
}

bool Gf3Vector::operator<(const Gf3Vector& rhs) const {
  if (n_ != rhs.n_) return n_ < rhs.n_;
  for (int i = 0; i < n_; ++i) {
    const int a = get(i);
    const int b = rhs.get(i);
    if (a != b) return a < b;
  }
  return false;
}

Gf3Matrix::Gf3Matrix(std::vector<Gf3Vector> rows) : rows_(std::move(rows)), ncols_(0) {
  if (!rows_.empty()) {
    ncols_ = rows_[0].length();
    for (const auto& r : rows_)
      if (r.length() != ncols_)
        throw std::invalid_argument("Gf3Matrix: ragged rows");
  }
}

Gf3Matrix::Gf3Matrix(int nrows, int ncols)
    : rows_(nrows, Gf3Vector(ncols)), ncols_(ncols) {}

Gf3Matrix Gf3Matrix::from_trits(const std::vector<std::vector<int>>& rows) {
  std::vector<Gf3Vector> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(Gf3Vector::from_trits(r));
  return Gf3Matrix(std::move(out));
}

Gf3Matrix Gf3Matrix::transpose() const {
  Gf3Matrix t(ncols_, nrows());
  for (int i = 0; i < nrows(); ++i)
    for (int j = 0; j < ncols_; ++j) t.rows_[j].set(i, rows_[i].get(j));
  return t;
}

RrefResult rref(const Gf3Matrix& m) {
  std::vector<Gf3Vector> rows = m.rows();
  const int nrows = static_cast<int>(rows.size());
  const int ncols = m.ncols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int pr = -1;
    for (int i = r; i < nrows; ++i) {
      if (rows[i].get(c) != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(rows[r], rows[pr]);
    if (rows[r].get(c) == 2) rows[r] = rows[r].negated();
    for (int i = 0; i < nrows; ++i) {
      if (i == r) continue;
      const int coef = rows[i].get(c);
      if (coef == 1)
        rows[i].sub_in_place(rows[r]);
      else if (coef == 2)
        rows[i].add_in_place(rows[r]);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r, Gf3Vector(ncols));
  RrefResult out;
  out.matrix = Gf3Matrix(std::move(rows));
  out.rank = r;
  out.pivots = std::move(pivots);
  return out;
}

Gf3Matrix reduce_mod3(const IntMatrix& m) {
  Gf3Matrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const int v = static_cast<int>(((m.at(i, j) % 3) + 3) % 3);
      out.mutable_row(i).set(j, v);
    }
  return out;
}

int rank3(const IntMatrix& m) { return rref(reduce_mod3(m)).rank; }

TernaryCode TernaryCode::from_generator(const Gf3Matrix& m) {
  RrefResult r = rref(m);
  return TernaryCode(m.ncols(), r.rank, std::move(r.matrix), std::move(r.pivots));
}

bool TernaryCode::contains(const Gf3Vector& v) const {
  if (v.length() != n_) return false;
  Gf3Vector rem = v;
  for (int i = 0; i < k_; ++i) {
    const int coef = rem.get(pivots_[i]);
    if (coef == 1)
      rem.sub_in_place(gen_.row(i));
    else if (coef == 2)
      rem.add_in_place(gen_.row(i));
  }
  return rem.is_zero();
}

Gf3Vector TernaryCode::encode(const Gf3Vector& message) const {
  if (message.length() != k_)
    throw std::invalid_argument("TernaryCode: message length != dimension");
  Gf3Vector out(n_);
  for (int i = 0; i < k_; ++i) {
    const int c = message.get(i);
    if (c == 1)
      out.add_in_place(gen_.row(i));
    else if (c == 2)
      out.sub_in_place(gen_.row(i));
  }
  return out;
}

TernaryCode dual_code(const TernaryCode& c) {
  const int n = c.length();
  const int k = c.dimension();
  // Split columns into pivots and the rest; in the permuted order the
  // generator reads (I_k | A) and the dual is generated by (-A^T | I_{n-k}).
  std::vector<int> is_pivot(n, 0);
  for (int p : c.pivots()) is_pivot[p] = 1;
  std::vector<int> nonpivots;
  for (int j = 0; j < n; ++j)
    if (!is_pivot[j]) nonpivots.push_back(j);

  std::vector<Gf3Vector> rows;
  rows.reserve(n - k);
  for (int t = 0; t < n - k; ++t) {
    Gf3Vector row(n);
    row.set(nonpivots[t], 1);
    for (int i = 0; i < k; ++i) {
      const int a = c.generator().row(i).get(nonpivots[t]);
      // -a at the pivot position of row i.
      row.set(c.pivots()[i], (3 - a) % 3);
    }
    rows.push_back(std::move(row));
  }
  return TernaryCode::from_generator(Gf3Matrix(std::move(rows)));
}

bool is_self_dual(const TernaryCode& c) {
  if (c.length() != 2 * c.dimension()) return false;
  const auto& g = c.generator();
  for (int i = 0; i < c.dimension(); ++i)
    for (int j = i; j < c.dimension(); ++j)
      if (g.row(i).dot(g.row(j)) != 0) return false;
  return true;
}

StandardForm standard_form(const TernaryCode& c) {
  const int n = c.length();
  const int k = c.dimension();
  if (k == 0) throw std::invalid_argument("standard_form: rank-0 code");
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> is_pivot(n, 0);
  for (int p : c.pivots()) {
    order.push_back(p);
    is_pivot[p] = 1;
  }
  for (int j = 0; j < n; ++j)
    if (!is_pivot[j]) order.push_back(j);

  Gf3Matrix permuted(k, n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j)
      permuted.mutable_row(i).set(j, c.generator().row(i).get(order[j]));
  return StandardForm{std::move(permuted), std::move(order)};
}

std::map<int, u64> weight_distribution_small(const TernaryCode& c) {
  const int k = c.dimension();
  if (k > 20)
    throw std::invalid_argument(
        "weight_distribution_small: dimension too large for full enumeration");
  std::map<int, u64> counts;
  Gf3Vector acc(c.length());
  counts[0] = 1;
  if (k == 0) return counts;
  std::vector<int> digit(k, 0);
  u64 total = 1;
  for (int i = 0; i < k; ++i) total *= 3;
  // Odometer walk: every digit bump (including carry bumps from 2 to 0)
  // adds generator row j once, because +1 = -2 over GF(3).
  for (u64 step = 1; step < total; ++step) {
    int j = 0;
    for (;;) {
      acc.add_in_place(c.generator().row(j));
      digit[j] = (digit[j] + 1) % 3;
      if (digit[j] != 0) break;
      ++j;
    }
    ++counts[acc.weight()];
  }
  return counts;
}

}  // namespace sdh

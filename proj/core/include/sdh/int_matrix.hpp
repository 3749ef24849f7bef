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

#ifndef SDH_INT_MATRIX_HPP_
#define SDH_INT_MATRIX_HPP_

#include <cstdint>
#include <vector>

namespace sdh {

// Dense matrix with exact 64-bit integer entries.  This is deliberately
// small: the block-identity checks only need matrices up to order ~160 and
// entries that never leave the int64 range (products of +-1 entries summed
// over at most a few hundred terms).
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t at(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }
  std::int64_t& at(int i, int j) {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator-() const;
  IntMatrix scaled(std::int64_t c) const;
  bool operator==(const IntMatrix& rhs) const;

  // Copies `block` into this matrix with its top-left corner at (r0, c0).
  void set_block(int r0, int c0, const IntMatrix& block);

  // True iff this equals c * I (square only).
  bool is_scalar_identity(std::int64_t c) const;

 private:
  int rows_;
  int cols_;
  std::vector<std::int64_t> data_;
};

}  // namespace sdh

#endif  // SDH_INT_MATRIX_HPP_

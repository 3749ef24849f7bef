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

#ifndef SDH_HADAMARD_HPP_
#define SDH_HADAMARD_HPP_

#include <array>
#include <vector>

#include "sdh/constructions.hpp"
#include "sdh/sign_matrix.hpp"

namespace sdh {

// Cosets C_i = omega^i <omega^4> of the index-4 multiplicative subgroup of
// F_p*, for a prime p = 5 mod 8 and omega the smallest primitive root.
// epsilon is the index (1 or 3) of the coset containing -2.  Subscripts of
// C_i are read mod 4 everywhere.
struct CyclotomicClasses {
  int p = 0;
  int omega = 0;
  int epsilon = 0;
  std::array<std::vector<int>, 4> classes;
  // class_of[x] = i when x lies in C_i; class_of[0] = -1.
  std::vector<int> class_of;

  // Sorted union of C_{i mod 4} and C_{j mod 4}.
  std::vector<int> coset_union(int i, int j) const;
};

CyclotomicClasses cyclotomic_classes(int p);

// Pair of subsets D_1, D_2 of Z_v together with declared parameters
// (v, k, lambda): every nonzero element of Z_v must appear exactly lambda
// times among the differences x - y taken within each set.
struct SdsPair {
  int v = 0;
  int k = 0;
  int lambda = 0;
  std::vector<int> d1;
  std::vector<int> d2;

  // Fills k from the set sizes and lambda from the standard parameter
  // relation lambda (v - 1) = 2 k (k - 1); lambda is set to -1 when that
  // relation has no integer solution, so is_sds rejects the pair.
  static SdsPair make(int v, std::vector<int> d1, std::vector<int> d2);
};

bool is_sds(const SdsPair& pair);

// Sign matrix with m[i][j] = +1 iff (j - i) mod v lies in subset.
SignMatrix type1_matrix(const std::vector<int>& subset, int v);

// Bordered block matrix over the type-1 matrices of a (2m+1, m, m-1)
// supplementary-difference-set pair; the result has order 4(m+1) = 2v+2.
HadamardMatrix build_h_sds(const SdsPair& pair);

// Skew-type Hadamard matrix of order 2(p+1) built from the same plus/minus
// blocks as the self-dual code of that length: rows reduce mod 3 to
// full-weight codewords.  Requires a prime p = 5 mod 24 and a in {+1, -1}.
HadamardMatrix build_h_nv(int p, int a);

enum class PaleyKind { kOne, kTwo };

// Quadratic-character Hadamard matrices: kind one has order q+1 and needs a
// prime q = 3 mod 4; kind two has order 2(q+1) and needs a prime q = 1 mod 4.
HadamardMatrix build_paley(int q, PaleyKind kind);

}  // namespace sdh

#endif  // SDH_HADAMARD_HPP_

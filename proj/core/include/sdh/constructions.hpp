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

#ifndef SDH_CONSTRUCTIONS_HPP_
#define SDH_CONSTRUCTIONS_HPP_

#include <utility>

#include "sdh/gf3.hpp"
#include "sdh/int_matrix.hpp"

namespace sdh {

bool is_prime(long long n);

// Quadratic character of F_p: 0 at 0, +1 at nonzero squares, -1 otherwise.
int quadratic_character(int p, long long x);

// Parameters of the skew-block self-dual family: p prime with p = 5 mod 8,
// sign a in {+1,-1}; the assembly differs between the residues 5 and 13
// of p mod 24 (branch field).
struct NvParameters {
  int p;
  int a;
  int branch;  // p mod 24, either 5 or 13

  static NvParameters make(int p, int a);
};

// Building blocks shared by the code and the Hadamard constructions.
// All identities below hold over the integers and are verified when the
// blocks are assembled:
//   X^T = -X,  Y^T = -Y,  X Y = Y X,  X^2 + Y^2 = -p I.
struct NvBlocks {
  int p;
  IntMatrix rx;   // p x p core of X
  IntMatrix ry;   // p x p core of Y
  IntMatrix x;    // (p+1) x (p+1), bordered
  IntMatrix y;    // (p+1) x (p+1), zero-bordered
  IntMatrix bw;   // 2(p+1) x 2(p+1)
  IntMatrix bew;  // 2(p+1) x 2(p+1)
};

// Core matrices over F_p in the natural element order 0..p-1:
// entry (a,b) of rx is 0 when a=b or b-a is a nonsquare, and chi(c) when
// b-a = c^2 is a nonzero square (well defined since chi(-c)=chi(c) for
// p = 1 mod 4).  ry uses 2(b-a) in place of b-a.
std::pair<IntMatrix, IntMatrix> build_rx_ry(int p);

NvBlocks build_blocks(int p);

// Row span mod 3 of aI + B_w (p = 5 mod 24) or aI + B_w + B_ew
// (p = 13 mod 24); the result is checked to be self-dual.
TernaryCode build_nv_code(const NvParameters& params);

// Extended quadratic-residue code of length p+1 for primes p = -1 mod 12.
// The cyclic part is cut out of x^p - 1 by a gcd with a fixed candidate
// list of square/nonsquare indicator polynomials; each codeword is then
// extended by the negated coordinate sum.  Self-duality is verified.
TernaryCode build_extended_qr(int p);

// Conference matrix of order q+1 used by the symmetry-code generator:
// row/column 0 is the point at infinity, the core is chi(b - a), and the
// border signs depend on q mod 4.  Satisfies S S^T = q I over Z.
IntMatrix pless_conference(int q);

// Symmetry code of length 2q+2 with generator (I | S_q), q prime,
// q = -1 mod 6.  Prime powers are not supported.
TernaryCode build_pless_symmetry(int q);

// Negacirculant matrix: row i+1 is row i rotated right with the wrapped
// entry doubled (multiplication by x in F_3[x]/(x^n + 1)).
Gf3Matrix negacirculant(const Gf3Vector& first_row);

// [4n, 2n] code with generator (I | [[A, B], [2B^T, A^T]]) where A and B
// are the negacirculant matrices of the two given first rows.  The result
// is not forced to be self-dual; callers check separately.
TernaryCode build_four_negacirculant(const Gf3Vector& r_a, const Gf3Vector& r_b);

// The three bundled length-15 first-row pairs whose four-negacirculant
// codes are self-dual [60, 30, 18]; index 1, 2 or 3.
std::pair<Gf3Vector, Gf3Vector> negacirculant_pair(int index);

}  // namespace sdh

#endif  // SDH_CONSTRUCTIONS_HPP_

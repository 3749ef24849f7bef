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

#ifndef SDH_EQUIVALENCE_HPP_
#define SDH_EQUIVALENCE_HPP_

#include <map>
#include <string>
#include <vector>

#include "sdh/gf3.hpp"
#include "sdh/sign_matrix.hpp"

namespace sdh {

// Signed permutation in matrix form: row i has its only nonzero entry,
// sign[i], in column perm[i].
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;

  static SignedPerm identity(int n);
  int degree() const { return static_cast<int>(perm.size()); }
  SignedPerm inverse() const;
  bool operator==(const SignedPerm& rhs) const {
    return perm == rhs.perm && sign == rhs.sign;
  }
};

// Row and column monomial matrices acting on a sign matrix as P*H*Q.  The
// row part is stored by rows (P[i][row.perm[i]] = row.sign[i]) and the
// column part by columns (Q[col.perm[j]][j] = col.sign[j]), so the action
// reads entries directly:
//   apply(m, h)[i][j] = row.sign[i] * col.sign[j] * h[row.perm[i]][col.perm[j]].
struct MonomialPair {
  SignedPerm row;
  SignedPerm col;

  static MonomialPair identity(int n);
  MonomialPair inverse() const;
  bool operator==(const MonomialPair& rhs) const {
    return row == rhs.row && col == rhs.col;
  }
};

SignMatrix apply_monomial(const MonomialPair& m, const SignMatrix& h);

// apply(compose(outer, inner), h) == apply(outer, apply(inner, h)).
MonomialPair compose(const MonomialPair& outer, const MonomialPair& inner);

struct ProfileOptions {
  bool full = false;  // force the full profile at any order
  u64 samples = 100000;
  u64 seed = 0x5d41402abc4b2a76ull;
};

// Multiset of |sum_j h_aj h_bj h_cj h_dj| over 4-subsets {a,b,c,d} of rows,
// as value -> multiplicity.  The full profile (orders <= 40, or full=true)
// is an equivalence invariant; the fixed-seed sample used above order 40 is
// reproducible but only compares like against like heuristically.
std::map<int, u64> profile_invariant(const HadamardMatrix& h);
std::map<int, u64> profile_invariant(const HadamardMatrix& h,
                                     const ProfileOptions& options);

struct CanonicalForm {
  SignMatrix matrix;
  // apply(to_canonical, input) == matrix.
  MonomialPair to_canonical;
};

// Canonical representative of the monomial-equivalence class, computed by
// individualization-refinement on the derived two-edge-colored graph.  The
// output depends only on the class: equivalent inputs give equal matrices.
CanonicalForm canonical_form(const HadamardMatrix& h);

struct EquivalenceResult {
  bool equivalent = false;
  // apply(witness, h1) == h2 when equivalent.
  MonomialPair witness;
};

EquivalenceResult are_equivalent(const HadamardMatrix& h1,
                                 const HadamardMatrix& h2);

struct AutomorphismInfo {
  // Number of pairs (P, Q) with P*H*Q = H.  The central pair (-I, -I) is a
  // group element, so this count is twice the count of pair classes modulo
  // negating both sides.
  u64 order = 0;
  u64 generator_count = 0;
  std::string convention;
};

AutomorphismInfo automorphism_group_order(const HadamardMatrix& h);

// Exhaustive count of pairs (P, Q) with P*H*Q = H over every signed row
// permutation P; practical for orders up to about 5.
u64 automorphism_pairs_bruteforce(const SignMatrix& h);

enum class Tri { kFalse, kTrue, kUndecided };

struct CodeEquivalence {
  Tri status = Tri::kUndecided;
  // Witness for kTrue: source column j maps to column perm[j], scaled by
  // sign[j] in {1, 2} (2 is negation over GF(3)).
  std::vector<int> perm;
  std::vector<int> sign;
  u64 nodes = 0;
};

// Monomial equivalence of ternary codes by column-assignment backtracking
// with difference-pattern pruning.  Exact for length <= 12 within the node
// budget; longer codes or exhausted budgets report kUndecided.
CodeEquivalence code_equivalent_small(const TernaryCode& a,
                                      const TernaryCode& b,
                                      u64 node_budget = u64{1} << 20);

}  // namespace sdh

#endif  // SDH_EQUIVALENCE_HPP_

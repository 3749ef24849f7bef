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

#ifndef SDH_SEARCH_HPP_
#define SDH_SEARCH_HPP_

#include <vector>

#include "sdh/gf3.hpp"
#include "sdh/sign_matrix.hpp"

namespace sdh {

struct FullWeightResult {
  u64 count = 0;
  // Every codeword with no zero coordinate, sorted, in source coordinates.
  std::vector<Gf3Vector> words;
};

// Enumerates the codewords of weight n.  In standard form (I_k | A) a
// codeword is zero-free iff its message lies in {1,2}^k and m*A is
// zero-free, so the walk visits the 2^k sign patterns in binary-reflected
// Gray order, updating m*A by one row addition or subtraction per step.
// threads = 0 picks the hardware count; the output is identical for every
// thread count because shards are merged in index order and sorted.
FullWeightResult enumerate_full_weight(const TernaryCode& c, int threads = 1);

// Deduplicated set of +-1 vectors, one bit plane per vector (bit set = +1),
// each vector normalized to have first coordinate +1 so exactly one of
// {x, -x} is stored.
struct SignVectorSet {
  int n = 0;
  int wpr = 0;
  std::vector<u64> bits;

  int size() const {
    return wpr == 0 ? 0 : static_cast<int>(bits.size()) / wpr;
  }
  int get(int row, int j) const {
    return (bits[static_cast<size_t>(row) * wpr + (j >> 6)] >> (j & 63)) & 1
               ? 1
               : -1;
  }
  const u64* row(int i) const { return &bits[static_cast<size_t>(i) * wpr]; }
  // Integer inner product of two stored vectors.
  int dot(int a, int b) const;
  // Sign matrix whose rows are the selected vectors, in the given order.
  SignMatrix matrix_from(const std::vector<int>& rows) const;
};

// Maps full-weight GF(3) words through 1 -> +1, 2 -> -1, keeps one
// representative per scalar pair and deduplicates.
SignVectorSet sign_normalize(const std::vector<Gf3Vector>& words);

// Graph on the vectors of a SignVectorSet, adjacent iff their integer
// inner product is zero.
struct OrthoGraph {
  int nv = 0;
  int wpr = 0;
  std::vector<u64> adj;

  bool adjacent(int a, int b) const {
    return (adj[static_cast<size_t>(a) * wpr + (b >> 6)] >> (b & 63)) & 1;
  }
  const u64* row(int i) const { return &adj[static_cast<size_t>(i) * wpr]; }
  int degree(int i) const;
};

OrthoGraph build_ortho_graph(const SignVectorSet& s);

struct CliqueOptions {
  int size = 0;
  // Maximum number of search-tree nodes; 0 means unlimited.  Budgets are
  // node counts so runs are machine independent.
  u64 node_budget = 0;
  // Stop after this many cliques; 0 means unlimited.
  u64 max_cliques = 0;
  // Vertices required to be in every reported clique.
  std::vector<int> seed;
};

struct CliqueResult {
  // Each clique sorted ascending; the list is in discovery order, which is
  // deterministic for a fixed budget.
  std::vector<std::vector<int>> cliques;
  bool exhaustive = true;
  u64 nodes = 0;
};

// Enumerates cliques of exactly options.size vertices by ordered
// branch-and-bound over the degeneracy order with a greedy-coloring bound.
CliqueResult find_cliques(const OrthoGraph& g, const CliqueOptions& options);
CliqueResult find_cliques(const OrthoGraph& g, int size, u64 node_budget);

struct MinWeightOptions {
  // Maximum number of enumerated messages.  Rounds are only started when
  // they fit, so a run is deterministic for a fixed budget.
  u64 message_budget = ~static_cast<u64>(0);
  int threads = 1;
};

struct MinWeightResult {
  int weight = 0;       // smallest codeword weight seen
  int lower_bound = 0;  // proven over completed enumeration rounds
  bool exact = false;   // lower_bound >= weight
  Gf3Vector witness;    // codeword of the reported weight
  u64 enumerated = 0;
};

// Minimum distance by information-set enumeration: greedily chosen
// information sets covering all coordinates, messages of ascending weight
// with the first nonzero coefficient fixed to 1, and the standard lower
// bound sum max(0, w_i + 1 - (k - r_i)) over the per-set completed rounds.
MinWeightResult min_weight_bz(const TernaryCode& c,
                              const MinWeightOptions& options = {});

}  // namespace sdh

#endif  // SDH_SEARCH_HPP_

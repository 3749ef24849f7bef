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

#include "sdh/equivalence.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "sdh/int_matrix.hpp"

namespace sdh {
namespace {

void check_signed_perm(const SignedPerm& p, int n, const char* what) {
  if (p.degree() != n || static_cast<int>(p.sign.size()) != n) {
    throw std::invalid_argument(std::string(what) + ": degree mismatch");
  }
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    const int v = p.perm[i];
    if (v < 0 || v >= n || seen[v]) {
      throw std::invalid_argument(std::string(what) + ": not a permutation");
    }
    seen[v] = 1;
    if (p.sign[i] != 1 && p.sign[i] != -1) {
      throw std::invalid_argument(std::string(what) + ": sign entries must be +-1");
    }
  }
}

SignedPerm compose_perm(const SignedPerm& outer, const SignedPerm& inner) {
  const int n = outer.degree();
  if (inner.degree() != n) {
    throw std::invalid_argument("compose: degree mismatch");
  }
  SignedPerm out;
  out.perm.resize(n);
  out.sign.resize(n);
  for (int i = 0; i < n; ++i) {
    out.perm[i] = inner.perm[outer.perm[i]];
    out.sign[i] = outer.sign[i] * inner.sign[outer.perm[i]];
  }
  return out;
}

}  // namespace

SignedPerm SignedPerm::identity(int n) {
  SignedPerm p;
  p.perm.resize(n);
  std::iota(p.perm.begin(), p.perm.end(), 0);
  p.sign.assign(n, 1);
  return p;
}

SignedPerm SignedPerm::inverse() const {
  const int n = degree();
  SignedPerm inv;
  inv.perm.assign(n, 0);
  inv.sign.assign(n, 1);
  for (int i = 0; i < n; ++i) {
    inv.perm[perm[i]] = i;
    inv.sign[perm[i]] = sign[i];
  }
  return inv;
}

MonomialPair MonomialPair::identity(int n) {
  return MonomialPair{SignedPerm::identity(n), SignedPerm::identity(n)};
}

MonomialPair MonomialPair::inverse() const {
  return MonomialPair{row.inverse(), col.inverse()};
}

SignMatrix apply_monomial(const MonomialPair& m, const SignMatrix& h) {
  const int n = h.order();
  check_signed_perm(m.row, n, "apply_monomial row part");
  check_signed_perm(m.col, n, "apply_monomial column part");
  SignMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.set(i, j, m.row.sign[i] * m.col.sign[j] *
                        h.get(m.row.perm[i], m.col.perm[j]));
    }
  }
  return out;
}

MonomialPair compose(const MonomialPair& outer, const MonomialPair& inner) {
  return MonomialPair{compose_perm(outer.row, inner.row),
                      compose_perm(outer.col, inner.col)};
}

namespace {

int quad_value(const SignMatrix& h, const std::vector<std::vector<u64>>& rows,
               int wpr, int a, int b, int c, int d) {
  int pop = 0;
  for (int w = 0; w < wpr; ++w) {
    pop += std::popcount(rows[a][w] ^ rows[b][w] ^ rows[c][w] ^ rows[d][w]);
  }
  const int value = h.order() - 2 * pop;
  return value < 0 ? -value : value;
}

}  // namespace

std::map<int, u64> profile_invariant(const HadamardMatrix& h) {
  return profile_invariant(h, ProfileOptions{});
}

std::map<int, u64> profile_invariant(const HadamardMatrix& h,
                                     const ProfileOptions& options) {
  const SignMatrix& m = h.matrix();
  const int n = m.order();
  const int wpr = m.words_per_row();
  std::vector<std::vector<u64>> rows(n);
  for (int i = 0; i < n; ++i) {
    rows[i].assign(m.row_bits(i), m.row_bits(i) + wpr);
  }

  std::map<int, u64> out;
  if (options.full || n <= 40) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        for (int c = b + 1; c < n; ++c) {
          for (int d = c + 1; d < n; ++d) {
            ++out[quad_value(m, rows, wpr, a, b, c, d)];
          }
        }
      }
    }
    return out;
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (u64 s = 0; s < options.samples; ++s) {
    int idx[4];
    int filled = 0;
    while (filled < 4) {
      const int v = pick(rng);
      bool dup = false;
      for (int t = 0; t < filled; ++t) {
        dup = dup || idx[t] == v;
      }
      if (!dup) {
        idx[filled++] = v;
      }
    }
    std::sort(idx, idx + 4);
    ++out[quad_value(m, rows, wpr, idx[0], idx[1], idx[2], idx[3])];
  }
  return out;
}

u64 automorphism_pairs_bruteforce(const SignMatrix& h) {
  const int n = h.order();
  if (n > 8) {
    throw std::invalid_argument(
        "automorphism_pairs_bruteforce: order too large for exhaustion");
  }
  const IntMatrix hi = h.to_int();
  const IntMatrix ht = hi.transpose();

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  u64 count = 0;
  do {
    for (u64 mask = 0; mask < (u64{1} << n); ++mask) {
      // Candidate row part P; the column part is forced to (P*H)^T * H / n,
      // which is a valid +-1 monomial matrix exactly when P extends to an
      // automorphism pair.
      IntMatrix p(n, n);
      for (int i = 0; i < n; ++i) {
        p.at(i, perm[i]) = (mask >> i) & 1 ? -1 : 1;
      }
      const IntMatrix ph = p * hi;
      const IntMatrix nq = ph.transpose() * hi;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        int nonzero = 0;
        for (int j = 0; j < n; ++j) {
          const std::int64_t v = nq.at(i, j);
          if (v == 0) {
            continue;
          }
          ++nonzero;
          ok = ok && (v == n || v == -n);
        }
        ok = ok && nonzero == 1;
      }
      for (int j = 0; j < n && ok; ++j) {
        int nonzero = 0;
        for (int i = 0; i < n; ++i) {
          nonzero += nq.at(i, j) != 0 ? 1 : 0;
        }
        ok = ok && nonzero == 1;
      }
      count += ok ? 1 : 0;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

namespace {

// Joint column statistics over all codewords, used to prune column
// assignments: zz both zero, nz first nonzero second zero, same equal
// nonzero values, diff unequal nonzero values.  Flipping the sign of one
// column swaps same and diff; permutations relabel indices.
struct PairStats {
  std::vector<u64> zz;
  std::vector<u64> nz;
  std::vector<u64> same;
  std::vector<u64> diff;
  int n = 0;

  u64& at(std::vector<u64>& t, int i, int j) {
    return t[static_cast<size_t>(i) * n + j];
  }
  u64 get(const std::vector<u64>& t, int i, int j) const {
    return t[static_cast<size_t>(i) * n + j];
  }
};

struct CodeStats {
  PairStats pairs;
  // zeros_by_weight[j][w] counts codewords of weight w with a zero in
  // column j.
  std::vector<std::vector<u64>> zeros_by_weight;
  std::vector<u64> weight_dist;
};

CodeStats collect_stats(const TernaryCode& c) {
  const int n = c.length();
  const int k = c.dimension();
  CodeStats s;
  s.pairs.n = n;
  const size_t cells = static_cast<size_t>(n) * n;
  s.pairs.zz.assign(cells, 0);
  s.pairs.nz.assign(cells, 0);
  s.pairs.same.assign(cells, 0);
  s.pairs.diff.assign(cells, 0);
  s.zeros_by_weight.assign(n, std::vector<u64>(n + 1, 0));
  s.weight_dist.assign(n + 1, 0);

  u64 total = 1;
  for (int i = 0; i < k; ++i) {
    total *= 3;
  }
  std::vector<int> digits(k, 0);
  Gf3Vector word(n);
  std::vector<int> trits(n);
  for (u64 step = 0; step < total; ++step) {
    for (int j = 0; j < n; ++j) {
      trits[j] = word.get(j);
    }
    const int w = word.weight();
    ++s.weight_dist[w];
    for (int i = 0; i < n; ++i) {
      if (trits[i] == 0) {
        ++s.zeros_by_weight[i][w];
      }
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          continue;
        }
        if (trits[i] == 0 && trits[j] == 0) {
          ++s.pairs.at(s.pairs.zz, i, j);
        } else if (trits[i] != 0 && trits[j] == 0) {
          ++s.pairs.at(s.pairs.nz, i, j);
        } else if (trits[i] != 0 && trits[j] != 0) {
          if (trits[i] == trits[j]) {
            ++s.pairs.at(s.pairs.same, i, j);
          } else {
            ++s.pairs.at(s.pairs.diff, i, j);
          }
        }
      }
    }
    if (step + 1 == total) {
      break;
    }
    int carry = 0;
    while (true) {
      word.add_in_place(c.generator().row(carry));
      ++digits[carry];
      if (digits[carry] == 3) {
        digits[carry] = 0;
        ++carry;
      } else {
        break;
      }
    }
  }
  return s;
}

// Walks all 3^k codewords of c in odometer order, calling fn on each.
template <typename Fn>
void for_each_codeword(const TernaryCode& c, Fn&& fn) {
  const int k = c.dimension();
  u64 total = 1;
  for (int i = 0; i < k; ++i) {
    total *= 3;
  }
  std::vector<int> digits(k, 0);
  Gf3Vector word(c.length());
  for (u64 step = 0; step < total; ++step) {
    fn(word);
    if (step + 1 == total) {
      break;
    }
    int carry = 0;
    while (true) {
      word.add_in_place(c.generator().row(carry));
      ++digits[carry];
      if (digits[carry] == 3) {
        digits[carry] = 0;
        ++carry;
      } else {
        break;
      }
    }
  }
}

struct AssignSearch {
  const CodeStats* sa = nullptr;
  const CodeStats* sb = nullptr;
  const TernaryCode* code_a = nullptr;
  const TernaryCode* code_b = nullptr;
  int n = 0;
  u64 budget = 0;
  u64 nodes = 0;
  bool exhausted = false;
  std::vector<int> order;        // source columns, anchor support first
  std::vector<int> perm;         // source -> target
  std::vector<int> sign;         // 1 or 2 per source column
  std::vector<char> target_used;
  std::vector<std::vector<int>> row_support;
  // Generator rows to membership-check once depth columns are assigned.
  std::vector<std::vector<int>> rows_closing;

  bool charge() {
    if (exhausted) {
      return false;
    }
    if (budget != 0 && nodes >= budget) {
      exhausted = true;
      return false;
    }
    ++nodes;
    return true;
  }

  bool pair_consistent(int s, int c, int sg, int depth) const {
    const PairStats& pa = sa->pairs;
    const PairStats& pb = sb->pairs;
    for (int t = 0; t < depth; ++t) {
      const int s2 = order[t];
      const int c2 = perm[s2];
      const int sg2 = sign[s2];
      if (pa.get(pa.zz, s, s2) != pb.get(pb.zz, c, c2) ||
          pa.get(pa.nz, s, s2) != pb.get(pb.nz, c, c2) ||
          pa.get(pa.nz, s2, s) != pb.get(pb.nz, c2, c)) {
        return false;
      }
      if (sg == sg2) {
        if (pa.get(pa.same, s, s2) != pb.get(pb.same, c, c2) ||
            pa.get(pa.diff, s, s2) != pb.get(pb.diff, c, c2)) {
          return false;
        }
      } else {
        if (pa.get(pa.same, s, s2) != pb.get(pb.diff, c, c2) ||
            pa.get(pa.diff, s, s2) != pb.get(pb.same, c, c2)) {
          return false;
        }
      }
    }
    return true;
  }

  bool row_maps_into_b(int r) const {
    const Gf3Matrix& gen = code_a->generator();
    Gf3Vector mapped(n);
    for (const int j : row_support[r]) {
      const int v = gen.row(r).get(j);
      mapped.set(perm[j], (v * sign[j]) % 3);
    }
    return code_b->contains(mapped);
  }

  bool verify_leaf() const {
    for (int r = 0; r < code_a->dimension(); ++r) {
      if (!row_maps_into_b(r)) {
        return false;
      }
    }
    return true;
  }

  bool dfs(int depth) {
    if (exhausted) {
      return false;
    }
    for (const int r : rows_closing[depth]) {
      if (!row_maps_into_b(r)) {
        return false;
      }
    }
    if (depth == n) {
      return verify_leaf();
    }
    const int s = order[depth];
    for (int c = 0; c < n; ++c) {
      if (target_used[c] || sa->zeros_by_weight[s] != sb->zeros_by_weight[c]) {
        continue;
      }
      for (const int sg : {1, 2}) {
        if (!charge()) {
          return false;
        }
        if (!pair_consistent(s, c, sg, depth)) {
          continue;
        }
        perm[s] = c;
        sign[s] = sg;
        target_used[c] = 1;
        if (dfs(depth + 1)) {
          return true;
        }
        target_used[c] = 0;
        if (exhausted) {
          return false;
        }
      }
    }
    return false;
  }
};

}  // namespace

CodeEquivalence code_equivalent_small(const TernaryCode& a,
                                      const TernaryCode& b, u64 node_budget) {
  CodeEquivalence out;
  if (a.length() != b.length() || a.dimension() != b.dimension()) {
    out.status = Tri::kFalse;
    return out;
  }
  const int n = a.length();
  if (n > 12) {
    out.status = Tri::kUndecided;
    return out;
  }
  if (a.dimension() == 0) {
    out.status = Tri::kTrue;
    out.perm.resize(n);
    std::iota(out.perm.begin(), out.perm.end(), 0);
    out.sign.assign(n, 1);
    return out;
  }

  const CodeStats sa = collect_stats(a);
  const CodeStats sb = collect_stats(b);
  if (sa.weight_dist != sb.weight_dist) {
    out.status = Tri::kFalse;
    return out;
  }

  AssignSearch search;
  search.sa = &sa;
  search.sb = &sb;
  search.code_a = &a;
  search.code_b = &b;
  search.n = n;
  search.budget = node_budget;
  search.perm.assign(n, 0);
  search.sign.assign(n, 1);
  search.target_used.assign(n, 0);

  // Any monomial map must send the first minimum-weight codeword of a to
  // a codeword of b of the same weight, and the support bijection forces
  // the sign of every anchor column.  Anchoring this way keeps the search
  // decided even when the column statistics are flat, which happens for
  // codes with 2-transitive monomial groups.
  int w0 = 0;
  for (int w = 1; w <= n; ++w) {
    if (sa.weight_dist[w] != 0) {
      w0 = w;
      break;
    }
  }
  Gf3Vector anchor(n);
  bool have_anchor = false;
  for_each_codeword(a, [&](const Gf3Vector& word) {
    if (!have_anchor && word.weight() == w0) {
      anchor = word;
      have_anchor = true;
    }
  });
  std::vector<Gf3Vector> targets;
  for_each_codeword(b, [&](const Gf3Vector& word) {
    if (word.weight() == w0) {
      targets.push_back(word);
    }
  });

  // Column order: anchor support ascending, then the rest with the rarest
  // zero signature first to keep the branching factor low early.
  std::vector<char> in_anchor(n, 0);
  for (int j = 0; j < n; ++j) {
    if (anchor.get(j) != 0) {
      search.order.push_back(j);
      in_anchor[j] = 1;
    }
  }
  std::vector<int> freq(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      freq[i] += sa.zeros_by_weight[i] == sa.zeros_by_weight[j] ? 1 : 0;
    }
  }
  std::vector<int> rest;
  for (int j = 0; j < n; ++j) {
    if (!in_anchor[j]) {
      rest.push_back(j);
    }
  }
  std::sort(rest.begin(), rest.end(), [&](int x, int y) {
    if (freq[x] != freq[y]) {
      return freq[x] < freq[y];
    }
    return x < y;
  });
  search.order.insert(search.order.end(), rest.begin(), rest.end());

  // Each generator row is checked as soon as its whole support is
  // assigned; rows closing inside the anchor prefix are checked at w0.
  const Gf3Matrix& gen = a.generator();
  const int k = a.dimension();
  std::vector<int> pos_in_order(n, 0);
  for (int t = 0; t < n; ++t) {
    pos_in_order[search.order[t]] = t;
  }
  search.row_support.resize(k);
  search.rows_closing.assign(n + 1, {});
  for (int r = 0; r < k; ++r) {
    int close = 0;
    for (int j = 0; j < n; ++j) {
      if (gen.row(r).get(j) != 0) {
        search.row_support[r].push_back(j);
        close = std::max(close, pos_in_order[j] + 1);
      }
    }
    search.rows_closing[std::max(close, w0)].push_back(r);
  }

  bool found = false;
  for (const Gf3Vector& v : targets) {
    std::vector<int> tsup;
    for (int j = 0; j < n; ++j) {
      if (v.get(j) != 0) {
        tsup.push_back(j);
      }
    }
    do {
      if (!search.charge()) {
        break;
      }
      bool ok = true;
      int assigned = 0;
      for (int t = 0; t < w0; ++t) {
        const int s = search.order[t];
        const int c = tsup[t];
        if (sa.zeros_by_weight[s] != sb.zeros_by_weight[c]) {
          ok = false;
          break;
        }
        const int sg = anchor.get(s) == v.get(c) ? 1 : 2;
        if (!search.pair_consistent(s, c, sg, t)) {
          ok = false;
          break;
        }
        search.perm[s] = c;
        search.sign[s] = sg;
        search.target_used[c] = 1;
        ++assigned;
      }
      if (ok && search.dfs(w0)) {
        found = true;
      }
      for (int t = 0; t < assigned; ++t) {
        search.target_used[tsup[t]] = 0;
      }
    } while (!found && !search.exhausted &&
             std::next_permutation(tsup.begin(), tsup.end()));
    if (found || search.exhausted) {
      break;
    }
  }

  out.nodes = search.nodes;
  if (found) {
    out.status = Tri::kTrue;
    out.perm = search.perm;
    out.sign = search.sign;
  } else if (search.exhausted) {
    out.status = Tri::kUndecided;
  } else {
    out.status = Tri::kFalse;
  }
  return out;
}

}  // namespace sdh

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

#include "sdh/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>

namespace sdh {

namespace {

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs jobs 0..count-1 on up to `threads` workers, pulling from a shared
// counter.  Each job writes only to its own slot, so scheduling does not
// affect the result.
template <typename Fn>
void run_jobs(u64 count, int threads, Fn&& fn) {
  if (count == 0) return;
  const int nt = static_cast<int>(
      std::min<u64>(count, static_cast<u64>(resolve_threads(threads))));
  if (nt <= 1) {
    for (u64 j = 0; j < count; ++j) fn(j);
    return;
  }
  std::atomic<u64> next{0};
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const u64 j = next.fetch_add(1);
        if (j >= count) return;
        fn(j);
      }
    });
  for (auto& th : pool) th.join();
}

}  // namespace

FullWeightResult enumerate_full_weight(const TernaryCode& c, int threads) {
  FullWeightResult result;
  const int k = c.dimension();
  const int n = c.length();
  if (k == 0) return result;
  if (k > 40)
    throw std::invalid_argument("enumerate_full_weight: dimension too large");

  const StandardForm sf = standard_form(c);
  const int r = n - k;
  const int rw = (r + 63) / 64;

  // Rows of the A part of (I_k | A), one plane pair per row.
  std::vector<u64> alo(static_cast<size_t>(k) * rw, 0);
  std::vector<u64> ahi(static_cast<size_t>(k) * rw, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < r; ++j) {
      const int trit = sf.generator.row(i).get(k + j);
      if (trit == 1) alo[static_cast<size_t>(i) * rw + (j >> 6)] |= u64{1} << (j & 63);
      if (trit == 2) ahi[static_cast<size_t>(i) * rw + (j >> 6)] |= u64{1} << (j & 63);
    }
  std::vector<u64> mask(rw, 0);
  for (int j = 0; j < r; ++j) mask[j >> 6] |= u64{1} << (j & 63);

  // m*A for the all-ones message.
  std::vector<u64> base_lo(rw, 0);
  std::vector<u64> base_hi(rw, 0);
  for (int i = 0; i < k; ++i)
    gf3::add_into(base_lo.data(), base_hi.data(), &alo[static_cast<size_t>(i) * rw],
                  &ahi[static_cast<size_t>(i) * rw], rw);

  int shard_bits = 0;
  const int nt = resolve_threads(threads);
  if (nt > 1 && k > 16) {
    while ((1 << shard_bits) < 4 * nt && shard_bits < k - 12) ++shard_bits;
  }
  const u64 shard_count = u64{1} << shard_bits;
  const u64 block = u64{1} << (k - shard_bits);

  std::vector<std::vector<u64>> hits(shard_count);
  run_jobs(shard_count, threads, [&](u64 shard) {
    std::vector<u64>& out = hits[shard];
    const u64 t0 = shard << (k - shard_bits);
    u64 b = t0 ^ (t0 >> 1);
    std::vector<u64> vlo = base_lo;
    std::vector<u64> vhi = base_hi;
    for (int i = 0; i < k; ++i)
      if ((b >> i) & 1)
        gf3::add_into(vlo.data(), vhi.data(), &alo[static_cast<size_t>(i) * rw],
                      &ahi[static_cast<size_t>(i) * rw], rw);
    const auto check = [&] {
      for (int w = 0; w < rw; ++w)
        if ((vlo[w] | vhi[w]) != mask[w]) return;
      out.push_back(b);
    };
    check();
    for (u64 u = 1; u < block; ++u) {
      const int j = std::countr_zero(u);
      const u64* rlo = &alo[static_cast<size_t>(j) * rw];
      const u64* rhi = &ahi[static_cast<size_t>(j) * rw];
      // Flipping bit j moves the coefficient between 1 and 2.
      if ((b >> j) & 1)
        gf3::sub_into(vlo.data(), vhi.data(), rlo, rhi, rw);
      else
        gf3::add_into(vlo.data(), vhi.data(), rlo, rhi, rw);
      b ^= u64{1} << j;
      check();
    }
  });

  for (const auto& shard : hits) result.count += shard.size();
  result.words.reserve(result.count);
  std::vector<u64> vlo(rw), vhi(rw);
  for (const auto& shard : hits)
    for (const u64 b : shard) {
      std::copy(base_lo.begin(), base_lo.end(), vlo.begin());
      std::copy(base_hi.begin(), base_hi.end(), vhi.begin());
      for (int i = 0; i < k; ++i)
        if ((b >> i) & 1)
          gf3::add_into(vlo.data(), vhi.data(), &alo[static_cast<size_t>(i) * rw],
                        &ahi[static_cast<size_t>(i) * rw], rw);
      Gf3Vector word(n);
      for (int i = 0; i < k; ++i)
        word.set(sf.column_of[i], ((b >> i) & 1) ? 2 : 1);
      for (int j = 0; j < r; ++j) {
        const int lo = (vlo[j >> 6] >> (j & 63)) & 1;
        const int hi = (vhi[j >> 6] >> (j & 63)) & 1;
        word.set(sf.column_of[k + j], lo + 2 * hi);
      }
      result.words.push_back(std::move(word));
    }
  std::sort(result.words.begin(), result.words.end());
  return result;
}

int SignVectorSet::dot(int a, int b) const {
  int dist = 0;
  for (int w = 0; w < wpr; ++w)
    dist += std::popcount(row(a)[w] ^ row(b)[w]);
  return n - 2 * dist;
}

SignMatrix SignVectorSet::matrix_from(const std::vector<int>& rows) const {
  if (static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("SignVectorSet: need exactly n rows");
  SignMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (rows[i] < 0 || rows[i] >= size())
      throw std::invalid_argument("SignVectorSet: row index out of range");
    for (int j = 0; j < n; ++j)
      m.set(i, j, get(rows[i], j));
  }
  return m;
}

SignVectorSet sign_normalize(const std::vector<Gf3Vector>& words) {
  SignVectorSet out;
  if (words.empty()) return out;
  const int n = words[0].length();
  out.n = n;
  out.wpr = (n + 63) / 64;
  std::vector<std::vector<u64>> rows;
  rows.reserve(words.size());
  for (const Gf3Vector& w : words) {
    if (w.length() != n)
      throw std::invalid_argument("sign_normalize: mixed lengths");
    if (!w.full_weight())
      throw std::invalid_argument("sign_normalize: word has a zero coordinate");
    // The lo plane is the +1 indicator; negation swaps the planes, so the
    // representative with first coordinate +1 is whichever plane has bit 0.
    const u64* plane = (w.lo()[0] & 1) ? w.lo() : w.hi();
    rows.emplace_back(plane, plane + out.wpr);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  out.bits.reserve(rows.size() * out.wpr);
  for (const auto& r : rows) {
    if ((r[0] & 1) == 0)
      throw std::runtime_error("sign_normalize: representative lost its sign");
    out.bits.insert(out.bits.end(), r.begin(), r.end());
  }
  return out;
}

int OrthoGraph::degree(int i) const {
  int d = 0;
  for (int w = 0; w < wpr; ++w) d += std::popcount(row(i)[w]);
  return d;
}

OrthoGraph build_ortho_graph(const SignVectorSet& s) {
  OrthoGraph g;
  g.nv = s.size();
  g.wpr = (g.nv + 63) / 64;
  g.adj.assign(static_cast<size_t>(g.nv) * g.wpr, 0);
  for (int a = 0; a < g.nv; ++a)
    for (int b = a + 1; b < g.nv; ++b)
      if (s.dot(a, b) == 0) {
        g.adj[static_cast<size_t>(a) * g.wpr + (b >> 6)] |= u64{1} << (b & 63);
        g.adj[static_cast<size_t>(b) * g.wpr + (a >> 6)] |= u64{1} << (a & 63);
      }
  return g;
}

namespace {

// Search state shared across the recursion of one find_cliques call.
struct CliqueSearch {
  const OrthoGraph* g = nullptr;
  int nv = 0;
  int wpr = 0;
  int target = 0;
  u64 node_budget = 0;
  u64 max_cliques = 0;
  std::vector<int> order;           // degeneracy order: position -> vertex
  std::vector<std::vector<u64>> adjp;  // adjacency over positions
  std::vector<std::vector<u64>> cand;  // per-depth candidate sets
  std::vector<std::vector<u64>> work1;  // per-depth coloring scratch
  std::vector<std::vector<u64>> work2;
  std::vector<int> chosen;          // current clique, as positions
  CliqueResult result;

  bool record() {
    std::vector<int> clique;
    clique.reserve(chosen.size());
    for (int p : chosen) clique.push_back(order[p]);
    std::sort(clique.begin(), clique.end());
    result.cliques.push_back(std::move(clique));
    if (max_cliques != 0 && result.cliques.size() >= max_cliques) {
      result.exhaustive = false;
      return false;
    }
    return true;
  }

  // Upper bound on the largest clique inside the candidate set: the number
  // of classes of a greedy partition into independent sets, capped at
  // `need` since larger values never prune.
  int color_bound(const std::vector<u64>& p, int need, int depth) {
    std::vector<u64>& uncolored = work1[depth];
    std::vector<u64>& avail = work2[depth];
    uncolored = p;
    int colors = 0;
    for (;;) {
      int w = 0;
      while (w < wpr && uncolored[w] == 0) ++w;
      if (w == wpr) return colors;
      if (colors == need) return need;
      ++colors;
      avail = uncolored;
      for (int ww = 0; ww < wpr; ++ww) {
        u64 bits = avail[ww];
        while (bits) {
          const int v = ww * 64 + std::countr_zero(bits);
          uncolored[v >> 6] &= ~(u64{1} << (v & 63));
          for (int x = 0; x < wpr; ++x) avail[x] &= ~adjp[v][x];
          avail[ww] &= ~(u64{1} << (v & 63));
          bits = avail[ww];
        }
      }
    }
  }

  bool expand(int depth) {
    if (node_budget != 0 && result.nodes >= node_budget) {
      result.exhaustive = false;
      return false;
    }
    ++result.nodes;
    if (static_cast<int>(chosen.size()) == target) return record();
    const std::vector<u64>& p = cand[depth];
    const int need = target - static_cast<int>(chosen.size());
    int cnt = 0;
    for (int w = 0; w < wpr; ++w) cnt += std::popcount(p[w]);
    if (cnt < need) return true;
    if (color_bound(p, need, depth) < need) return true;
    int remaining = cnt;
    for (int w = 0; w < wpr; ++w) {
      u64 bits = p[w];
      while (bits) {
        const int v = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (remaining < need) return true;
        std::vector<u64>& child = cand[depth + 1];
        for (int x = 0; x < wpr; ++x) child[x] = p[x] & adjp[v][x];
        for (int x = 0; x < w; ++x) child[x] = 0;
        child[w] &= (v & 63) == 63 ? u64{0} : ~u64{0} << ((v & 63) + 1);
        chosen.push_back(v);
        const bool keep_going = expand(depth + 1);
        chosen.pop_back();
        if (!keep_going) return false;
        --remaining;
      }
    }
    return true;
  }
};

}  // namespace

CliqueResult find_cliques(const OrthoGraph& g, const CliqueOptions& options) {
  if (options.size <= 0)
    throw std::invalid_argument("find_cliques: size must be positive");
  if (static_cast<int>(options.seed.size()) > options.size)
    throw std::invalid_argument("find_cliques: seed larger than target size");
  for (size_t a = 0; a < options.seed.size(); ++a) {
    const int v = options.seed[a];
    if (v < 0 || v >= g.nv)
      throw std::invalid_argument("find_cliques: seed vertex out of range");
    for (size_t b = a + 1; b < options.seed.size(); ++b)
      if (v == options.seed[b] || !g.adjacent(v, options.seed[b]))
        throw std::invalid_argument("find_cliques: seed is not a clique");
  }

  CliqueSearch s;
  s.g = &g;
  s.nv = g.nv;
  s.wpr = std::max(1, (g.nv + 63) / 64);
  s.target = options.size;
  s.node_budget = options.node_budget;
  s.max_cliques = options.max_cliques;

  // Degeneracy order: repeatedly remove a vertex of minimum remaining
  // degree, smallest index first for determinism.
  std::vector<int> deg(g.nv);
  std::vector<char> removed(g.nv, 0);
  for (int v = 0; v < g.nv; ++v) deg[v] = g.degree(v);
  s.order.reserve(g.nv);
  for (int step = 0; step < g.nv; ++step) {
    int best = -1;
    for (int v = 0; v < g.nv; ++v)
      if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
    removed[best] = 1;
    s.order.push_back(best);
    for (int u = 0; u < g.nv; ++u)
      if (!removed[u] && g.adjacent(best, u)) --deg[u];
  }
  std::vector<int> pos(g.nv);
  for (int p = 0; p < g.nv; ++p) pos[s.order[p]] = p;

  s.adjp.assign(g.nv, std::vector<u64>(s.wpr, 0));
  for (int a = 0; a < g.nv; ++a)
    for (int b = 0; b < g.nv; ++b)
      if (g.adjacent(s.order[a], s.order[b]))
        s.adjp[a][b >> 6] |= u64{1} << (b & 63);

  const int depth_cap = options.size + 2;
  s.cand.assign(depth_cap, std::vector<u64>(s.wpr, 0));
  s.work1.assign(depth_cap, std::vector<u64>(s.wpr, 0));
  s.work2.assign(depth_cap, std::vector<u64>(s.wpr, 0));

  std::vector<u64>& root = s.cand[0];
  if (options.seed.empty()) {
    for (int v = 0; v < g.nv; ++v) root[v >> 6] |= u64{1} << (v & 63);
  } else {
    std::fill(root.begin(), root.end(), ~u64{0});
    for (int v : options.seed) {
      s.chosen.push_back(pos[v]);
      for (int w = 0; w < s.wpr; ++w) root[w] &= s.adjp[pos[v]][w];
    }
    // Trim tail bits past nv.
    if (g.nv % 64 != 0) root[s.wpr - 1] &= (u64{1} << (g.nv % 64)) - 1;
  }

  s.expand(0);
  return std::move(s.result);
}

CliqueResult find_cliques(const OrthoGraph& g, int size, u64 node_budget) {
  CliqueOptions options;
  options.size = size;
  options.node_budget = node_budget;
  return find_cliques(g, options);
}

namespace {

struct InfoSet {
  std::vector<Gf3Vector> rows;  // k full-length rows, identity on the set
  int fresh_rank = 0;           // pivots taken on previously uncovered columns
};

// Gaussian elimination preferring the given column order; returns the
// eliminated rows and the ordered pivot columns.
void eliminate(std::vector<Gf3Vector>& rows, const std::vector<int>& col_order,
               std::vector<int>& pivots) {
  const int k = static_cast<int>(rows.size());
  int r = 0;
  for (int col : col_order) {
    if (r == k) break;
    int pivot = -1;
    for (int t = r; t < k; ++t)
      if (rows[t].get(col) != 0) {
        pivot = t;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    if (rows[r].get(col) == 2) rows[r] = rows[r].scaled(2);
    for (int t = 0; t < k; ++t) {
      if (t == r) continue;
      const int v = rows[t].get(col);
      if (v == 1)
        rows[t].sub_in_place(rows[r]);
      else if (v == 2)
        rows[t].add_in_place(rows[r]);
    }
    pivots.push_back(col);
    ++r;
  }
}

struct RoundBest {
  int weight;
  Gf3Vector word;
};

void consider(RoundBest& best, int weight, const Gf3Vector& word) {
  if (weight < best.weight || (weight == best.weight && word < best.word)) {
    best.weight = weight;
    best.word = word;
  }
}

// Walks coefficient choices for combinations of `w` rows; rows past the
// first carry coefficient 1 or 2, and three successive additions of the
// same row restore the accumulator.
void combos_rec(const std::vector<Gf3Vector>& rows, int w, int chosen,
                int start, Gf3Vector& acc, RoundBest& best) {
  if (chosen == w) {
    consider(best, acc.weight(), acc);
    return;
  }
  const int k = static_cast<int>(rows.size());
  const int last_start = k - (w - chosen);
  for (int j = start; j <= last_start; ++j) {
    acc.add_in_place(rows[j]);
    combos_rec(rows, w, chosen + 1, j + 1, acc, best);
    acc.add_in_place(rows[j]);
    combos_rec(rows, w, chosen + 1, j + 1, acc, best);
    acc.add_in_place(rows[j]);
  }
}

// Enumerates combinations of exactly `w` rows with the first coefficient 1
// and the rest in {1, 2}, starting from the fixed first row j0.
void enumerate_from(const std::vector<Gf3Vector>& rows, int w, int j0,
                    RoundBest& best) {
  Gf3Vector acc = rows[j0];
  if (w == 1) {
    consider(best, acc.weight(), acc);
    return;
  }
  combos_rec(rows, w, 1, j0 + 1, acc, best);
}

u64 binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  u64 out = 1;
  for (int i = 1; i <= r; ++i) {
    const u64 next = out * (n - r + i) / i;
    if (next < out) return ~u64{0};  // saturate on overflow
    out = next;
  }
  return out;
}

}  // namespace

MinWeightResult min_weight_bz(const TernaryCode& c,
                              const MinWeightOptions& options) {
  const int k = c.dimension();
  const int n = c.length();
  if (k == 0)
    throw std::invalid_argument("min_weight_bz: code has no nonzero words");

  std::vector<InfoSet> sets;
  std::vector<char> covered(n, 0);
  int covered_count = 0;
  while (covered_count < n) {
    std::vector<int> col_order;
    col_order.reserve(n);
    for (int j = 0; j < n; ++j)
      if (!covered[j]) col_order.push_back(j);
    for (int j = 0; j < n; ++j)
      if (covered[j]) col_order.push_back(j);
    InfoSet set;
    set.rows = c.generator().rows();
    std::vector<int> pivots;
    eliminate(set.rows, col_order, pivots);
    for (int col : pivots)
      if (!covered[col]) {
        covered[col] = 1;
        ++covered_count;
        ++set.fresh_rank;
      }
    if (set.fresh_rank == 0) break;  // remaining columns are identically zero
    sets.push_back(std::move(set));
  }

  MinWeightResult result;
  RoundBest best{n + 1, Gf3Vector(n)};
  for (int i = 0; i < c.generator().nrows(); ++i) {
    const Gf3Vector& row = c.generator().row(i);
    consider(best, row.weight(), row);
  }

  const int num_sets = static_cast<int>(sets.size());
  std::vector<int> done_w(num_sets, 0);
  const auto bound_now = [&] {
    int bound = 0;
    for (int i = 0; i < num_sets; ++i)
      bound += std::max(0, done_w[i] + 1 - (k - sets[i].fresh_rank));
    return bound;
  };

  result.lower_bound = bound_now();
  for (int w = 1; w <= k && result.lower_bound < best.weight; ++w) {
    for (int i = 0; i < num_sets; ++i) {
      const u64 combos = binomial(k, w);
      const int shift = std::min(63, w - 1);
      const u64 round_size = combos > (~u64{0} >> shift)
                                 ? ~u64{0}
                                 : combos << shift;
      const bool over_budget =
          round_size > options.message_budget ||
          result.enumerated > options.message_budget - round_size;
      if (over_budget) {
        w = k;  // stop after this sweep; the bound stays as proven
        break;
      }

      const int first_range = k - w + 1;
      std::vector<RoundBest> per_first(first_range,
                                       RoundBest{best.weight, best.word});
      run_jobs(first_range, options.threads, [&](u64 j0) {
        enumerate_from(sets[i].rows, w, static_cast<int>(j0), per_first[j0]);
      });
      for (const RoundBest& rb : per_first) consider(best, rb.weight, rb.word);
      result.enumerated += round_size;
      done_w[i] = w;
      result.lower_bound = bound_now();
      if (result.lower_bound >= best.weight) break;
    }
  }

  result.weight = best.weight;
  result.witness = best.word;
  result.exact = result.lower_bound >= result.weight;
  if (result.exact) result.lower_bound = result.weight;
  return result;
}

}  // namespace sdh

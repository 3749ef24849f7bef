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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sdh/equivalence.hpp"

// Monomial equivalence of sign matrices is decided on a derived graph with
// four vertices per matrix line: row i signed +, row i signed -, column j
// signed +, column j signed -.  Edge color 1 records entries (an entry +1
// joins like-signed row and column vertices, -1 joins unlike-signed ones),
// edge color 2 joins each vertex to its negated twin.  Color-preserving
// graph automorphisms that keep the row and column sectors correspond one
// to one with pairs (P, Q) satisfying P*H*Q = H, and a canonical labeling
// of the graph yields a canonical matrix for the equivalence class.

namespace sdh {
namespace {

constexpr u64 kInvariantSeed = 0x51f0a3c96d82b474ull;

inline u64 mix(u64 h, u64 v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

struct ColoredGraph {
  int nv = 0;
  int wpr = 0;
  std::vector<u64> adj1;
  std::vector<u64> adj2;
  // Pairwise line invariants, indexed by line (rows 0..n-1, columns
  // n..2n-1).  Entries for mixed row and column pairs stay zero.
  int n_lines = 0;
  std::vector<u64> pair_inv;

  void init(int vertices) {
    nv = vertices;
    wpr = (vertices + 63) / 64;
    adj1.assign(static_cast<size_t>(nv) * wpr, 0);
    adj2.assign(static_cast<size_t>(nv) * wpr, 0);
    n_lines = vertices / 2;
    pair_inv.assign(static_cast<size_t>(n_lines) * n_lines, 0);
  }
  const u64* row1(int v) const { return &adj1[static_cast<size_t>(v) * wpr]; }
  const u64* row2(int v) const { return &adj2[static_cast<size_t>(v) * wpr]; }
  void set_edge(std::vector<u64>& adj, int a, int b) {
    adj[static_cast<size_t>(a) * wpr + (b >> 6)] |= u64{1} << (b & 63);
    adj[static_cast<size_t>(b) * wpr + (a >> 6)] |= u64{1} << (a & 63);
  }
  bool get1(int a, int b) const {
    return (adj1[static_cast<size_t>(a) * wpr + (b >> 6)] >> (b & 63)) & 1;
  }
  bool get2(int a, int b) const {
    return (adj2[static_cast<size_t>(a) * wpr + (b >> 6)] >> (b & 63)) & 1;
  }
  // Both signed copies of a row or column map to the same line.
  int line_of(int v) const {
    const int n = nv / 4;
    return (v < 2 * n ? 0 : n) + v % n;
  }
  u64 pinv(int la, int lb) const {
    return pair_inv[static_cast<size_t>(la) * n_lines + lb];
  }
};

// Histograms of the correlation values |n - 2 w| for each pair of lines
// over the 4-subsets containing the pair, hashed into g->pair_inv.  Line
// negations complement an even number of the four projections, so the
// values are negation-invariant, and line permutations carry the pair
// table along, so the entries are functions of the unordered line pair
// that match across equivalent matrices.
void fill_pair_invariants(const SignMatrix& h, bool columns, int line_base,
                          ColoredGraph* g) {
  const int n = h.order();
  const int words = (n + 63) / 64;
  std::vector<u64> lines(static_cast<size_t>(n) * words, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int v = columns ? h.get(j, i) : h.get(i, j);
      if (v > 0) {
        lines[static_cast<size_t>(i) * words + (j >> 6)] |= u64{1} << (j & 63);
      }
    }
  }
  const auto line = [&lines, words](int i) {
    return &lines[static_cast<size_t>(i) * words];
  };
  std::vector<uint32_t> hist(static_cast<size_t>(n) * n * (n + 1), 0);
  const auto bump = [&hist, n](int a, int b, int value) {
    ++hist[(static_cast<size_t>(a) * n + b) * (n + 1) + value];
  };
  std::vector<u64> xab(words), xabc(words);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int w = 0; w < words; ++w) xab[w] = line(a)[w] ^ line(b)[w];
      for (int c = b + 1; c < n; ++c) {
        for (int w = 0; w < words; ++w) xabc[w] = xab[w] ^ line(c)[w];
        for (int d = c + 1; d < n; ++d) {
          int wt = 0;
          for (int w = 0; w < words; ++w) {
            wt += std::popcount(xabc[w] ^ line(d)[w]);
          }
          const int value = wt * 2 > n ? wt * 2 - n : n - wt * 2;
          bump(a, b, value);
          bump(a, c, value);
          bump(a, d, value);
          bump(b, c, value);
          bump(b, d, value);
          bump(c, d, value);
        }
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      u64 acc = mix(kInvariantSeed, static_cast<u64>(n));
      const uint32_t* row = &hist[(static_cast<size_t>(a) * n + b) * (n + 1)];
      for (int v = 0; v <= n; ++v) {
        if (row[v] != 0) {
          acc = mix(mix(acc, static_cast<u64>(v)), row[v]);
        }
      }
      const size_t la = static_cast<size_t>(line_base) + a;
      const size_t lb = static_cast<size_t>(line_base) + b;
      g->pair_inv[la * g->n_lines + lb] = acc;
      g->pair_inv[lb * g->n_lines + la] = acc;
    }
  }
}

// Vertex numbering: row i signed + is i, signed - is n+i; column j signed +
// is 2n+j, signed - is 3n+j.
ColoredGraph build_graph(const SignMatrix& h) {
  const int n = h.order();
  ColoredGraph g;
  g.init(4 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (h.get(i, j) > 0) {
        g.set_edge(g.adj1, i, 2 * n + j);
        g.set_edge(g.adj1, n + i, 3 * n + j);
      } else {
        g.set_edge(g.adj1, i, 3 * n + j);
        g.set_edge(g.adj1, n + i, 2 * n + j);
      }
    }
    g.set_edge(g.adj2, i, n + i);
    g.set_edge(g.adj2, 2 * n + i, 3 * n + i);
  }
  fill_pair_invariants(h, false, 0, &g);
  fill_pair_invariants(h, true, n, &g);
  return g;
}

// Per-line histograms of the correlation values |n - 2 w| over all
// 4-subsets of lines, where w is the weight of the XOR of the four binary
// projections.  Negating a line complements the XOR and permuting lines
// permutes the histograms, so grouping lines by histogram refines the
// starting partition without cutting across equivalence.  Set `columns`
// to profile the columns instead of the rows.
std::vector<u64> quad_profile_hashes(const SignMatrix& h, bool columns) {
  const int n = h.order();
  const int words = (n + 63) / 64;
  std::vector<u64> lines(static_cast<size_t>(n) * words, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int v = columns ? h.get(j, i) : h.get(i, j);
      if (v > 0) lines[static_cast<size_t>(i) * words + (j >> 6)] |= u64{1} << (j & 63);
    }
  }
  const auto line = [&lines, words](int i) {
    return &lines[static_cast<size_t>(i) * words];
  };
  std::vector<std::vector<u64>> hist(n, std::vector<u64>(n + 1, 0));
  std::vector<u64> xab(words), xabc(words);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int w = 0; w < words; ++w) xab[w] = line(a)[w] ^ line(b)[w];
      for (int c = b + 1; c < n; ++c) {
        for (int w = 0; w < words; ++w) xabc[w] = xab[w] ^ line(c)[w];
        for (int d = c + 1; d < n; ++d) {
          int wt = 0;
          for (int w = 0; w < words; ++w) {
            wt += std::popcount(xabc[w] ^ line(d)[w]);
          }
          const int value = wt * 2 > n ? wt * 2 - n : n - wt * 2;
          ++hist[a][value];
          ++hist[b][value];
          ++hist[c][value];
          ++hist[d][value];
        }
      }
    }
  }
  std::vector<u64> out(n);
  for (int i = 0; i < n; ++i) {
    u64 acc = mix(kInvariantSeed, static_cast<u64>(n));
    for (int v = 0; v <= n; ++v) {
      if (hist[i][v] != 0) {
        acc = mix(mix(acc, static_cast<u64>(v)), hist[i][v]);
      }
    }
    out[i] = acc;
  }
  return out;
}

// Ordered partition of the vertices.  elems lists vertices cell by cell,
// pos inverts it, cell_start maps a position to the start of its cell and
// cell_len is valid at start positions.
struct Partition {
  std::vector<int> elems;
  std::vector<int> pos;
  std::vector<int> cell_start;
  std::vector<int> cell_len;
  int non_singleton = 0;

  void init_cells(int nv, const std::vector<std::vector<int>>& cells) {
    elems.resize(nv);
    pos.resize(nv);
    cell_start.resize(nv);
    cell_len.assign(nv, 0);
    non_singleton = 0;
    int at = 0;
    for (const std::vector<int>& cell : cells) {
      const int start = at;
      for (const int v : cell) {
        elems[at] = v;
        pos[v] = at;
        cell_start[at] = start;
        ++at;
      }
      cell_len[start] = static_cast<int>(cell.size());
      if (cell.size() > 1) ++non_singleton;
    }
    if (at != nv) {
      throw std::logic_error("init_cells: cells do not cover the vertices");
    }
  }
};

// A splitter is the cell's bitmask plus, for singleton cells, the line of
// the singled vertex (-1 otherwise), so refinement can key other cells by
// the pairwise line invariants against that line.
struct Splitter {
  std::vector<u64> mask;
  int line = -1;
};

Splitter cell_snapshot(const Partition& p, int start, int len,
                       const ColoredGraph& g) {
  Splitter out;
  out.mask.assign(g.wpr, 0);
  for (int t = start; t < start + len; ++t) {
    const int v = p.elems[t];
    out.mask[v >> 6] |= u64{1} << (v & 63);
  }
  if (len == 1) {
    out.line = g.line_of(p.elems[start]);
  }
  return out;
}

// Splits cells until they are equitable with respect to every splitter in
// the queue, pushing new subcells as further splitters.  Returns the
// invariant hash extended with the split trace, which depends only on the
// isomorphism type of the partitioned graph.
//
// new_singles carries the positions that became singleton cells before the
// call (from an individualization) and collects the ones created here.  At
// the end the hash absorbs the adjacency bits between each new singleton
// and every singleton settled before it.  Along a root-to-leaf path this
// spells out the relabeled graph restricted to the singled vertices, so
// branches whose partially built canonical matrices differ get divergent
// traces and are cut without descending further.  Positions are cell
// offsets, which match across isomorphic search paths, and the pair order
// is fixed, so the addition stays a label-invariant node function.
u64 refine(const ColoredGraph& g, Partition& p, std::deque<Splitter>* queue,
           u64 hash, std::vector<int>* new_singles) {
  const int nv = g.nv;
  const int wpr = g.wpr;
  const int n = nv / 4;
  std::vector<u64> key(nv, 0);

  // Sorts one cell by key and splits it at key boundaries, extending the
  // trace hash with the split shape and key values.  Returns true when the
  // cell actually split.
  const auto split_sorted_cell = [&](int s, int len, u64 tag) {
    std::stable_sort(p.elems.begin() + s, p.elems.begin() + s + len,
                     [&key](int a, int b) { return key[a] < key[b]; });
    int distinct = 1;
    for (int t = s + 1; t < s + len; ++t) {
      distinct += key[p.elems[t]] != key[p.elems[t - 1]] ? 1 : 0;
    }
    if (distinct == 1) {
      return false;
    }
    hash = mix(hash, tag);
    hash = mix(hash, static_cast<u64>(s));
    --p.non_singleton;
    int t = s;
    while (t < s + len) {
      int e = t + 1;
      while (e < s + len && key[p.elems[e]] == key[p.elems[t]]) {
        ++e;
      }
      const int sublen = e - t;
      hash = mix(hash, static_cast<u64>(sublen));
      hash = mix(hash, key[p.elems[t]]);
      for (int q = t; q < e; ++q) {
        p.pos[p.elems[q]] = q;
        p.cell_start[q] = t;
      }
      p.cell_len[t] = sublen;
      if (sublen > 1) {
        ++p.non_singleton;
      } else {
        new_singles->push_back(t);
      }
      queue->push_back(cell_snapshot(p, t, sublen, g));
      t = e;
    }
    return true;
  };

  // Fallback for cells the adjacency counts cannot break: key each member
  // by its absolute 4-line correlations with ordered triples of already
  // singled lines of the same sector.  The XOR of four binary projections
  // is complemented an even number of times under any line negations, so
  // the absolute correlation is negation-invariant, and the anchors are
  // taken in cell-position order, which matches across isomorphic search
  // paths.  The keys therefore extend the trace exactly like adjacency
  // counts do, they just see four lines at a time instead of two.
  const auto correlation_round = [&]() {
    constexpr int kMaxAnchors = 6;
    std::array<std::vector<const u64*>, 2> anchors;
    for (int s = 0; s < nv; s += p.cell_len[s]) {
      if (p.cell_len[s] != 1) {
        continue;
      }
      const int v = p.elems[s];
      const int sector = v < 2 * n ? 0 : 1;
      if (static_cast<int>(anchors[sector].size()) < kMaxAnchors) {
        anchors[sector].push_back(g.row1(v));
      }
    }
    std::array<std::vector<u64>, 2> sector_mask;
    sector_mask[0].assign(wpr, 0);
    sector_mask[1].assign(wpr, 0);
    for (int j = 0; j < n; ++j) {
      sector_mask[0][(2 * n + j) >> 6] |= u64{1} << ((2 * n + j) & 63);
      sector_mask[1][j >> 6] |= u64{1} << (j & 63);
    }
    bool any = false;
    int s = 0;
    while (s < nv) {
      const int len = p.cell_len[s];
      if (len == 1) {
        ++s;
        continue;
      }
      const int sector = p.elems[s] < 2 * n ? 0 : 1;
      const std::vector<const u64*>& anc = anchors[sector];
      if (anc.size() < 3) {
        s += len;
        continue;
      }
      const u64* mask = sector_mask[sector].data();
      for (int t = s; t < s + len; ++t) {
        const int v = p.elems[t];
        const u64* rv = g.row1(v);
        u64 acc = mix(kInvariantSeed, static_cast<u64>(len));
        for (size_t i = 0; i < anc.size(); ++i) {
          for (size_t j = i + 1; j < anc.size(); ++j) {
            for (size_t k = j + 1; k < anc.size(); ++k) {
              int wt = 0;
              for (int w = 0; w < wpr; ++w) {
                wt += std::popcount(
                    (rv[w] ^ anc[i][w] ^ anc[j][w] ^ anc[k][w]) & mask[w]);
              }
              acc = mix(acc, static_cast<u64>(wt * 2 > n ? wt * 2 - n
                                                         : n - wt * 2));
            }
          }
        }
        key[v] = acc;
      }
      const int next = s + len;
      const bool split = split_sorted_cell(s, len, 0xd2f);
      any = any || split;
      s = next;
    }
    return any;
  };

  for (;;) {
    while (!queue->empty() && p.non_singleton > 0) {
      const Splitter spl = std::move(queue->front());
      queue->pop_front();
      const u64* mask = spl.mask.data();
      int s = 0;
      while (s < nv) {
        const int len = p.cell_len[s];
        if (len == 1) {
          ++s;
          continue;
        }
        for (int t = s; t < s + len; ++t) {
          const int v = p.elems[t];
          const u64* r1 = g.row1(v);
          const u64* r2 = g.row2(v);
          int c1 = 0;
          int c2 = 0;
          for (int w = 0; w < wpr; ++w) {
            c1 += std::popcount(r1[w] & mask[w]);
            c2 += std::popcount(r2[w] & mask[w]);
          }
          u64 kv = static_cast<u64>(c1) * (nv + 1) + c2;
          if (spl.line >= 0) {
            kv = mix(kv, g.pinv(g.line_of(v), spl.line));
          }
          key[v] = kv;
        }
        const int next = s + len;
        split_sorted_cell(s, len, 0x5b1);
        s = next;
      }
    }
    if (p.non_singleton == 0 || !correlation_round()) {
      break;
    }
  }
  queue->clear();
  hash = mix(hash, 0x7e5);
  for (int s = 0; s < nv; s += p.cell_len[s]) {
    hash = mix(hash, static_cast<u64>(p.cell_len[s]));
  }
  if (!new_singles->empty()) {
    std::sort(new_singles->begin(), new_singles->end());
    std::vector<char> is_new(nv, 0);
    for (const int s : *new_singles) {
      is_new[s] = 1;
    }
    std::vector<int> singles;
    for (int s = 0; s < nv; s += p.cell_len[s]) {
      if (p.cell_len[s] == 1) {
        singles.push_back(s);
      }
    }
    for (const int sx : *new_singles) {
      const int vx = p.elems[sx];
      for (const int sy : singles) {
        if (sy == sx || (is_new[sy] && sy > sx)) {
          continue;
        }
        const int vy = p.elems[sy];
        const u64 code = (static_cast<u64>(sx) << 34) |
                         (static_cast<u64>(sy) << 4) |
                         (g.get1(vx, vy) ? 2u : 0u) | (g.get2(vx, vy) ? 1u : 0u);
        hash = mix(hash, code);
      }
    }
  }
  return hash;
}

// Singles out vertex v in its cell and re-refines.  The hash additions use
// the cell start position, which is the same for every candidate drawn
// from one cell, so competing branches stay comparable.
u64 individualize_refine(const ColoredGraph& g, Partition& p, int v,
                         u64 hash) {
  const int pv = p.pos[v];
  const int s = p.cell_start[pv];
  const int len = p.cell_len[s];
  if (len < 2) {
    throw std::logic_error("individualize: cell already singleton");
  }
  const int u = p.elems[s];
  p.elems[s] = v;
  p.elems[pv] = u;
  p.pos[v] = s;
  p.pos[u] = pv;
  p.cell_len[s] = 1;
  p.cell_start[s] = s;
  p.cell_len[s + 1] = len - 1;
  for (int t = s + 1; t < s + len; ++t) {
    p.cell_start[t] = s + 1;
  }
  --p.non_singleton;
  if (len - 1 > 1) {
    ++p.non_singleton;
  }
  hash = mix(hash, 0xa17);
  hash = mix(hash, static_cast<u64>(s));
  std::deque<Splitter> queue;
  queue.push_back(cell_snapshot(p, s, 1, g));
  queue.push_back(cell_snapshot(p, s + 1, len - 1, g));
  std::vector<int> new_singles;
  new_singles.push_back(s);
  if (len - 1 == 1) {
    new_singles.push_back(s + 1);
  }
  return refine(g, p, &queue, hash, &new_singles);
}

// Start position of the first smallest non-singleton cell, or -1 when the
// partition is discrete.
int select_target(const Partition& p, int nv) {
  int best = -1;
  int best_len = nv + 1;
  for (int s = 0; s < nv; s += p.cell_len[s]) {
    const int len = p.cell_len[s];
    if (len > 1 && len < best_len) {
      best_len = len;
      best = s;
    }
  }
  return best;
}

// Adjacency of both colors relabeled so that the vertex at position a gets
// label a.  Two leaves with equal certificates differ by an automorphism.
std::vector<u64> leaf_certificate(const ColoredGraph& g, const Partition& p) {
  const int nv = g.nv;
  const int wpr = g.wpr;
  std::vector<u64> cert(2 * static_cast<size_t>(nv) * wpr, 0);
  for (int a = 0; a < nv; ++a) {
    const int v = p.elems[a];
    u64* c1 = &cert[static_cast<size_t>(a) * wpr];
    u64* c2 = &cert[static_cast<size_t>(nv + a) * wpr];
    for (int w = 0; w < wpr; ++w) {
      u64 bits = g.row1(v)[w];
      while (bits != 0) {
        const int b = p.pos[w * 64 + std::countr_zero(bits)];
        bits &= bits - 1;
        c1[b >> 6] |= u64{1} << (b & 63);
      }
      bits = g.row2(v)[w];
      while (bits != 0) {
        const int b = p.pos[w * 64 + std::countr_zero(bits)];
        bits &= bits - 1;
        c2[b >> 6] |= u64{1} << (b & 63);
      }
    }
  }
  return cert;
}

void verify_automorphism(const ColoredGraph& g, const std::vector<int>& gamma) {
  const int nv = g.nv;
  std::vector<char> seen(nv, 0);
  for (int v = 0; v < nv; ++v) {
    if (gamma[v] < 0 || gamma[v] >= nv || seen[gamma[v]]) {
      throw std::runtime_error("discovered vertex map is not a permutation");
    }
    seen[gamma[v]] = 1;
  }
  for (int v = 0; v < nv; ++v) {
    for (int w = 0; w < g.wpr; ++w) {
      u64 bits = g.row1(v)[w];
      while (bits != 0) {
        const int u = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (!g.get1(gamma[v], gamma[u])) {
          throw std::runtime_error("discovered vertex map is not an automorphism");
        }
      }
      bits = g.row2(v)[w];
      while (bits != 0) {
        const int u = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (!g.get2(gamma[v], gamma[u])) {
          throw std::runtime_error("discovered vertex map is not an automorphism");
        }
      }
    }
  }
}

std::vector<int> perm_compose(const std::vector<int>& a,
                              const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (size_t x = 0; x < a.size(); ++x) {
    c[x] = a[b[x]];
  }
  return c;
}

std::vector<int> perm_inverse(const std::vector<int>& a) {
  std::vector<int> inv(a.size());
  for (size_t x = 0; x < a.size(); ++x) {
    inv[a[x]] = static_cast<int>(x);
  }
  return inv;
}

bool perm_is_identity(const std::vector<int>& a) {
  for (size_t x = 0; x < a.size(); ++x) {
    if (a[x] != static_cast<int>(x)) {
      return false;
    }
  }
  return true;
}

// Order of the permutation group generated by gens, by orbit sizes along a
// stabilizer chain with Schreier generators.
u64 schreier_group_order(std::vector<std::vector<int>> gens, int degree) {
  u64 order = 1;
  while (true) {
    gens.erase(std::remove_if(gens.begin(), gens.end(), perm_is_identity),
               gens.end());
    if (gens.empty()) {
      return order;
    }
    int base = -1;
    for (int v = 0; v < degree && base < 0; ++v) {
      for (const std::vector<int>& g : gens) {
        if (g[v] != v) {
          base = v;
          break;
        }
      }
    }
    std::vector<int> orbit;
    std::vector<std::vector<int>> transversal(degree);
    std::vector<char> in_orbit(degree, 0);
    orbit.push_back(base);
    in_orbit[base] = 1;
    std::vector<int> ident(degree);
    for (int v = 0; v < degree; ++v) {
      ident[v] = v;
    }
    transversal[base] = ident;
    for (size_t head = 0; head < orbit.size(); ++head) {
      const int x = orbit[head];
      for (const std::vector<int>& g : gens) {
        const int y = g[x];
        if (!in_orbit[y]) {
          in_orbit[y] = 1;
          orbit.push_back(y);
          transversal[y] = perm_compose(g, transversal[x]);
        }
      }
    }
    std::set<std::vector<int>> stabilizer;
    for (const int x : orbit) {
      for (const std::vector<int>& g : gens) {
        std::vector<int> schreier = perm_compose(
            perm_inverse(transversal[g[x]]), perm_compose(g, transversal[x]));
        if (!perm_is_identity(schreier)) {
          stabilizer.insert(std::move(schreier));
        }
      }
    }
    const u64 orbit_size = orbit.size();
    if (order > ~u64{0} / orbit_size) {
      throw std::runtime_error("automorphism group order overflows 64 bits");
    }
    order *= orbit_size;
    gens.assign(stabilizer.begin(), stabilizer.end());
  }
}

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    for (int v = 0; v < n; ++v) {
      parent[v] = v;
    }
  }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
    }
  }
};

// True when v lies in the orbit of an already explored sibling under the
// subgroup generated by the discovered automorphisms that fix the current
// path pointwise.  Skipping such v is safe: its subtree repeats an
// explored one up to automorphism.
bool orbit_pruned(int v, const std::vector<int>& tried,
                  const std::vector<std::vector<int>>& gens,
                  const std::vector<int>& prefix, int nv) {
  if (tried.empty() || gens.empty()) {
    return false;
  }
  UnionFind uf(nv);
  for (const std::vector<int>& g : gens) {
    bool fixes = true;
    for (const int p : prefix) {
      fixes = fixes && g[p] == p;
    }
    if (!fixes) {
      continue;
    }
    for (int x = 0; x < nv; ++x) {
      uf.unite(x, g[x]);
    }
  }
  for (const int w : tried) {
    if (uf.find(v) == uf.find(w)) {
      return true;
    }
  }
  return false;
}

struct Searcher {
  const ColoredGraph* g = nullptr;
  int nv = 0;

  std::vector<std::vector<int>> gens;
  std::set<std::vector<int>> gen_set;
  std::vector<int> cur_path;

  bool have_first = false;
  std::vector<u64> first_inv;
  std::vector<int> first_path;
  std::vector<u64> first_cert;
  std::vector<int> first_pos;

  bool have_best = false;
  std::vector<u64> cur_inv;
  std::vector<u64> best_inv;
  std::vector<u64> best_cert;
  std::vector<int> best_pos;
  std::vector<int> best_elems;

  void add_generator(std::vector<int> gamma) {
    verify_automorphism(*g, gamma);
    if (gen_set.insert(gamma).second) {
      gens.push_back(std::move(gamma));
    }
  }

  std::vector<int> sorted_cell(const Partition& p, int start) const {
    std::vector<int> cell(p.elems.begin() + start,
                          p.elems.begin() + start + p.cell_len[start]);
    std::sort(cell.begin(), cell.end());
    return cell;
  }

  // First pass: anchor the leftmost leaf and harvest automorphisms from
  // other leaves with an equal certificate.  Subtrees whose invariant
  // diverges from the anchor path cannot contain such leaves.  Returns
  // true when the subtree produced an automorphism; a subtree hanging off
  // the anchor path is abandoned at that point, because its remaining
  // leaves repeat already explored ones up to that automorphism.  Nodes on
  // the anchor path always run their candidate list to the end so that the
  // discovered orbits cover every branch, which is what makes the
  // generator set complete.
  bool pass_a(const Partition& p, u64 inv, int depth, bool on_first) {
    if (!have_first) {
      first_inv.push_back(inv);
    } else if (depth >= static_cast<int>(first_inv.size()) ||
               inv != first_inv[depth]) {
      return false;
    }
    const int target = select_target(p, nv);
    if (target < 0) {
      std::vector<u64> cert = leaf_certificate(*g, p);
      if (!have_first) {
        have_first = true;
        first_cert = std::move(cert);
        first_pos = p.pos;
        return false;
      }
      if (cert == first_cert) {
        std::vector<int> gamma(nv);
        for (int v = 0; v < nv; ++v) {
          gamma[v] = p.elems[first_pos[v]];
        }
        add_generator(std::move(gamma));
        return true;
      }
      return false;
    }
    const std::vector<int> candidates = sorted_cell(p, target);
    std::vector<int> tried;
    bool found = false;
    for (const int v : candidates) {
      if (have_first && orbit_pruned(v, tried, gens, cur_path, nv)) {
        continue;
      }
      tried.push_back(v);
      if (!have_first) {
        first_path.push_back(v);
      }
      Partition child = p;
      const u64 child_inv = individualize_refine(*g, child, v, inv);
      const bool child_on_first = on_first &&
                                  depth < static_cast<int>(first_path.size()) &&
                                  first_path[depth] == v;
      cur_path.push_back(v);
      const bool below = pass_a(child, child_inv, depth + 1, child_on_first);
      cur_path.pop_back();
      found = found || below;
      if (found && !on_first) {
        return true;
      }
    }
    return found;
  }

  int compare_to_best(const std::vector<u64>& cert, bool at_leaf) const {
    const size_t m = std::min(cur_inv.size(), best_inv.size());
    for (size_t t = 0; t < m; ++t) {
      if (cur_inv[t] != best_inv[t]) {
        return cur_inv[t] < best_inv[t] ? -1 : 1;
      }
    }
    if (cur_inv.size() != best_inv.size()) {
      // With an equal shared prefix a shorter path ranks first.  A strict
      // prefix of the best path can still branch either way below, so it
      // only counts as decided at a leaf.
      if (cur_inv.size() > best_inv.size()) {
        return 1;
      }
      return at_leaf ? -1 : 0;
    }
    if (!at_leaf) {
      return 0;
    }
    if (cert < best_cert) {
      return -1;
    }
    if (best_cert < cert) {
      return 1;
    }
    return 0;
  }

  // Second pass: keep the minimum (invariant path, certificate) leaf; ties
  // are automorphisms and feed the same pruning as the first pass.
  void pass_b(const Partition& p, u64 inv, int depth) {
    cur_inv.push_back(inv);
    if (have_best && compare_to_best({}, false) > 0) {
      cur_inv.pop_back();
      return;
    }
    const int target = select_target(p, nv);
    if (target < 0) {
      std::vector<u64> cert = leaf_certificate(*g, p);
      if (!have_best) {
        have_best = true;
        best_inv = cur_inv;
        best_cert = std::move(cert);
        best_pos = p.pos;
        best_elems = p.elems;
      } else {
        const int cmp = compare_to_best(cert, true);
        if (cmp < 0) {
          best_inv = cur_inv;
          best_cert = std::move(cert);
          best_pos = p.pos;
          best_elems = p.elems;
        } else if (cmp == 0) {
          std::vector<int> gamma(nv);
          for (int v = 0; v < nv; ++v) {
            gamma[v] = p.elems[best_pos[v]];
          }
          add_generator(std::move(gamma));
        }
      }
      cur_inv.pop_back();
      return;
    }
    const std::vector<int> candidates = sorted_cell(p, target);
    std::vector<int> tried;
    for (const int v : candidates) {
      if (orbit_pruned(v, tried, gens, cur_path, nv)) {
        continue;
      }
      tried.push_back(v);
      Partition child = p;
      const u64 child_inv = individualize_refine(*g, child, v, inv);
      cur_path.push_back(v);
      pass_b(child, child_inv, depth + 1);
      cur_path.pop_back();
    }
    cur_inv.pop_back();
  }
};

struct Engine {
  ColoredGraph graph;
  Partition root;
  u64 root_inv = 0;
  Searcher search;
};

void run_engine(const SignMatrix& h, bool want_canonical, Engine* e) {
  e->graph = build_graph(h);
  const int n = h.order();

  // Start from the 4-subset correlation profiles instead of the plain
  // rows/columns split: lines with distinct histograms land in distinct
  // cells, which prunes nearly rigid matrices by orders of magnitude.
  // Each cell keeps a vertex together with its negated twin, the row
  // sector precedes the column sector, and cells within a sector are
  // ordered by hash value, so the starting partition is a label-invariant
  // function of the equivalence class.
  const std::vector<u64> row_hash = quad_profile_hashes(h, false);
  const std::vector<u64> col_hash = quad_profile_hashes(h, true);
  std::vector<std::vector<int>> cells;
  u64 root_hash = mix(kInvariantSeed, static_cast<u64>(e->graph.nv));
  for (const bool columns : {false, true}) {
    const std::vector<u64>& hashes = columns ? col_hash : row_hash;
    std::map<u64, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[hashes[i]].push_back(i);
    for (const auto& [value, members] : groups) {
      std::vector<int> cell;
      cell.reserve(2 * members.size());
      for (const int i : members) cell.push_back(i + (columns ? 2 * n : 0));
      for (const int i : members) cell.push_back(i + (columns ? 3 * n : n));
      root_hash = mix(mix(root_hash, value), members.size());
      cells.push_back(std::move(cell));
    }
  }
  e->root.init_cells(e->graph.nv, cells);

  std::deque<Splitter> queue;
  int at = 0;
  for (const std::vector<int>& cell : cells) {
    queue.push_back(cell_snapshot(e->root, at, static_cast<int>(cell.size()),
                                  e->graph));
    at += static_cast<int>(cell.size());
  }
  std::vector<int> root_singles;
  e->root_inv = refine(e->graph, e->root, &queue, root_hash, &root_singles);
  e->search.g = &e->graph;
  e->search.nv = e->graph.nv;
  e->search.pass_a(e->root, e->root_inv, 0, true);
  if (!e->search.have_first) {
    throw std::logic_error("search tree produced no leaf");
  }
  if (want_canonical) {
    e->search.pass_b(e->root, e->root_inv, 0);
    if (!e->search.have_best) {
      throw std::logic_error("canonical search produced no leaf");
    }
  }
}

CanonicalForm extract_canonical(const std::vector<u64>& cert,
                                const std::vector<int>& elems,
                                const SignMatrix& h) {
  const int n = h.order();
  const int nv = 4 * n;
  const int wpr = (nv + 63) / 64;
  const auto cert_bit = [&cert, nv, wpr](int color, int a, int b) {
    const u64* row = &cert[(static_cast<size_t>(color) * nv + a) * wpr];
    return ((row[b >> 6] >> (b & 63)) & 1) != 0;
  };
  std::vector<int> partner(nv, -1);
  for (int a = 0; a < nv; ++a) {
    const u64* row = &cert[(static_cast<size_t>(nv) + a) * wpr];
    for (int w = 0; w < wpr && partner[a] < 0; ++w) {
      if (row[w] != 0) {
        partner[a] = w * 64 + std::countr_zero(row[w]);
      }
    }
    if (partner[a] < 0) {
      throw std::runtime_error("canonical leaf lost an antipodal edge");
    }
  }
  const auto plus_labels = [&partner](int lo, int hi) {
    std::vector<int> plus;
    std::vector<char> seen(hi, 0);
    for (int a = lo; a < hi; ++a) {
      if (seen[a]) {
        continue;
      }
      const int b = partner[a];
      if (b <= a || b < lo || b >= hi) {
        throw std::runtime_error("canonical leaf has a bad antipodal matching");
      }
      seen[a] = 1;
      seen[b] = 1;
      plus.push_back(a);
    }
    return plus;
  };
  const std::vector<int> plus_row = plus_labels(0, 2 * n);
  const std::vector<int> plus_col = plus_labels(2 * n, 4 * n);

  SignMatrix k(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      k.set(r, c, cert_bit(0, plus_row[r], plus_col[c]) ? 1 : -1);
    }
  }

  MonomialPair to_canonical = MonomialPair::identity(n);
  for (int r = 0; r < n; ++r) {
    const int v = elems[plus_row[r]];
    if (v < n) {
      to_canonical.row.perm[r] = v;
      to_canonical.row.sign[r] = 1;
    } else if (v < 2 * n) {
      to_canonical.row.perm[r] = v - n;
      to_canonical.row.sign[r] = -1;
    } else {
      throw std::runtime_error("canonical leaf mixed row and column sectors");
    }
  }
  for (int c = 0; c < n; ++c) {
    const int v = elems[plus_col[c]];
    if (v >= 2 * n && v < 3 * n) {
      to_canonical.col.perm[c] = v - 2 * n;
      to_canonical.col.sign[c] = 1;
    } else if (v >= 3 * n && v < nv) {
      to_canonical.col.perm[c] = v - 3 * n;
      to_canonical.col.sign[c] = -1;
    } else {
      throw std::runtime_error("canonical leaf mixed row and column sectors");
    }
  }
  if (!(apply_monomial(to_canonical, h) == k)) {
    throw std::runtime_error("canonical form failed its monomial verification");
  }
  return CanonicalForm{std::move(k), std::move(to_canonical)};
}

}  // namespace

CanonicalForm canonical_form(const HadamardMatrix& h) {
  Engine e;
  run_engine(h.matrix(), true, &e);
  return extract_canonical(e.search.best_cert, e.search.best_elems,
                           h.matrix());
}

EquivalenceResult are_equivalent(const HadamardMatrix& h1,
                                 const HadamardMatrix& h2) {
  if (h1.order() != h2.order()) {
    throw std::invalid_argument("are_equivalent: order mismatch");
  }
  // Mismatched line profile multisets settle the question without the
  // canonical labeling pass.
  for (const bool columns : {false, true}) {
    std::vector<u64> p1 = quad_profile_hashes(h1.matrix(), columns);
    std::vector<u64> p2 = quad_profile_hashes(h2.matrix(), columns);
    std::sort(p1.begin(), p1.end());
    std::sort(p2.begin(), p2.end());
    if (p1 != p2) {
      return {};
    }
  }
  const CanonicalForm c1 = canonical_form(h1);
  const CanonicalForm c2 = canonical_form(h2);
  EquivalenceResult out;
  if (!(c1.matrix == c2.matrix)) {
    return out;
  }
  out.equivalent = true;
  out.witness = compose(c2.to_canonical.inverse(), c1.to_canonical);
  if (!(apply_monomial(out.witness, h1.matrix()) == h2.matrix())) {
    throw std::runtime_error("equivalence witness failed verification");
  }
  return out;
}

AutomorphismInfo automorphism_group_order(const HadamardMatrix& h) {
  Engine e;
  run_engine(h.matrix(), false, &e);
  AutomorphismInfo info;
  info.order = schreier_group_order(e.search.gens, e.graph.nv);
  info.generator_count = e.search.gens.size();
  info.convention =
      "pairs (P, Q) of signed permutation matrices with P*H*Q = H; "
      "the central pair (-I, -I) is an element, so the order is twice "
      "the count taken modulo simultaneous negation";
  return info;
}

}  // namespace sdh

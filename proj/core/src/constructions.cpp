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

#include "sdh/constructions.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sdh {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int quadratic_character(int p, long long x) {
  if (!is_prime(p)) throw std::invalid_argument("quadratic_character: p not prime");
  const long long r = ((x % p) + p) % p;
  if (r == 0) return 0;
  // Euler criterion by repeated squaring.
  long long result = 1;
  long long base = r;
  long long e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

NvParameters NvParameters::make(int p, int a) {
  if (!is_prime(p) || p % 8 != 5)
    throw std::invalid_argument("NvParameters: p must be a prime = 5 mod 8");
  if (a != 1 && a != -1)
    throw std::invalid_argument("NvParameters: a must be +1 or -1");
  return NvParameters{p, a, p % 24};
}

std::pair<IntMatrix, IntMatrix> build_rx_ry(int p) {
  if (!is_prime(p) || p % 8 != 5)
    throw std::invalid_argument("build_rx_ry: p must be a prime = 5 mod 8");
  // One square root per nonzero square; chi of either root is the same
  // because -1 is a square for p = 1 mod 4.  Assert that once.
  std::vector<int> root(p, 0);
  for (int c = 1; c <= (p - 1) / 2; ++c) {
    const int r = static_cast<int>(static_cast<long long>(c) * c % p);
    if (root[r] == 0) root[r] = c;
  }
  for (int c = 1; c < p; ++c) {
    const int r = static_cast<int>(static_cast<long long>(c) * c % p);
    if (quadratic_character(p, root[r]) != quadratic_character(p, c))
      throw std::runtime_error("build_rx_ry: square-root character not well defined");
  }

  IntMatrix rx(p, p);
  IntMatrix ry(p, p);
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      if (a == b) continue;
      const int d = ((b - a) % p + p) % p;
      if (root[d] != 0) rx.at(a, b) = quadratic_character(p, root[d]);
      const int d2 = static_cast<int>(2LL * d % p);
      if (root[d2] != 0) ry.at(a, b) = quadratic_character(p, root[d2]);
    }
  }
  return {rx, ry};
}

NvBlocks build_blocks(int p) {
  auto [rx, ry] = build_rx_ry(p);
  const int n = p + 1;
  IntMatrix x(n, n);
  IntMatrix y(n, n);
  for (int j = 1; j < n; ++j) {
    x.at(0, j) = 1;
    x.at(j, 0) = -1;
  }
  x.set_block(1, 1, rx);
  y.set_block(1, 1, ry);

  IntMatrix bw(2 * n, 2 * n);
  bw.set_block(0, 0, x);
  bw.set_block(0, n, y);
  bw.set_block(n, 0, -y.transpose());
  bw.set_block(n, n, x.transpose());

  IntMatrix bew(2 * n, 2 * n);
  bew.set_block(0, 0, -y.transpose());
  bew.set_block(0, n, x.transpose());
  bew.set_block(n, 0, -x);
  bew.set_block(n, n, -y);

  if (!(x.transpose() == -x)) throw std::runtime_error("build_blocks: X^T != -X");
  if (!(y.transpose() == -y)) throw std::runtime_error("build_blocks: Y^T != -Y");
  if (!(x * y == y * x)) throw std::runtime_error("build_blocks: XY != YX");
  if (!((x * x + y * y) == IntMatrix::identity(n).scaled(-p)))
    throw std::runtime_error("build_blocks: X^2 + Y^2 != -pI");

  NvBlocks blocks;
  blocks.p = p;
  blocks.rx = std::move(rx);
  blocks.ry = std::move(ry);
  blocks.x = std::move(x);
  blocks.y = std::move(y);
  blocks.bw = std::move(bw);
  blocks.bew = std::move(bew);
  return blocks;
}

TernaryCode build_nv_code(const NvParameters& params) {
  const NvBlocks blocks = build_blocks(params.p);
  const int n2 = 2 * (params.p + 1);
  IntMatrix m = IntMatrix::identity(n2).scaled(params.a) + blocks.bw;
  if (params.branch == 13) m = m + blocks.bew;
  TernaryCode code = TernaryCode::from_generator(reduce_mod3(m));
  if (!is_self_dual(code))
    throw std::runtime_error("build_nv_code: result is not self-dual");
  return code;
}

namespace {

// Polynomials over GF(3), coefficients low degree first.

int poly_degree(const std::vector<int>& a) {
  int d = static_cast<int>(a.size()) - 1;
  while (d >= 0 && a[d] % 3 == 0) --d;
  return d;
}

void poly_mod_in_place(std::vector<int>& a, const std::vector<int>& b) {
  const int db = poly_degree(b);
  const int inv = b[db] % 3 == 1 ? 1 : 2;
  for (int i = poly_degree(a); i >= db; --i) {
    const int c = a[i] % 3;
    if (c == 0) continue;
    const int f = c * inv % 3;
    for (int j = 0; j <= db; ++j)
      a[i - db + j] = ((a[i - db + j] - f * b[j]) % 3 + 3) % 3;
  }
  a.resize(db > 0 ? db : 1);
}

std::vector<int> poly_gcd(std::vector<int> a, std::vector<int> b) {
  while (poly_degree(b) >= 0) {
    poly_mod_in_place(a, b);
    std::swap(a, b);
  }
  const int d = poly_degree(a);
  const int inv = a[d] % 3 == 1 ? 1 : 2;
  std::vector<int> out(a.begin(), a.begin() + d + 1);
  for (int& c : out) c = c * inv % 3;
  return out;
}

}  // namespace

TernaryCode build_extended_qr(int p) {
  if (!is_prime(p) || ((p % 12) + 12) % 12 != 11)
    throw std::invalid_argument("build_extended_qr: p must be a prime = -1 mod 12");

  // Candidate list: square indicator E, E+1, E+2, nonsquare indicator E'.
  // The first candidate whose gcd with x^p - 1 cuts a cyclic code of the
  // right dimension wins; the order is fixed so the construction is
  // deterministic.
  std::vector<int> e(p, 0);
  std::vector<int> ep(p, 0);
  for (int x = 1; x < p; ++x) {
    if (quadratic_character(p, x) == 1)
      e[x] = 1;
    else
      ep[x] = 1;
  }
  std::vector<std::vector<int>> candidates;
  candidates.push_back(e);
  for (int c = 1; c <= 2; ++c) {
    std::vector<int> ec = e;
    ec[0] = c;
    candidates.push_back(ec);
  }
  candidates.push_back(ep);

  std::vector<int> xp1(p + 1, 0);
  xp1[0] = 2;  // -1
  xp1[p] = 1;

  for (const auto& theta : candidates) {
    const std::vector<int> g = poly_gcd(xp1, theta);
    const int dg = poly_degree(g);
    if (dg != (p - 1) / 2) continue;
    const int k = p - dg;
    // Cyclic generator rows x^i g(x), extended by the negated digit sum.
    Gf3Matrix gen(k, p + 1);
    for (int i = 0; i < k; ++i) {
      int sum = 0;
      for (int j = 0; j <= dg; ++j) {
        gen.mutable_row(i).set((i + j) % p, g[j]);
        sum += g[j];
      }
      gen.mutable_row(i).set(p, (3 - sum % 3) % 3);
    }
    TernaryCode code = TernaryCode::from_generator(gen);
    if (code.dimension() != (p + 1) / 2)
      throw std::runtime_error("build_extended_qr: unexpected dimension");
    if (!is_self_dual(code))
      throw std::runtime_error("build_extended_qr: result is not self-dual");
    return code;
  }
  throw std::runtime_error("build_extended_qr: no candidate gave the target dimension");
}

IntMatrix pless_conference(int q) {
  if (!is_prime(q))
    throw std::invalid_argument("pless_conference: q must be prime (prime powers unsupported)");
  const int n = q + 1;
  IntMatrix s(n, n);
  // Index 0 is the point at infinity, indices 1..q are 0..q-1.
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      s.at(1 + a, 1 + b) = quadratic_character(q, b - a);
  for (int t = 1; t <= q; ++t) {
    s.at(0, t) = 1;
    s.at(t, 0) = q % 4 == 1 ? 1 : -1;
  }
  if (!(s * s.transpose() == IntMatrix::identity(n).scaled(q)))
    throw std::runtime_error("pless_conference: S S^T != qI");
  return s;
}

TernaryCode build_pless_symmetry(int q) {
  if (((q % 6) + 6) % 6 != 5)
    throw std::invalid_argument("build_pless_symmetry: q must be = -1 mod 6");
  const IntMatrix s = pless_conference(q);
  const int n = q + 1;
  Gf3Matrix gen(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    gen.mutable_row(i).set(i, 1);
    for (int j = 0; j < n; ++j) {
      const int v = static_cast<int>(((s.at(i, j) % 3) + 3) % 3);
      gen.mutable_row(i).set(n + j, v);
    }
  }
  TernaryCode code = TernaryCode::from_generator(gen);
  if (!is_self_dual(code))
    throw std::runtime_error("build_pless_symmetry: result is not self-dual");
  return code;
}

Gf3Matrix negacirculant(const Gf3Vector& first_row) {
  const int n = first_row.length();
  Gf3Matrix m(n, n);
  Gf3Vector row = first_row;
  for (int i = 0; i < n; ++i) {
    m.mutable_row(i) = row;
    Gf3Vector next(n);
    next.set(0, (2 * row.get(n - 1)) % 3);
    for (int j = 1; j < n; ++j) next.set(j, row.get(j - 1));
    row = next;
  }
  return m;
}

TernaryCode build_four_negacirculant(const Gf3Vector& r_a, const Gf3Vector& r_b) {
  const int n = r_a.length();
  if (r_b.length() != n)
    throw std::invalid_argument("build_four_negacirculant: length mismatch");
  const Gf3Matrix a = negacirculant(r_a);
  const Gf3Matrix b = negacirculant(r_b);
  Gf3Matrix gen(2 * n, 4 * n);
  for (int i = 0; i < n; ++i) {
    gen.mutable_row(i).set(i, 1);
    gen.mutable_row(n + i).set(n + i, 1);
    for (int j = 0; j < n; ++j) {
      gen.mutable_row(i).set(2 * n + j, a.row(i).get(j));
      gen.mutable_row(i).set(3 * n + j, b.row(i).get(j));
      // Lower blocks: 2 B^T and A^T.
      gen.mutable_row(n + i).set(2 * n + j, (2 * b.row(j).get(i)) % 3);
      gen.mutable_row(n + i).set(3 * n + j, a.row(j).get(i));
    }
  }
  return TernaryCode::from_generator(gen);
}

std::pair<Gf3Vector, Gf3Vector> negacirculant_pair(int index) {
  static const int kPairs[3][2][15] = {
      {{1, 1, 0, 2, 1, 1, 1, 2, 2, 2, 0, 1, 0, 0, 2},
       {2, 0, 0, 2, 1, 0, 0, 1, 2, 2, 0, 1, 0, 2, 2}},
      {{1, 1, 2, 2, 1, 2, 2, 1, 1, 1, 2, 1, 2, 1, 2},
       {2, 2, 1, 2, 2, 0, 2, 2, 1, 2, 2, 2, 2, 1, 1}},
      {{1, 0, 0, 1, 1, 2, 2, 0, 2, 1, 1, 0, 0, 0, 2},
       {1, 2, 0, 0, 2, 2, 1, 1, 0, 0, 0, 0, 2, 2, 0}},
  };
  if (index < 1 || index > 3)
    throw std::invalid_argument("negacirculant_pair: index must be 1, 2 or 3");
  std::vector<int> ra(kPairs[index - 1][0], kPairs[index - 1][0] + 15);
  std::vector<int> rb(kPairs[index - 1][1], kPairs[index - 1][1] + 15);
  return {Gf3Vector::from_trits(ra), Gf3Vector::from_trits(rb)};
}

}  // namespace sdh

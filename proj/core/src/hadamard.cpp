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

#include "sdh/hadamard.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdh {

std::vector<int> CyclotomicClasses::coset_union(int i, int j) const {
  std::vector<int> out = classes[((i % 4) + 4) % 4];
  const auto& other = classes[((j % 4) + 4) % 4];
  out.insert(out.end(), other.begin(), other.end());
  std::sort(out.begin(), out.end());
  return out;
}

CyclotomicClasses cyclotomic_classes(int p) {
  if (!is_prime(p) || p % 8 != 5)
    throw std::invalid_argument("cyclotomic_classes: p must be a prime = 5 mod 8");

  const auto order_of = [p](int g) {
    int x = g;
    int ord = 1;
    while (x != 1) {
      x = static_cast<int>(static_cast<long long>(x) * g % p);
      ++ord;
    }
    return ord;
  };
  int omega = 0;
  for (int g = 2; g < p; ++g) {
    if (order_of(g) == p - 1) {
      omega = g;
      break;
    }
  }
  if (omega == 0) throw std::runtime_error("cyclotomic_classes: no primitive root");

  CyclotomicClasses cc;
  cc.p = p;
  cc.omega = omega;
  cc.class_of.assign(p, -1);
  int x = 1;
  for (int e = 0; e < p - 1; ++e) {
    const int cls = e % 4;
    cc.classes[cls].push_back(x);
    cc.class_of[x] = cls;
    x = static_cast<int>(static_cast<long long>(x) * omega % p);
  }
  for (auto& cls : cc.classes) std::sort(cls.begin(), cls.end());

  cc.epsilon = cc.class_of[p - 2];  // the class of -2
  if (cc.epsilon != 1 && cc.epsilon != 3)
    throw std::runtime_error("cyclotomic_classes: -2 not in C_1 or C_3");
  if (cc.class_of[p - 1] != 2)
    throw std::runtime_error("cyclotomic_classes: -1 not in C_2");
  return cc;
}

SdsPair SdsPair::make(int v, std::vector<int> d1, std::vector<int> d2) {
  if (v < 1) throw std::invalid_argument("SdsPair: v must be positive");
  if (d1.size() != d2.size())
    throw std::invalid_argument("SdsPair: sets must have equal size");
  SdsPair pair;
  pair.v = v;
  pair.k = static_cast<int>(d1.size());
  const long long total = 2LL * pair.k * (pair.k - 1);
  pair.lambda = (v > 1 && total % (v - 1) == 0)
                    ? static_cast<int>(total / (v - 1))
                    : -1;
  pair.d1 = std::move(d1);
  pair.d2 = std::move(d2);
  return pair;
}

bool is_sds(const SdsPair& pair) {
  const int v = pair.v;
  if (v < 2 || pair.lambda < 1) return false;
  if (static_cast<int>(pair.d1.size()) != pair.k ||
      static_cast<int>(pair.d2.size()) != pair.k)
    return false;
  std::vector<long long> count(v, 0);
  for (const auto* d : {&pair.d1, &pair.d2}) {
    std::vector<char> seen(v, 0);
    for (int e : *d) {
      if (e < 0 || e >= v || seen[e]) return false;
      seen[e] = 1;
    }
    for (int a : *d)
      for (int b : *d) {
        if (a == b) continue;
        ++count[((a - b) % v + v) % v];
      }
  }
  for (int e = 1; e < v; ++e)
    if (count[e] != pair.lambda) return false;
  return true;
}

SignMatrix type1_matrix(const std::vector<int>& subset, int v) {
  if (v < 1) throw std::invalid_argument("type1_matrix: v must be positive");
  std::vector<char> member(v, 0);
  for (int e : subset) {
    if (e < 0 || e >= v)
      throw std::invalid_argument("type1_matrix: element outside Z_v");
    member[e] = 1;
  }
  SignMatrix m(v);
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j)
      if (member[((j - i) % v + v) % v]) m.set(i, j, 1);
  return m;
}

HadamardMatrix build_h_sds(const SdsPair& pair) {
  if (pair.v != 2 * pair.k + 1 || pair.lambda != pair.k - 1)
    throw std::invalid_argument(
        "build_h_sds: parameters are not (2m+1, m, m-1)");
  if (!is_sds(pair))
    throw std::invalid_argument("build_h_sds: difference check failed");
  const int v = pair.v;
  const SignMatrix m1 = type1_matrix(pair.d1, v);
  const SignMatrix m2 = type1_matrix(pair.d2, v);

  SignMatrix h(2 * v + 2);
  h.set(0, 0, 1);
  h.set(0, 1, 1);
  h.set(1, 0, -1);
  h.set(1, 1, 1);
  for (int j = 0; j < v; ++j) {
    h.set(0, 2 + j, 1);
    h.set(0, 2 + v + j, -1);
    h.set(1, 2 + j, -1);
    h.set(1, 2 + v + j, -1);
  }
  for (int i = 0; i < v; ++i) {
    h.set(2 + i, 0, -1);
    h.set(2 + i, 1, 1);
    h.set(2 + v + i, 0, 1);
    h.set(2 + v + i, 1, 1);
    for (int j = 0; j < v; ++j) {
      h.set(2 + i, 2 + j, -m1.get(i, j));
      h.set(2 + i, 2 + v + j, -m2.get(i, j));
      h.set(2 + v + i, 2 + j, m2.get(j, i));
      h.set(2 + v + i, 2 + v + j, -m1.get(j, i));
    }
  }
  return HadamardMatrix(h);
}

HadamardMatrix build_h_nv(int p, int a) {
  if (!is_prime(p) || p % 24 != 5)
    throw std::invalid_argument("build_h_nv: p must be a prime = 5 mod 24");
  if (a != 1 && a != -1)
    throw std::invalid_argument("build_h_nv: a must be +1 or -1");
  const NvBlocks blocks = build_blocks(p);
  const int n = p + 1;
  const IntMatrix ai = IntMatrix::identity(n).scaled(a);
  const IntMatrix ba = blocks.x - blocks.y.transpose() + ai;
  const IntMatrix bb = blocks.y + blocks.x.transpose() + ai;
  IntMatrix h(2 * n, 2 * n);
  h.set_block(0, 0, ba);
  h.set_block(0, n, bb);
  h.set_block(n, 0, -bb.transpose());
  h.set_block(n, n, ba.transpose());
  return HadamardMatrix(SignMatrix::from_int(h));
}

HadamardMatrix build_paley(int q, PaleyKind kind) {
  if (!is_prime(q)) throw std::invalid_argument("build_paley: q must be prime");
  if (kind == PaleyKind::kOne) {
    if (q % 4 != 3)
      throw std::invalid_argument("build_paley: kind one needs q = 3 mod 4");
    // F_q indices 0..q-1, the extra point last.  The core is the quadratic
    // character of the row-minus-column difference, which together with a
    // +1 diagonal, a +1 last row and a -1 last column gives a skew matrix.
    const int n = q + 1;
    SignMatrix h(n);
    for (int i = 0; i < n; ++i) h.set(i, i, 1);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        if (a == b) continue;
        h.set(a, b, quadratic_character(q, a - b));
      }
    for (int t = 0; t < q; ++t) {
      h.set(q, t, 1);
      h.set(t, q, -1);
    }
    return HadamardMatrix(h);
  }
  if (q % 4 != 1)
    throw std::invalid_argument("build_paley: kind two needs q = 1 mod 4");
  const IntMatrix s = pless_conference(q);
  const int n = q + 1;
  const IntMatrix eye = IntMatrix::identity(n);
  IntMatrix h(2 * n, 2 * n);
  h.set_block(0, 0, s + eye);
  h.set_block(0, n, s - eye);
  h.set_block(n, 0, s - eye);
  h.set_block(n, n, -s - eye);
  return HadamardMatrix(SignMatrix::from_int(h));
}

}  // namespace sdh

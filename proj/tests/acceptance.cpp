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

// Release gate: every numbered check below must print PASS.  Each check is
// independent, prints exactly one line, and the process exits nonzero when
// any of them fail.

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sdh/constructions.hpp"
#include "sdh/equivalence.hpp"
#include "sdh/gf3.hpp"
#include "sdh/hadamard.hpp"
#include "sdh/io.hpp"
#include "sdh/search.hpp"
#include "sdh/sign_matrix.hpp"

namespace {

using sdh::u64;

bool expect(bool cond, const std::string& what, std::string* detail) {
  if (!cond) {
    if (!detail->empty()) {
      *detail += "; ";
    }
    *detail += what;
  }
  return cond;
}

std::string fixture_path() { return std::string(SDH_DATA_DIR) + "/bnv2.oct"; }

sdh::SignMatrix sylvester(int n) {
  sdh::SignMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool even = std::popcount(static_cast<unsigned>(i & j)) % 2 == 0;
      m.set(i, j, even ? 1 : -1);
    }
  }
  return m;
}

sdh::MonomialPair random_monomial(std::mt19937_64* rng, int n) {
  sdh::MonomialPair m = sdh::MonomialPair::identity(n);
  std::shuffle(m.row.perm.begin(), m.row.perm.end(), *rng);
  std::shuffle(m.col.perm.begin(), m.col.perm.end(), *rng);
  for (int i = 0; i < n; ++i) {
    m.row.sign[i] = ((*rng)() & 1) ? 1 : -1;
    m.col.sign[i] = ((*rng)() & 1) ? 1 : -1;
  }
  return m;
}

std::vector<sdh::Gf3Vector> naive_full_weight(const sdh::TernaryCode& c) {
  std::vector<sdh::Gf3Vector> words;
  const int k = c.dimension();
  std::vector<int> msg(k, 0);
  while (true) {
    const sdh::Gf3Vector w = c.encode(sdh::Gf3Vector::from_trits(msg));
    if (w.full_weight()) {
      words.push_back(w);
    }
    int i = 0;
    while (i < k && msg[i] == 2) {
      msg[i] = 0;
      ++i;
    }
    if (i == k) {
      break;
    }
    ++msg[i];
  }
  std::sort(words.begin(), words.end());
  return words;
}

// 1. Block identities over Z and self-dual codes for every supported p, a.
bool check_block_codes(std::string* detail) {
  bool ok = true;
  for (const int p : {5, 13, 29, 37}) {
    const std::string tag = "p=" + std::to_string(p);
    const sdh::NvBlocks blocks = sdh::build_blocks(p);
    ok &= expect(blocks.x.transpose() == -blocks.x, tag + " X not antisymmetric", detail);
    ok &= expect(blocks.y.transpose() == -blocks.y, tag + " Y not antisymmetric", detail);
    ok &= expect(blocks.x * blocks.y == blocks.y * blocks.x, tag + " XY != YX", detail);
    ok &= expect((blocks.x * blocks.x + blocks.y * blocks.y).is_scalar_identity(-p),
                 tag + " X^2+Y^2 != -pI", detail);
    for (const int a : {1, -1}) {
      const std::string at = tag + ",a=" + std::to_string(a);
      const sdh::TernaryCode code = sdh::build_nv_code(sdh::NvParameters::make(p, a));
      ok &= expect(code.length() == 2 * (p + 1), at + " wrong length", detail);
      ok &= expect(code.dimension() == p + 1, at + " wrong dimension", detail);
      ok &= expect(sdh::is_self_dual(code), at + " not self-dual", detail);
    }
  }
  return ok;
}

// 2. The bordered matrices: Hadamard, skew up to the sign a, GF(3) rank
// p+1, and row span equal to the code of the same parameters.
bool check_bordered_pipeline(std::string* detail) {
  bool ok = true;
  for (const int p : {5, 29}) {
    for (const int a : {1, -1}) {
      const std::string tag = "p=" + std::to_string(p) + ",a=" + std::to_string(a);
      const sdh::HadamardMatrix h = sdh::build_h_nv(p, a);
      const sdh::SignMatrix& m = h.matrix();
      ok &= expect(sdh::is_hadamard(m), tag + " not Hadamard", detail);
      const sdh::HadamardMatrix oriented(a == 1 ? m : m.negated());
      ok &= expect(sdh::is_skew(oriented), tag + " aH not skew", detail);
      ok &= expect(sdh::rank3(m.to_int()) == p + 1, tag + " wrong rank mod 3", detail);
      const sdh::TernaryCode code = sdh::build_nv_code(sdh::NvParameters::make(p, a));
      ok &= expect(sdh::rows_in_code(m, code), tag + " rows not in code", detail);
      const sdh::TernaryCode span =
          sdh::TernaryCode::from_generator(sdh::reduce_mod3(m.to_int()));
      ok &= expect(span == code, tag + " row span != code", detail);
    }
  }
  return ok;
}

// 3. Consecutive coset unions form difference-set pairs with parameters
// (p, (p-1)/2, (p-3)/2), and each pair assembles to a Hadamard matrix.
bool check_difference_sets(std::string* detail) {
  bool ok = true;
  for (const int p : {5, 29, 53}) {
    const sdh::CyclotomicClasses cc = sdh::cyclotomic_classes(p);
    for (int i = 0; i < 4; ++i) {
      const std::string tag = "p=" + std::to_string(p) + ",i=" + std::to_string(i);
      const sdh::SdsPair pair = sdh::SdsPair::make(
          p, cc.coset_union(i, i + 1), cc.coset_union(i + 1, i + 2));
      ok &= expect(sdh::is_sds(pair), tag + " not an SDS pair", detail);
      ok &= expect(pair.k == (p - 1) / 2, tag + " wrong k", detail);
      ok &= expect(pair.lambda == (p - 3) / 2, tag + " wrong lambda", detail);
      const sdh::HadamardMatrix h = sdh::build_h_sds(pair);
      ok &= expect(h.order() == 2 * (p + 1), tag + " wrong order", detail);
      ok &= expect(sdh::is_hadamard(h.matrix()), tag + " not Hadamard", detail);
    }
  }
  return ok;
}

// 4. The bordered matrix at sign a is equivalent to the matching coset-union
// matrix, with the returned witness verified by applying it.
bool check_equivalence_theorem(std::string* detail) {
  bool ok = true;
  for (const int p : {5, 29}) {
    const sdh::CyclotomicClasses cc = sdh::cyclotomic_classes(p);
    const int e = cc.epsilon;
    const std::pair<int, sdh::SdsPair> cases[] = {
        {1, sdh::SdsPair::make(p, cc.coset_union(2, 2 + e), cc.coset_union(0, e + 2))},
        {-1, sdh::SdsPair::make(p, cc.coset_union(0, e), cc.coset_union(2, e))},
    };
    for (const auto& [a, pair] : cases) {
      const std::string tag = "p=" + std::to_string(p) + ",a=" + std::to_string(a);
      const sdh::HadamardMatrix h1 = sdh::build_h_nv(p, a);
      const sdh::HadamardMatrix h2 = sdh::build_h_sds(pair);
      const sdh::EquivalenceResult res = sdh::are_equivalent(h1, h2);
      ok &= expect(res.equivalent, tag + " not equivalent", detail);
      if (res.equivalent) {
        ok &= expect(sdh::apply_monomial(res.witness, h1.matrix()) == h2.matrix(),
                     tag + " witness does not map h1 to h2", detail);
      }
    }
  }
  return ok;
}

// 5. Zero-free codeword counts across the named families, and the size of
// the sign-normalized set at length 60.
bool check_full_weight_counts(std::string* detail) {
  bool ok = true;
  const auto count_of = [](const sdh::TernaryCode& c) {
    return sdh::enumerate_full_weight(c, 1).count;
  };
  ok &= expect(count_of(sdh::build_nv_code(sdh::NvParameters::make(5, 1))) == 24,
               "length 12 block code count != 24", detail);
  ok &= expect(count_of(sdh::build_extended_qr(11)) == 24,
               "length 12 residue code count != 24", detail);
  ok &= expect(count_of(sdh::build_pless_symmetry(11)) == 48,
               "length 24 symmetry code count != 48", detail);
  ok &= expect(count_of(sdh::build_pless_symmetry(17)) == 888,
               "length 36 symmetry code count != 888", detail);
  ok &= expect(count_of(sdh::build_extended_qr(47)) == 96,
               "length 48 residue code count != 96", detail);
  const sdh::FullWeightResult fw60 =
      sdh::enumerate_full_weight(sdh::build_nv_code(sdh::NvParameters::make(29, 1)), 1);
  ok &= expect(fw60.count == 41184, "length 60 block code count != 41184", detail);
  ok &= expect(sdh::sign_normalize(fw60.words).size() == 20592,
               "length 60 normalized size != 20592", detail);
  return ok;
}

// 6. The bundled octal fixture: decoded row 0 has its single zero bit at
// position 31 counting from 1, the sign matrix is Hadamard of GF(3) rank
// 30, its rows lie in the length-60 code, and it is not equivalent to the
// bordered matrix.
bool check_fixture_pipeline(std::string* detail) {
  bool ok = true;
  const sdh::BitMatrix b = sdh::octal_decode(sdh::read_file(fixture_path()), 60);
  int zeros = 0;
  int position = -1;
  for (int j = 0; j < 60; ++j) {
    if (b.get(0, j) == 0) {
      ++zeros;
      position = j + 1;
    }
  }
  ok &= expect(zeros == 1, "row 0 zero count != 1", detail);
  ok &= expect(position == 31, "row 0 zero not at position 31", detail);
  const sdh::SignMatrix m = sdh::from_binary(b);
  ok &= expect(sdh::is_hadamard(m), "fixture not Hadamard", detail);
  ok &= expect(sdh::rank3(m.to_int()) == 30, "fixture rank mod 3 != 30", detail);
  const sdh::TernaryCode code = sdh::build_nv_code(sdh::NvParameters::make(29, 1));
  ok &= expect(sdh::rows_in_code(m, code), "fixture rows not in code", detail);
  const sdh::EquivalenceResult res =
      sdh::are_equivalent(sdh::build_h_nv(29, 1), sdh::HadamardMatrix(m));
  ok &= expect(!res.equivalent, "fixture equivalent to bordered matrix", detail);
  return ok;
}

// 7. Automorphism group orders at order 60 under the stated pair count
// convention.
bool check_automorphism_orders(std::string* detail) {
  bool ok = true;
  const sdh::AutomorphismInfo bordered =
      sdh::automorphism_group_order(sdh::build_h_nv(29, 1));
  ok &= expect(bordered.order == 24360,
               "bordered order " + std::to_string(bordered.order) + " != 24360", detail);
  const sdh::HadamardMatrix fixture(
      sdh::from_binary(sdh::octal_decode(sdh::read_file(fixture_path()), 60)));
  const sdh::AutomorphismInfo decoded = sdh::automorphism_group_order(fixture);
  ok &= expect(decoded.order == 812,
               "fixture order " + std::to_string(decoded.order) + " != 812", detail);
  ok &= expect(!bordered.convention.empty(), "convention not stated", detail);
  if (ok) {
    *detail = bordered.convention;
  }
  return ok;
}

// 8. Order-36 matrices from 36-cliques of the length-36 orthogonality
// graph fall into exactly two equivalence classes, one of them the type
// two quadratic-character matrix.
bool check_order36_classes(std::string* detail) {
  bool ok = true;
  const sdh::TernaryCode p36 = sdh::build_pless_symmetry(17);
  const sdh::FullWeightResult fw = sdh::enumerate_full_weight(p36, 1);
  const sdh::SignVectorSet reps = sdh::sign_normalize(fw.words);
  ok &= expect(reps.size() == 444, "graph vertex count != 444", detail);
  const sdh::OrthoGraph graph = sdh::build_ortho_graph(reps);
  sdh::CliqueOptions options;
  options.size = 36;
  options.node_budget = 100000000ull;
  const sdh::CliqueResult res = sdh::find_cliques(graph, options);
  ok &= expect(!res.cliques.empty(), "no 36-cliques found", detail);
  std::set<sdh::SignMatrix> classes;
  for (const std::vector<int>& clique : res.cliques) {
    const sdh::HadamardMatrix h(reps.matrix_from(clique));
    classes.insert(sdh::canonical_form(h).matrix);
  }
  const sdh::SignMatrix paley2 =
      sdh::canonical_form(sdh::build_paley(17, sdh::PaleyKind::kTwo)).matrix;
  ok &= expect(classes.count(paley2) == 1, "type two matrix class not found", detail);
  if (res.exhaustive) {
    ok &= expect(classes.size() == 2,
                 "class count " + std::to_string(classes.size()) + " != 2", detail);
  } else {
    ok &= expect(classes.size() >= 2, "budget exhausted before both classes", detail);
  }
  return ok;
}

// 9. The three bundled negacirculant codes are self-dual [60, 30] with
// certified minimum weight 18.
bool check_negacirculant_codes(std::string* detail) {
  bool ok = true;
  for (const int index : {1, 2, 3}) {
    const std::string tag = "index " + std::to_string(index);
    const auto rows = sdh::negacirculant_pair(index);
    const sdh::TernaryCode code =
        sdh::build_four_negacirculant(rows.first, rows.second);
    ok &= expect(code.length() == 60, tag + " wrong length", detail);
    ok &= expect(code.dimension() == 30, tag + " wrong dimension", detail);
    ok &= expect(sdh::is_self_dual(code), tag + " not self-dual", detail);
    const sdh::MinWeightResult mw = sdh::min_weight_bz(code, {});
    ok &= expect(mw.exact, tag + " minimum weight not certified", detail);
    ok &= expect(mw.weight == 18,
                 tag + " weight " + std::to_string(mw.weight) + " != 18", detail);
    ok &= expect(code.contains(mw.witness) && mw.witness.weight() == mw.weight,
                 tag + " bad witness", detail);
  }
  return ok;
}

// 10. Randomized property suites: GF(3) kernels against a per-coordinate
// oracle, the Gray-walk enumeration against a full 3^k scan, canonical
// forms as class functions over random monomial images, the automorphism
// engine against brute force at order 4, and the octal codec round trip.
bool check_property_suites(std::string* detail) {
  bool ok = true;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);

  int gf3_bad = 0;
  for (int rep = 0; rep < 10000; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 96);
    std::vector<int> ta(n), tb(n);
    for (int& t : ta) t = static_cast<int>(rng() % 3);
    for (int& t : tb) t = static_cast<int>(rng() % 3);
    const sdh::Gf3Vector va = sdh::Gf3Vector::from_trits(ta);
    const sdh::Gf3Vector vb = sdh::Gf3Vector::from_trits(tb);
    const sdh::Gf3Vector sum = va + vb;
    sdh::Gf3Vector diff = va;
    diff.sub_in_place(vb);
    int dot = 0;
    int weight = 0;
    bool good = true;
    for (int i = 0; i < n; ++i) {
      good = good && sum.get(i) == (ta[i] + tb[i]) % 3;
      good = good && diff.get(i) == ((ta[i] - tb[i]) % 3 + 3) % 3;
      dot = (dot + ta[i] * tb[i]) % 3;
      weight += ta[i] != 0 ? 1 : 0;
    }
    good = good && va.dot(vb) == dot && va.weight() == weight;
    gf3_bad += good ? 0 : 1;
  }
  ok &= expect(gf3_bad == 0,
               std::to_string(gf3_bad) + " GF(3) oracle mismatches", detail);

  int walk_bad = 0;
  for (const int k : {4, 6, 8, 10, 12}) {
    const int n = k + 8;
    std::vector<std::vector<int>> gen(k, std::vector<int>(n));
    for (auto& row : gen) {
      for (int& t : row) t = static_cast<int>(rng() % 3);
    }
    const sdh::TernaryCode code =
        sdh::TernaryCode::from_generator(sdh::Gf3Matrix::from_trits(gen));
    const std::vector<sdh::Gf3Vector> naive = naive_full_weight(code);
    const sdh::FullWeightResult fast = sdh::enumerate_full_weight(code, 1);
    const bool good = fast.count == naive.size() && fast.words == naive;
    walk_bad += good ? 0 : 1;
  }
  ok &= expect(walk_bad == 0,
               std::to_string(walk_bad) + " enumeration oracle mismatches", detail);

  const sdh::HadamardMatrix bases[] = {
      sdh::HadamardMatrix(sylvester(4)),
      sdh::build_h_nv(5, 1),
      sdh::HadamardMatrix(sylvester(16)),
  };
  for (const sdh::HadamardMatrix& base : bases) {
    const std::string tag = "order " + std::to_string(base.order());
    const sdh::CanonicalForm base_form = sdh::canonical_form(base);
    int canon_bad =
        sdh::apply_monomial(base_form.to_canonical, base.matrix()) == base_form.matrix
            ? 0
            : 1;
    for (int rep = 0; rep < 100; ++rep) {
      const sdh::MonomialPair m = random_monomial(&rng, base.order());
      const sdh::SignMatrix image = sdh::apply_monomial(m, base.matrix());
      const sdh::CanonicalForm form = sdh::canonical_form(sdh::HadamardMatrix(image));
      const bool good = form.matrix == base_form.matrix &&
                        sdh::apply_monomial(form.to_canonical, image) == form.matrix;
      canon_bad += good ? 0 : 1;
    }
    ok &= expect(canon_bad == 0,
                 tag + ": " + std::to_string(canon_bad) + " canonical mismatches",
                 detail);
  }

  const sdh::SignMatrix s4 = sylvester(4);
  const u64 brute = sdh::automorphism_pairs_bruteforce(s4);
  const u64 engine = sdh::automorphism_group_order(sdh::HadamardMatrix(s4)).order;
  ok &= expect(brute == engine,
               "order 4 automorphism count " + std::to_string(engine) +
                   " != brute force " + std::to_string(brute),
               detail);

  int octal_bad = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    const int order = 3 * (1 + static_cast<int>(rng() % 10));
    sdh::BitMatrix bits(order);
    for (int i = 0; i < order; ++i) {
      for (int j = 0; j < order; ++j) {
        bits.set(i, j, static_cast<int>(rng() & 1));
      }
    }
    const bool good = sdh::octal_decode(sdh::octal_encode(bits), order) == bits;
    octal_bad += good ? 0 : 1;
  }
  ok &= expect(octal_bad == 0,
               std::to_string(octal_bad) + " octal round-trip mismatches", detail);
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    std::function<bool(std::string*)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "block identities and self-dual codes", check_block_codes},
      {2, "bordered matrix pipeline", check_bordered_pipeline},
      {3, "difference-set pairs", check_difference_sets},
      {4, "equivalence at both signs", check_equivalence_theorem},
      {5, "zero-free codeword counts", check_full_weight_counts},
      {6, "bundled fixture pipeline", check_fixture_pipeline},
      {7, "automorphism orders at order 60", check_automorphism_orders},
      {8, "order-36 classification", check_order36_classes},
      {9, "negacirculant minimum weights", check_negacirculant_codes},
      {10, "randomized property suites", check_property_suites},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(&detail);
    } catch (const std::exception& err) {
      detail = std::string("exception: ") + err.what();
    }
    const double seconds =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count() /
        1000.0;
    std::ostringstream line;
    line << "criterion " << c.id << " (" << c.label << "): "
         << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) {
      line << " (" << detail << ")";
    }
    line << " [" << std::fixed << std::setprecision(1) << seconds << " s]";
    std::cout << line.str() << std::endl;
    failures += ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}

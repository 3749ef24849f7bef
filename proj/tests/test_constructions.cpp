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

#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sdh/constructions.hpp"
#include "sdh/gf3.hpp"
#include "sdh/search.hpp"

TEST_CASE("primality and quadratic characters") {
  CHECK(sdh::is_prime(2));
  CHECK(sdh::is_prime(3));
  CHECK(sdh::is_prime(29));
  CHECK(sdh::is_prime(53));
  CHECK_FALSE(sdh::is_prime(1));
  CHECK_FALSE(sdh::is_prime(9));
  CHECK_FALSE(sdh::is_prime(25));
  CHECK_FALSE(sdh::is_prime(49));

  // chi(x) = x^((p-1)/2) mod p, checked against direct squaring.
  for (int p : {5, 13, 29, 37}) {
    std::map<int, bool> squares;
    for (int x = 1; x < p; ++x) squares[(x * x) % p] = true;
    for (int x = 1; x < p; ++x) {
      CHECK(sdh::quadratic_character(p, x) == (squares.count(x) ? 1 : -1));
    }
    CHECK(sdh::quadratic_character(p, 0) == 0);
    CHECK(sdh::quadratic_character(p, p) == 0);
    CHECK(sdh::quadratic_character(p, 1) == 1);
  }
}

TEST_CASE("plus-minus block pair satisfies the defining identities") {
  for (int p : {5, 13, 29, 37, 53, 61}) {
    const sdh::NvBlocks blocks = sdh::build_blocks(p);
    const int n = p + 1;
    REQUIRE(blocks.x.rows() == n);
    REQUIRE(blocks.y.rows() == n);

    // Antisymmetry of both blocks over the integers.
    CHECK(blocks.x.transpose() == -blocks.x);
    CHECK(blocks.y.transpose() == -blocks.y);

    // The blocks commute and their squares sum to -p times the identity.
    CHECK(blocks.x * blocks.y == blocks.y * blocks.x);
    CHECK((blocks.x * blocks.x + blocks.y * blocks.y)
              .is_scalar_identity(-p));

    // Border shape of the bordered block and the zero-bordered block.
    for (int j = 1; j < n; ++j) {
      CHECK(blocks.x.at(0, j) == 1);
      CHECK(blocks.x.at(j, 0) == -1);
      CHECK(blocks.y.at(0, j) == 0);
      CHECK(blocks.y.at(j, 0) == 0);
    }
    CHECK(blocks.x.at(0, 0) == 0);
    CHECK(blocks.y.at(0, 0) == 0);

    // Core entries: zero on the diagonal and at nonsquare differences,
    // and the character of a square root at square differences.  The two
    // roots c and p - c share a character value when p = 1 mod 4, so the
    // expected entry is well defined.  The second block uses twice the
    // difference.
    std::map<int, int> root_char;
    for (int c = 1; c < p; ++c) {
      root_char[(c * c) % p] = sdh::quadratic_character(p, c);
    }
    for (int a = 0; a < p; ++a) {
      for (int b = 0; b < p; ++b) {
        const int rx = static_cast<int>(blocks.rx.at(a, b));
        const int ry = static_cast<int>(blocks.ry.at(a, b));
        if (a == b) {
          CHECK(rx == 0);
          CHECK(ry == 0);
          continue;
        }
        const int d = ((b - a) % p + p) % p;
        CHECK(rx == (root_char.count(d) ? root_char.at(d) : 0));
        const int d2 = (2 * d) % p;
        CHECK(ry == (root_char.count(d2) ? root_char.at(d2) : 0));
      }
    }
  }
}

TEST_CASE("block parameter validation") {
  CHECK_THROWS_AS(sdh::build_blocks(7), std::invalid_argument);
  CHECK_THROWS_AS(sdh::build_blocks(25), std::invalid_argument);
  CHECK_THROWS_AS(sdh::NvParameters::make(7, 1), std::invalid_argument);
  CHECK_THROWS_AS(sdh::NvParameters::make(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(sdh::NvParameters::make(5, 0), std::invalid_argument);
}

TEST_CASE("plus-minus codes are self-dual at both unit choices") {
  for (int p : {5, 13, 29, 37}) {
    for (int a : {1, -1}) {
      const sdh::NvParameters params = sdh::NvParameters::make(p, a);
      const sdh::TernaryCode code = sdh::build_nv_code(params);
      CHECK(code.length() == 2 * (p + 1));
      CHECK(code.dimension() == p + 1);
      CHECK(sdh::is_self_dual(code));
    }
  }
}

TEST_CASE("length-12 code reaches minimum distance six") {
  const sdh::TernaryCode code =
      sdh::build_nv_code(sdh::NvParameters::make(5, 1));
  const std::map<int, sdh::u64> wd = sdh::weight_distribution_small(code);
  int min_w = 0;
  for (const auto& [w, c] : wd) {
    if (w > 0) {
      min_w = w;
      break;
    }
  }
  CHECK(min_w == 6);
  CHECK(wd.at(12) == 24);
}

TEST_CASE("extended quadratic-residue codes are self-dual") {
  for (int p : {11, 23, 47, 59}) {
    const sdh::TernaryCode code = sdh::build_extended_qr(p);
    CHECK(code.length() == p + 1);
    CHECK(code.dimension() == (p + 1) / 2);
    CHECK(sdh::is_self_dual(code));
  }
  CHECK_THROWS_AS(sdh::build_extended_qr(13), std::invalid_argument);
  CHECK_THROWS_AS(sdh::build_extended_qr(9), std::invalid_argument);
}

TEST_CASE("length-12 and length-24 quadratic-residue minimum weights") {
  const sdh::TernaryCode qr12 = sdh::build_extended_qr(11);
  const std::map<int, sdh::u64> wd12 = sdh::weight_distribution_small(qr12);
  CHECK(wd12.count(3) == 0);
  CHECK(wd12.at(6) > 0);
  CHECK(wd12.at(12) == 24);

  const sdh::TernaryCode qr24 = sdh::build_extended_qr(23);
  const std::map<int, sdh::u64> wd24 = sdh::weight_distribution_small(qr24);
  CHECK(wd24.count(3) == 0);
  CHECK(wd24.count(6) == 0);
  CHECK(wd24.at(9) > 0);
  CHECK(wd24.at(24) == 48);
}

TEST_CASE("conference matrices from quadratic characters") {
  for (int q : {5, 13, 17}) {
    const sdh::IntMatrix s = sdh::pless_conference(q);
    REQUIRE(s.rows() == q + 1);
    CHECK((s * s.transpose()).is_scalar_identity(q));
    // Symmetric for q = 1 mod 4.
    CHECK(s.transpose() == s);
    CHECK(s.at(0, 0) == 0);
  }
  for (int q : {11, 23}) {
    const sdh::IntMatrix s = sdh::pless_conference(q);
    CHECK((s * s.transpose()).is_scalar_identity(q));
    // Antisymmetric for q = 3 mod 4.
    CHECK(s.transpose() == -s);
  }
  CHECK_THROWS_AS(sdh::pless_conference(9), std::invalid_argument);
  CHECK_THROWS_AS(sdh::pless_conference(15), std::invalid_argument);
}

TEST_CASE("pless symmetry codes are self-dual") {
  for (int q : {5, 11, 17, 23}) {
    const sdh::TernaryCode code = sdh::build_pless_symmetry(q);
    CHECK(code.length() == 2 * (q + 1));
    CHECK(code.dimension() == q + 1);
    CHECK(sdh::is_self_dual(code));
  }
}

TEST_CASE("length-24 pless symmetry code has minimum weight nine") {
  const sdh::TernaryCode code = sdh::build_pless_symmetry(11);
  const std::map<int, sdh::u64> wd = sdh::weight_distribution_small(code);
  int min_w = 0;
  for (const auto& [w, c] : wd) {
    if (w > 0) {
      min_w = w;
      break;
    }
  }
  CHECK(min_w == 9);
  CHECK(wd.at(24) == 48);
}

TEST_CASE("negacirculant rows rotate with a sign twist") {
  const sdh::Gf3Vector first =
      sdh::Gf3Vector::from_trits({1, 2, 0, 1, 0});
  const sdh::Gf3Matrix m = sdh::negacirculant(first);
  REQUIRE(m.nrows() == 5);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      int expect = first.get(((j - i) % 5 + 5) % 5);
      if (j < i) expect = (3 - expect) % 3;  // wrapped entries negate
      CHECK(m.row(i).get(j) == expect % 3);
    }
  }
}

TEST_CASE("four-negacirculant codes of length sixty are self-dual") {
  for (int idx : {1, 2, 3}) {
    const auto [ra, rb] = sdh::negacirculant_pair(idx);
    const sdh::TernaryCode code = sdh::build_four_negacirculant(ra, rb);
    CHECK(code.length() == 60);
    CHECK(code.dimension() == 30);
    CHECK(sdh::is_self_dual(code));
  }
  CHECK_THROWS_AS(sdh::negacirculant_pair(0), std::invalid_argument);
  CHECK_THROWS_AS(sdh::negacirculant_pair(4), std::invalid_argument);
}

TEST_CASE("four-negacirculant codes share the extremal full-weight count") {
  // Extremal length-60 codes all carry the same weight enumerator, so the
  // count of weight-60 words matches the plus-minus construction.
  const auto [ra, rb] = sdh::negacirculant_pair(1);
  const sdh::TernaryCode code = sdh::build_four_negacirculant(ra, rb);
  CHECK(sdh::enumerate_full_weight(code).count == 41184);
}

//
// gammasg - verification toolkit for finite ordered Gamma-semigroups
//
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
//

#include <random>

#include "catch_amalgamated.hpp"

#include "gammasg/errors.hpp"
#include "gammasg/search.hpp"
#include "gammasg/subsets.hpp"
#include "test-helpers.hpp"

namespace gammasg {

  namespace {
    SubsetMask set(std::size_t n, std::vector<element_index> elts) {
      return SubsetMask::of(n, elts);
    }
  }  // namespace

  TEST_CASE("product", "[subsets]") {
    auto const M = test::z2_pair();
    REQUIRE(product(M, set(2, {0}), 0, set(2, {0})) == set(2, {0}));
    REQUIRE(product(M, set(2, {}), 0, M.full()).empty());
    REQUIRE(product(M, M.full(), 1, M.full()) == set(2, {0, 1}));
    REQUIRE(product(M, set(2, {0}), 1, set(2, {0})) == set(2, {1}));
  }

  TEST_CASE("product_gamma", "[subsets]") {
    auto const P = test::z2_pair();
    REQUIRE(product_gamma(P, set(2, {0}), set(2, {0})) == set(2, {0, 1}));
    REQUIRE(product_gamma(P, set(2, {}), P.full()).empty());
    auto const C = test::constant();
    REQUIRE(product_gamma(C, C.full(), C.full()) == set(2, {0}));
  }

  TEST_CASE("down_closure and up_closure", "[subsets]") {
    auto const P = test::z2_pair();
    for (std::uint64_t bits = 0; bits < 4; ++bits) {
      auto H = SubsetMask::from_bits(2, bits);
      REQUIRE(down_closure(P, H) == H);
      REQUIRE(up_closure(P, H) == H);
    }
    auto const C = test::constant(true);
    REQUIRE(down_closure(C, set(2, {1})) == set(2, {0, 1}));
    REQUIRE(down_closure(C, set(2, {0})) == set(2, {0}));
    REQUIRE(up_closure(C, set(2, {0})) == set(2, {0, 1}));
    REQUIRE(up_closure(C, set(2, {1})) == set(2, {1}));
    REQUIRE(down_closure(C, set(2, {})).empty());
    REQUIRE(up_closure(C, set(2, {})).empty());
  }

  TEST_CASE("principal_set", "[subsets]") {
    auto const one = test::trivial();
    for (auto p : kAllPatterns) {
      REQUIRE(principal_set(one, p, 0) == set(1, {0}));
    }
    auto const P = test::z2_pair();
    REQUIRE(principal_set(P, Pattern::m_a_m, 0) == set(2, {0, 1}));
    REQUIRE(principal_set(P, Pattern::m_a_m, 1) == set(2, {0, 1}));
    auto const C = test::constant();
    REQUIRE(principal_set(C, Pattern::m_a_m, 1) == set(2, {0}));
    REQUIRE(principal_set(C, Pattern::m_a_a_m, 1) == set(2, {0}));
    auto const Cc = test::constant(true);
    // The chain adds nothing below 0.
    REQUIRE(principal_set(Cc, Pattern::m_a, 1) == set(2, {0}));
    REQUIRE_THROWS_AS(principal_set(P, Pattern::m_a, 2), UsageError);
  }

  TEST_CASE("parse_pattern", "[subsets]") {
    REQUIRE(parse_pattern("(MΓaΓM]") == Pattern::m_a_m);
    REQUIRE(parse_pattern("(MGaGM]") == Pattern::m_a_m);
    REQUIRE(parse_pattern("MΓaΓaΓM") == Pattern::m_a_a_m);
    for (auto p : kAllPatterns) {
      REQUIRE(parse_pattern(to_string(p)) == p);
    }
    REQUIRE_THROWS_AS(parse_pattern("(MΓa"), UsageError);
  }

  TEST_CASE("principal sets do not depend on bracketing", "[subsets]") {
    for_each_ordered_structure(3, 2, OrderMode::all, [](auto const& M) {
      for (element_index a = 0; a < M.size(); ++a) {
        auto const A   = M.singleton(a);
        auto const all = M.full();
        auto const lhs = product_gamma(M, product_gamma(M, all, A), all);
        auto const rhs = product_gamma(M, all, product_gamma(M, A, all));
        REQUIRE(lhs == rhs);
        REQUIRE(down_closure(M, lhs) == principal_set(M, Pattern::m_a_m, a));
      }
      return true;
    });
  }

  TEST_CASE("closure identities on random masks", "[subsets][property]") {
    std::mt19937_64 rng(20261015);
    auto            structures = enumerate_tables(3, 2);
    for (std::size_t s = 0; s < structures.size(); s += 7) {
      for (auto const& order : enumerate_orders(structures[s])) {
        auto const M = OrderedGammaStructure::unchecked(structures[s], order);
        REQUIRE(down_closure(M, M.full()) == M.full());
        for (int i = 0; i < 64; ++i) {
          auto A  = SubsetMask::from_bits(3, rng() & 7);
          auto B  = SubsetMask::from_bits(3, rng() & 7);
          auto dA = down_closure(M, A);
          auto dB = down_closure(M, B);
          REQUIRE(A.is_subset_of(dA));
          REQUIRE(down_closure(M, dA) == dA);
          if (A.is_subset_of(B)) {
            REQUIRE(dA.is_subset_of(dB));
          }
          auto const AB = down_closure(M, product_gamma(M, A, B));
          REQUIRE(product_gamma(M, dA, dB).is_subset_of(AB));
          REQUIRE(down_closure(M, product_gamma(M, dA, dB)) == AB);
          REQUIRE(down_closure(M, product_gamma(M, dA, B)) == AB);
          REQUIRE(down_closure(M, product_gamma(M, A, dB)) == AB);
          // Monotone in both arguments.
          auto const AuB = A | B;
          REQUIRE(
              product_gamma(M, A, B).is_subset_of(product_gamma(M, AuB, B)));
          REQUIRE(
              product_gamma(M, A, B).is_subset_of(product_gamma(M, A, AuB)));
        }
      }
    }
  }

  TEST_CASE("subset algebra agrees with the naive reference",
            "[subsets][property]") {
    for_each_ordered_structure(3, 1, OrderMode::all, [](auto const& M) {
      for (std::uint64_t a = 0; a < 8; ++a) {
        for (std::uint64_t b = 0; b < 8; ++b) {
          auto const A = SubsetMask::from_bits(3, a);
          auto const B = SubsetMask::from_bits(3, b);
          REQUIRE(test::naive::to_set(product_gamma(M, A, B))
                  == test::naive::prod(M,
                                       test::naive::from_bits(3, a),
                                       test::naive::from_bits(3, b)));
        }
        REQUIRE(
            test::naive::to_set(down_closure(M, SubsetMask::from_bits(3, a)))
            == test::naive::down(M, test::naive::from_bits(3, a)));
      }
      return true;
    });
  }

}  // namespace gammasg

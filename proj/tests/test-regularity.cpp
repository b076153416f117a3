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

#include "catch_amalgamated.hpp"

#include "gammasg/errors.hpp"
#include "gammasg/regularity.hpp"
#include "gammasg/search.hpp"
#include "gammasg/subsets.hpp"
#include "test-helpers.hpp"

namespace gammasg {

  TEST_CASE("Z/2 pair regularity", "[regularity]") {
    auto const P = test::z2_pair();
    REQUIRE(is_regular(P));
    REQUIRE(is_left_regular(P));
    REQUIRE(is_right_regular(P));
    REQUIRE(is_completely_regular(P));
    REQUIRE(is_strongly_regular(P));
    REQUIRE(strong_witness(P, 0, P.full()) == StrongWitness{0, 0, 0, 0});
    REQUIRE(strong_witness(P, 1, P.full()) == StrongWitness{1, 1, 0, 0});
    REQUIRE(regular_witness(P, 0) == RegularWitness{0, 0, 0, 0});
    REQUIRE(is_strongly_regular_subsemigroup(P, P.full()));
    REQUIRE(!is_strongly_regular_subsemigroup(P, P.singleton(0)));
  }

  TEST_CASE("constant product regularity", "[regularity]") {
    for (bool chain : {false, true}) {
      auto const C = test::constant(chain);
      REQUIRE(!is_regular(C));
      REQUIRE(!regular_witness(C, 1));
      REQUIRE(regular_witness(C, 0) == RegularWitness{0, 0, 0, 0});
      REQUIRE(!is_left_regular(C));
      REQUIRE(!is_right_regular(C));
      REQUIRE(!is_strongly_regular(C));
      REQUIRE(!strong_witness(C, 1, C.full()));
      auto const d = srs_defect(C, C.full());
      REQUIRE(d);
      REQUIRE(d->kind == SrsDefect::Kind::no_witness);
      REQUIRE(d->x == 1);
      REQUIRE(is_strongly_regular_subsemigroup(C, C.singleton(0)));
    }
  }

  TEST_CASE("left-zero regularity", "[regularity]") {
    for (bool chain : {false, true}) {
      auto const L = test::left_zero(chain);
      REQUIRE(is_completely_regular(L));
      REQUIRE(is_strongly_regular(L));
      REQUIRE(strong_witness(L, 1, L.full()) == StrongWitness{1, 1, 0, 0});
    }
  }

  TEST_CASE("srs_defect", "[regularity]") {
    auto const P = test::z2_pair();
    auto       d = srs_defect(P, P.empty_set());
    REQUIRE(d);
    REQUIRE(d->kind == SrsDefect::Kind::empty);
    d = srs_defect(P, P.singleton(0));
    REQUIRE(d);
    REQUIRE(d->kind == SrsDefect::Kind::not_closed);
    REQUIRE(d->x == 0);
    REQUIRE(d->op == 1);
    REQUIRE(d->y == 0);
    REQUIRE(!srs_defect(P, P.full()));
    REQUIRE_THROWS_AS(strong_witness(P, 1, P.singleton(0)), UsageError);
  }

  TEST_CASE("regularity agrees with the naive reference",
            "[regularity][property]") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t k = 1; k <= 2; ++k) {
        for_each_ordered_structure(n, k, OrderMode::all, [](auto const& M) {
          bool const reg = is_regular(M);
          REQUIRE(reg == is_regular_by_membership(M));
          REQUIRE(reg == test::naive::regular(M));
          bool const sr = is_strongly_regular(M);
          REQUIRE(sr == test::naive::strongly_regular(M));
          if (sr) {
            REQUIRE(is_completely_regular(M));
          }
          for (element_index a = 0; a < M.size(); ++a) {
            REQUIRE(left_regular_witness(M, a).has_value()
                    == principal_set(M, Pattern::m_a_a, a).contains(a));
            REQUIRE(right_regular_witness(M, a).has_value()
                    == principal_set(M, Pattern::a_a_m, a).contains(a));
          }
          return true;
        });
      }
    }
  }

  TEST_CASE("witness upgrade", "[regularity][property]") {
    std::size_t upgraded = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t k = 1; k <= 2; ++k) {
        for_each_ordered_structure(n, k, OrderMode::all, [&](auto const& M) {
          if (!is_strongly_regular(M)) {
            return true;
          }
          for (element_index a = 0; a < M.size(); ++a) {
            auto const w = strong_witness(M, a, M.full());
            REQUIRE(w);
            auto const u = upgrade_witness(M, *w);
            auto const y = u.x;
            auto const g = u.gamma;
            auto const m = u.mu;
            REQUIRE(is_strong_witness(M, u));
            REQUIRE(M.leq(y, M.product(M.product(y, m, a), g, y)));
            ++upgraded;
          }
          return true;
        });
      }
    }
    REQUIRE(upgraded > 0);
  }

}  // namespace gammasg

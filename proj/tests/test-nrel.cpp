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
#include "gammasg/nrel.hpp"
#include "gammasg/search.hpp"
#include "gammasg/substructs.hpp"
#include "test-helpers.hpp"

namespace gammasg {

  TEST_CASE("EqRelation builders", "[nrel]") {
    auto const r = EqRelation::from_labels({7, 3, 7, 9});
    REQUIRE(r.number_of_classes() == 3);
    REQUIRE(r.class_id(0) == 0);
    REQUIRE(r.class_id(1) == 1);
    REQUIRE(r.class_id(2) == 0);
    REQUIRE(r.class_id(3) == 2);
    REQUIRE(r.related(0, 2));
    REQUIRE(!r.related(0, 1));
    REQUIRE(r.class_of(2) == SubsetMask::of(4, {0, 2}));

    auto const s = EqRelation::from_classes(4,
                                            {SubsetMask::of(4, {3}),
                                             SubsetMask::of(4, {1}),
                                             SubsetMask::of(4, {0, 2})});
    REQUIRE(r == s);

    REQUIRE_THROWS_AS(EqRelation::from_classes(3, {SubsetMask::of(3, {0, 1})}),
                      UsageError);
    REQUIRE_THROWS_AS(
        EqRelation::from_classes(
            3, {SubsetMask::of(3, {0, 1}), SubsetMask::of(3, {1, 2})}),
        UsageError);

    REQUIRE(EqRelation::identity(3).number_of_classes() == 3);
    REQUIRE(EqRelation::universal(3).number_of_classes() == 1);
  }

  TEST_CASE("N on the fixtures", "[nrel]") {
    REQUIRE(n_relation(test::trivial()) == EqRelation::universal(1));
    REQUIRE(n_relation(test::z2_pair()) == EqRelation::universal(2));
    REQUIRE(n_relation(test::constant()) == EqRelation::universal(2));
    REQUIRE(n_relation(test::constant(true)) == EqRelation::universal(2));
    for (bool chain : {false, true}) {
      auto const L = test::left_zero(chain);
      REQUIRE(is_semilattice_congruence(L, n_relation(L)));
    }
  }

  TEST_CASE("congruence checks", "[nrel]") {
    auto const P = test::z2_pair();
    REQUIRE(is_congruence(P, EqRelation::identity(2)));
    REQUIRE(is_congruence(P, EqRelation::universal(2)));
    // a ~ aγa fails: aγa = a but aμa = b.
    REQUIRE(!is_semilattice_congruence(P, EqRelation::identity(2)));
    REQUIRE(is_semilattice_congruence(P, EqRelation::universal(2)));

    // In Z/3 under addition, {0}, {1, 2} is not a congruence: 1 ~ 2 but
    // 1 + 1 = 2 and 2 + 1 = 0.
    OrderedGammaStructure z3(
        GammaStructure(RawTables{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}}));
    REQUIRE(!is_congruence(z3, EqRelation::from_labels({0, 1, 1})));
    REQUIRE(!is_semilattice_congruence(z3, EqRelation::from_labels({0, 1, 1})));
  }

  TEST_CASE("N is a semilattice congruence", "[nrel][property]") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t k = 1; k <= 2; ++k) {
        for_each_ordered_structure(n, k, OrderMode::all, [&](auto const& M) {
          auto const N = n_relation(M);
          REQUIRE(is_semilattice_congruence(M, N));
          for (element_index a = 0; a < n; ++a) {
            for (element_index b = 0; b < n; ++b) {
              REQUIRE(N.related(a, b)
                      == (filter_generated(M, a) == filter_generated(M, b)));
            }
          }
          return true;
        });
      }
    }
  }

}  // namespace gammasg

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
#include "test-helpers.hpp"

namespace gammasg {

  namespace {
    std::size_t count_ordered(std::size_t n, std::size_t k) {
      std::size_t total = 0;
      for_each_ordered_structure(n, k, OrderMode::all, [&](auto const&) {
        ++total;
        return true;
      });
      return total;
    }
  }  // namespace

  TEST_CASE("table counts", "[search]") {
    REQUIRE(enumerate_tables(1, 1).size() == 1);
    REQUIRE(enumerate_tables(1, 2).size() == 1);
    REQUIRE(enumerate_tables(2, 1).size() == 8);
    REQUIRE(enumerate_tables(2, 2).size() == 14);
    REQUIRE(enumerate_tables(3, 1).size() == 113);
    REQUIRE(enumerate_tables(3, 2).size() == 413);
    REQUIRE(enumerate_tables(4, 1).size() == 3492);
  }

  TEST_CASE("n = 2 single tables match a brute force over all 16", "[search]") {
    std::vector<GammaStructure> brute;
    for (unsigned bits = 0; bits < 16; ++bits) {
      RawTables t{{{(bits >> 3) & 1U, (bits >> 2) & 1U},
                   {(bits >> 1) & 1U, bits & 1U}}};
      if (validate_tables(t, 2, 1).ok()) {
        brute.emplace_back(t);
      }
    }
    REQUIRE(brute == enumerate_tables(2, 1));
  }

  TEST_CASE("order counts", "[search]") {
    REQUIRE(enumerate_partial_orders(1).size() == 1);
    REQUIRE(enumerate_partial_orders(2).size() == 3);
    REQUIRE(enumerate_partial_orders(3).size() == 19);
    REQUIRE(enumerate_partial_orders(4).size() == 219);
    REQUIRE(enumerate_partial_orders(3).front() == OrderRelation::equality(3));
    REQUIRE(count_ordered(1, 1) == 1);
    REQUIRE(count_ordered(1, 2) == 1);
    REQUIRE(count_ordered(2, 1) == 20);
    REQUIRE(count_ordered(2, 2) == 34);
    REQUIRE(count_ordered(3, 1) == 971);
    REQUIRE(count_ordered(3, 2) == 3203);
  }

  TEST_CASE("enumeration is ordered and valid", "[search]") {
    auto const tables = enumerate_tables(3, 2);
    for (std::size_t i = 0; i < tables.size(); ++i) {
      REQUIRE(validate_tables(tables[i].tables(), 3, 2).ok());
      if (i > 0) {
        REQUIRE(tables[i - 1].entries() < tables[i].entries());
      }
    }
    for (auto const& s : tables) {
      for (auto const& o : enumerate_orders(s)) {
        REQUIRE(validate_compatibility(s, o).ok());
      }
    }
  }

  TEST_CASE("budget", "[search]") {
    REQUIRE_THROWS_AS(enumerate_tables(5, 1), ResourceError);
    REQUIRE_THROWS_AS(enumerate_tables(4, 2), ResourceError);
    REQUIRE_THROWS_AS(enumerate_tables(2, 5), ResourceError);
    REQUIRE_THROWS_AS(enumerate_partial_orders(6), ResourceError);
    REQUIRE_THROWS_AS(enumerate_tables(0, 1), StructureError);
    REQUIRE_THROWS_AS(enumerate_tables(1, 0), StructureError);
    EnumerationBudget b;
    b.max_n_multi_op = 1;
    REQUIRE_THROWS_AS(enumerate_tables(2, 2, b), ResourceError);
  }

  TEST_CASE("early stop", "[search]") {
    std::size_t seen = 0;
    for_each_table_tuple(3, 1, [&](auto const&) { return ++seen < 5; });
    REQUIRE(seen == 5);
  }

  TEST_CASE("predicates", "[search]") {
    auto const& names = predicate_names();
    REQUIRE(names.size() == 15);
    REQUIRE(is_predicate_name("strongly-regular"));
    REQUIRE(!is_predicate_name("K1x"));
    REQUIRE_THROWS_AS(evaluate_predicate("bogus", test::z2_pair()), UsageError);
    for (auto const& name : names) {
      REQUIRE(evaluate_predicate(name, test::z2_pair()));
      REQUIRE(!evaluate_predicate(name, test::constant()));
    }
  }

  TEST_CASE("strongly regular but not C5 is empty", "[search]") {
    for (std::size_t n = 1; n <= 3; ++n) {
      SearchQuery q;
      q.n          = n;
      q.k          = 2;
      q.sat        = {"C1"};
      q.unsat      = {"C5"};
      auto const r = run_search(q);
      REQUIRE(r.hits.empty());
      REQUIRE(!r.truncated);
    }
  }

  TEST_CASE("completely regular but not strongly regular", "[search]") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t k = 1; k <= 2; ++k) {
        SearchQuery q;
        q.n     = n;
        q.k     = k;
        q.sat   = {"completely-regular"};
        q.unsat = {"strongly-regular"};
        for (auto const& hit : run_search(q).hits) {
          REQUIRE(is_completely_regular(hit.structure));
          REQUIRE(!test::naive::strongly_regular(hit.structure));
        }
      }
    }
  }

  TEST_CASE("search is deterministic across thread counts", "[search]") {
    SearchQuery q;
    q.n             = 3;
    q.k             = 1;
    q.sat           = {"regular"};
    auto const one  = run_search(q, {}, 1);
    auto const four = run_search(q, {}, 4);
    REQUIRE(one.examined == 971);
    REQUIRE(one.examined == four.examined);
    REQUIRE(one.hits.size() == four.hits.size());
    REQUIRE(!one.hits.empty());
    for (std::size_t i = 0; i < one.hits.size(); ++i) {
      REQUIRE(one.hits[i].structure == four.hits[i].structure);
    }

    q.limit      = 3;
    auto const r = run_search(q, {}, 2);
    REQUIRE(r.hits.size() == 3);
    REQUIRE(r.truncated);
    for (std::size_t i = 0; i < 3; ++i) {
      REQUIRE(r.hits[i].structure == one.hits[i].structure);
    }
  }

  TEST_CASE("search mode and errors", "[search]") {
    SearchQuery q;
    q.n          = 2;
    q.k          = 1;
    q.order_mode = OrderMode::equality_only;
    REQUIRE(run_search(q).examined == 8);
    q.sat = {"nope"};
    REQUIRE_THROWS_AS(run_search(q), UsageError);
  }

}  // namespace gammasg

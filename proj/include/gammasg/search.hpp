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

// Exhaustive labeled enumeration of small ordered Γ-semigroups, and
// predicate-driven search over them.
//
// Tables are produced in lexicographic order of the flattened k-tuple of
// Cayley tables; orders in increasing order of their strict-pair bit
// pattern (so the equality order comes first). No isomorphism rejection.

#ifndef GAMMASG_SEARCH_HPP_
#define GAMMASG_SEARCH_HPP_

#include <cstddef>      // for size_t
#include <functional>   // for function
#include <limits>       // for numeric_limits
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "gammasg/core.hpp"
#include "gammasg/theorem.hpp"

namespace gammasg {

  struct EnumerationBudget {
    std::size_t max_n_single_op = 4;  // k == 1
    std::size_t max_n_multi_op  = 3;  // k >= 2
    std::size_t max_k           = 4;
    std::size_t max_n_orders    = 5;

    // No limits beyond what the representation allows.
    static EnumerationBudget unlimited();
  };

  // Throws ResourceError if (n, k) is outside the budget, StructureError if
  // n or k is zero.
  void check_budget(std::size_t n, std::size_t k, EnumerationBudget const& b);

  // Visits every Γ-semigroup on n elements with k operations. The visitor
  // returns false to stop early.
  void for_each_table_tuple(
      std::size_t                                       n,
      std::size_t                                       k,
      std::function<bool(GammaStructure const&)> const& visit,
      EnumerationBudget const&                          budget = {});

  std::vector<GammaStructure> enumerate_tables(std::size_t n,
                                               std::size_t k,
                                               EnumerationBudget const& = {});

  // All partial orders on n elements.
  std::vector<OrderRelation> enumerate_partial_orders(
      std::size_t n, EnumerationBudget const& = {});

  // All partial orders compatible with every operation of the structure.
  std::vector<OrderRelation> enumerate_orders(GammaStructure const& structure,
                                              EnumerationBudget const& = {});

  enum class OrderMode { all, equality_only };

  // Visits every (tables, compatible order) pair. The visitor returns false
  // to stop early.
  void for_each_ordered_structure(
      std::size_t                                              n,
      std::size_t                                              k,
      OrderMode                                                mode,
      std::function<bool(OrderedGammaStructure const&)> const& visit,
      EnumerationBudget const&                                 budget = {});

  ////////////////////////////////////////////////////////////////////////
  // Predicates
  ////////////////////////////////////////////////////////////////////////

  // regular, left-regular, right-regular, completely-regular,
  // strongly-regular, C1..C8, K2, K3
  std::vector<std::string> const& predicate_names();

  bool is_predicate_name(std::string_view name);

  // Throws UsageError for unknown names.
  bool evaluate_predicate(std::string_view             name,
                          OrderedGammaStructure const& M);

  // Decides the predicate along a second route: membership form for regular,
  // element witnesses for left/right regular, the subsemigroup form for
  // strongly regular, and the fresh verdict flags for C1..K3.
  bool reverify_predicate(std::string_view             name,
                          OrderedGammaStructure const& M,
                          EquivalenceVerdict const&    verdict);

  ////////////////////////////////////////////////////////////////////////
  // Search
  ////////////////////////////////////////////////////////////////////////

  struct SearchQuery {
    std::size_t              n = 1;
    std::size_t              k = 1;
    std::vector<std::string> sat;
    std::vector<std::string> unsat;
    std::size_t              limit = std::numeric_limits<std::size_t>::max();
    OrderMode                order_mode = OrderMode::all;
  };

  struct SearchHit {
    OrderedGammaStructure structure;
    EquivalenceVerdict    verdict;
  };

  struct SearchResult {
    std::vector<SearchHit> hits;
    std::size_t            examined  = 0;      // ordered structures looked at
    bool                   truncated = false;  // stopped at the limit
  };

  // Hits come out in enumeration order regardless of `threads`; 0 means
  // std::thread::hardware_concurrency(). Throws UsageError for unknown
  // predicates, ResourceError outside the budget, std::logic_error if a hit
  // fails re-verification.
  SearchResult run_search(SearchQuery const&       q,
                          EnumerationBudget const& budget  = {},
                          std::size_t              threads = 0);

}  // namespace gammasg

#endif  // GAMMASG_SEARCH_HPP_

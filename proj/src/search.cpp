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

#include "gammasg/search.hpp"

#include <algorithm>  // for find, min
#include <atomic>     // for atomic
#include <optional>   // for optional
#include <stdexcept>  // for logic_error
#include <thread>     // for thread

#include "gammasg/errors.hpp"
#include "gammasg/regularity.hpp"

namespace gammasg {

  namespace {
    using Table = std::vector<std::uint8_t>;

    // Row-major backtracking over a single n x n table. A partial table is
    // rejected as soon as some fully determined triple breaks associativity.
    class SingleTableSearch {
     public:
      explicit SingleTableSearch(std::size_t n) : _n(n), _cells(n * n, -1) {}

      bool run(std::function<bool(Table const&)> const& emit) {
        return descend(0, emit);
      }

     private:
      int cell(std::size_t x, std::size_t y) const {
        return _cells[x * _n + y];
      }

      bool consistent() const {
        for (std::size_t a = 0; a < _n; ++a) {
          for (std::size_t b = 0; b < _n; ++b) {
            int const ab = cell(a, b);
            if (ab < 0) {
              continue;
            }
            for (std::size_t c = 0; c < _n; ++c) {
              int const bc = cell(b, c);
              if (bc < 0) {
                continue;
              }
              int const lhs = cell(ab, c);
              int const rhs = cell(a, bc);
              if (lhs >= 0 && rhs >= 0 && lhs != rhs) {
                return false;
              }
            }
          }
        }
        return true;
      }

      bool descend(std::size_t                              pos,
                   std::function<bool(Table const&)> const& emit) {
        if (pos == _cells.size()) {
          return emit(Table(_cells.begin(), _cells.end()));
        }
        for (std::size_t v = 0; v < _n; ++v) {
          _cells[pos] = static_cast<int>(v);
          if (consistent() && !descend(pos + 1, emit)) {
            _cells[pos] = -1;
            return false;
          }
        }
        _cells[pos] = -1;
        return true;
      }

      std::size_t      _n;
      std::vector<int> _cells;
    };

    // (x A y) B z == x A (y B z) for all x, y, z
    bool mixed_associative(std::size_t n, Table const& A, Table const& B) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          std::size_t const xy = A[x * n + y];
          for (std::size_t z = 0; z < n; ++z) {
            if (B[xy * n + z] != A[x * n + B[y * n + z]]) {
              return false;
            }
          }
        }
      }
      return true;
    }

    class TupleSearch {
     public:
      TupleSearch(std::size_t n, std::size_t k, std::vector<Table> singles)
          : _n(n),
            _k(k),
            _singles(std::move(singles)),
            _compat(_singles.size() * _singles.size(), -1) {}

      bool run(std::function<bool(GammaStructure const&)> const& visit) {
        _chosen.clear();
        return descend(visit);
      }

     private:
      bool compatible(std::size_t i, std::size_t j) {
        auto& c = _compat[i * _singles.size() + j];
        if (c < 0) {
          c = mixed_associative(_n, _singles[i], _singles[j])
              && mixed_associative(_n, _singles[j], _singles[i]);
          _compat[j * _singles.size() + i] = c;
        }
        return c == 1;
      }

      bool descend(std::function<bool(GammaStructure const&)> const& visit) {
        if (_chosen.size() == _k) {
          Table entries;
          entries.reserve(_k * _n * _n);
          for (auto i : _chosen) {
            entries.insert(
                entries.end(), _singles[i].begin(), _singles[i].end());
          }
          return visit(GammaStructure::unchecked(_n, _k, std::move(entries)));
        }
        for (std::size_t i = 0; i < _singles.size(); ++i) {
          bool ok = true;
          for (auto j : _chosen) {
            if (!compatible(j, i)) {
              ok = false;
              break;
            }
          }
          if (!ok) {
            continue;
          }
          _chosen.push_back(i);
          bool const more = descend(visit);
          _chosen.pop_back();
          if (!more) {
            return false;
          }
        }
        return true;
      }

      std::size_t              _n;
      std::size_t              _k;
      std::vector<Table>       _singles;
      std::vector<signed char> _compat;
      std::vector<std::size_t> _chosen;
    };

    struct PredicateEntry {
      std::string                name;
      std::optional<ConditionId> condition;
    };

    std::vector<PredicateEntry> const& predicate_table() {
      static std::vector<PredicateEntry> const table = [] {
        std::vector<PredicateEntry> t = {{"regular", std::nullopt},
                                         {"left-regular", std::nullopt},
                                         {"right-regular", std::nullopt},
                                         {"completely-regular", std::nullopt},
                                         {"strongly-regular", std::nullopt}};
        for (auto id : kAllConditions) {
          if (id != ConditionId::K1) {
            t.push_back({to_string(id), id});
          }
        }
        return t;
      }();
      return table;
    }

    PredicateEntry const& lookup(std::string_view name) {
      for (auto const& e : predicate_table()) {
        if (e.name == name) {
          return e;
        }
      }
      throw UsageError("unknown predicate \"" + std::string(name) + "\"");
    }
  }  // namespace

  EnumerationBudget EnumerationBudget::unlimited() {
    return {kMaxElements,
            kMaxElements,
            std::numeric_limits<std::size_t>::max(),
            kMaxElements};
  }

  void check_budget(std::size_t n, std::size_t k, EnumerationBudget const& b) {
    if (n == 0 || k == 0) {
      throw StructureError("enumeration needs n >= 1 and k >= 1");
    }
    std::size_t const max_n = k == 1 ? b.max_n_single_op : b.max_n_multi_op;
    if (n > max_n || k > b.max_k || n > kMaxElements) {
      throw ResourceError("enumeration budget exceeded: n = "
                          + std::to_string(n) + ", k = " + std::to_string(k)
                          + " (limits: n <= " + std::to_string(max_n)
                          + ", k <= " + std::to_string(b.max_k) + ")");
    }
  }

  void for_each_table_tuple(
      std::size_t                                       n,
      std::size_t                                       k,
      std::function<bool(GammaStructure const&)> const& visit,
      EnumerationBudget const&                          budget) {
    check_budget(n, k, budget);
    if (k == 1) {
      SingleTableSearch(n).run([&](Table const& t) {
        return visit(GammaStructure::unchecked(n, 1, t));
      });
      return;
    }
    std::vector<Table> singles;
    SingleTableSearch(n).run([&](Table const& t) {
      singles.push_back(t);
      return true;
    });
    TupleSearch(n, k, std::move(singles)).run(visit);
  }

  std::vector<GammaStructure> enumerate_tables(
      std::size_t n, std::size_t k, EnumerationBudget const& budget) {
    std::vector<GammaStructure> result;
    for_each_table_tuple(
        n,
        k,
        [&](GammaStructure const& s) {
          result.push_back(s);
          return true;
        },
        budget);
    return result;
  }

  std::vector<OrderRelation> enumerate_partial_orders(
      std::size_t n, EnumerationBudget const& budget) {
    if (n == 0) {
      throw StructureError("enumeration needs n >= 1");
    }
    if (n > budget.max_n_orders || n * (n - 1) >= 63) {
      throw ResourceError("order enumeration budget exceeded: n = "
                          + std::to_string(n) + " (limit "
                          + std::to_string(budget.max_n_orders) + ")");
    }
    std::vector<std::pair<std::size_t, std::size_t>> strict;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) {
          strict.emplace_back(i, j);
        }
      }
    }
    std::vector<OrderRelation> result;
    std::uint64_t const        limit = std::uint64_t(1) << strict.size();
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
      RawOrder leq(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i) {
        leq[i][i] = true;
      }
      for (std::size_t p = 0; p < strict.size(); ++p) {
        if ((bits >> p) & 1U) {
          leq[strict[p].first][strict[p].second] = true;
        }
      }
      if (validate_order(leq, n).ok()) {
        result.push_back(OrderRelation::unchecked(leq));
      }
    }
    return result;
  }

  std::vector<OrderRelation> enumerate_orders(GammaStructure const& structure,
                                              EnumerationBudget const& budget) {
    std::vector<OrderRelation> result;
    for (auto& order : enumerate_partial_orders(structure.size(), budget)) {
      if (validate_compatibility(structure, order).ok()) {
        result.push_back(std::move(order));
      }
    }
    return result;
  }

  void for_each_ordered_structure(
      std::size_t                                              n,
      std::size_t                                              k,
      OrderMode                                                mode,
      std::function<bool(OrderedGammaStructure const&)> const& visit,
      EnumerationBudget const&                                 budget) {
    std::vector<OrderRelation> orders;
    if (mode == OrderMode::all) {
      orders = enumerate_partial_orders(n, budget);
    } else {
      orders.push_back(OrderRelation::equality(n));
    }
    for_each_table_tuple(
        n,
        k,
        [&](GammaStructure const& s) {
          for (auto const& order : orders) {
            if (validate_compatibility(s, order).ok()
                && !visit(OrderedGammaStructure::unchecked(s, order))) {
              return false;
            }
          }
          return true;
        },
        budget);
  }

  std::vector<std::string> const& predicate_names() {
    static std::vector<std::string> const names = [] {
      std::vector<std::string> result;
      for (auto const& e : predicate_table()) {
        result.push_back(e.name);
      }
      return result;
    }();
    return names;
  }

  bool is_predicate_name(std::string_view name) {
    auto const& names = predicate_names();
    return std::find(names.begin(), names.end(), name) != names.end();
  }

  bool evaluate_predicate(std::string_view             name,
                          OrderedGammaStructure const& M) {
    auto const& entry = lookup(name);
    if (entry.condition) {
      return check_condition(M, *entry.condition).holds;
    }
    if (name == "regular") {
      return is_regular(M);
    } else if (name == "left-regular") {
      return is_left_regular(M);
    } else if (name == "right-regular") {
      return is_right_regular(M);
    } else if (name == "completely-regular") {
      return is_completely_regular(M);
    }
    return is_strongly_regular(M);
  }

  bool reverify_predicate(std::string_view             name,
                          OrderedGammaStructure const& M,
                          EquivalenceVerdict const&    verdict) {
    auto const& entry = lookup(name);
    if (entry.condition) {
      return verdict.flag(*entry.condition);
    }
    auto all_have = [&](auto&& witness) {
      for (element_index a = 0; a < M.size(); ++a) {
        if (!witness(M, a)) {
          return false;
        }
      }
      return true;
    };
    bool const regular = is_regular_by_membership(M);
    bool const left    = all_have(left_regular_witness);
    bool const right   = all_have(right_regular_witness);
    if (name == "regular") {
      return regular;
    } else if (name == "left-regular") {
      return left;
    } else if (name == "right-regular") {
      return right;
    } else if (name == "completely-regular") {
      return regular && left && right;
    }
    return is_strongly_regular_subsemigroup(M, M.full());
  }

  SearchResult run_search(SearchQuery const&       q,
                          EnumerationBudget const& budget,
                          std::size_t              threads) {
    for (auto const& name : q.sat) {
      lookup(name);
    }
    for (auto const& name : q.unsat) {
      lookup(name);
    }
    check_budget(q.n, q.k, budget);
    if (threads == 0) {
      threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    }

    auto matches = [&q](OrderedGammaStructure const& M) {
      for (auto const& name : q.sat) {
        if (!evaluate_predicate(name, M)) {
          return false;
        }
      }
      for (auto const& name : q.unsat) {
        if (evaluate_predicate(name, M)) {
          return false;
        }
      }
      return true;
    };

    SearchResult                       result;
    std::vector<OrderedGammaStructure> batch;
    constexpr std::size_t              kBatch = 512;

    // Evaluates the batch in parallel, then scans it in enumeration order.
    // Returns false once the limit is reached.
    auto flush = [&]() -> bool {
      std::vector<char>        hit(batch.size(), 0);
      std::atomic<std::size_t> next{0};
      auto                     worker = [&] {
        for (std::size_t i = next++; i < batch.size(); i = next++) {
          hit[i] = matches(batch[i]);
        }
      };
      std::vector<std::thread> pool;
      std::size_t const        extra = std::min(threads, batch.size()) - 1;
      for (std::size_t t = 0; t < extra; ++t) {
        pool.emplace_back(worker);
      }
      worker();
      for (auto& t : pool) {
        t.join();
      }
      for (std::size_t i = 0; i < batch.size(); ++i) {
        ++result.examined;
        if (!hit[i]) {
          continue;
        }
        if (result.hits.size() == q.limit) {
          result.truncated = true;
          return false;
        }
        auto verdict = equivalence_verdict(batch[i]);
        for (auto const& name : q.sat) {
          if (!reverify_predicate(name, batch[i], verdict)) {
            throw std::logic_error("search hit failed re-verification of "
                                   + name);
          }
        }
        for (auto const& name : q.unsat) {
          if (reverify_predicate(name, batch[i], verdict)) {
            throw std::logic_error("search hit failed re-verification of not "
                                   + name);
          }
        }
        result.hits.push_back({batch[i], std::move(verdict)});
      }
      batch.clear();
      return true;
    };

    bool more = true;
    for_each_ordered_structure(
        q.n,
        q.k,
        q.order_mode,
        [&](OrderedGammaStructure const& M) {
          batch.push_back(M);
          if (batch.size() == kBatch) {
            more = flush();
          }
          return more;
        },
        budget);
    if (more && !batch.empty()) {
      flush();
    }
    return result;
  }

}  // namespace gammasg

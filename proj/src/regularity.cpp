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

#include "gammasg/regularity.hpp"

#include "gammasg/errors.hpp"
#include "gammasg/subsets.hpp"
#include "gammasg/substructs.hpp"

namespace gammasg {

  namespace {
    // First (x, γ, μ) in lexicographic order with a <= f(x, γ, μ).
    template <typename Term>
    std::optional<RegularWitness> search_below(OrderedGammaStructure const& M,
                                               element_index                a,
                                               Term&& term) {
      for (element_index x = 0; x < M.size(); ++x) {
        for (op_index g = 0; g < M.number_of_ops(); ++g) {
          for (op_index m = 0; m < M.number_of_ops(); ++m) {
            if (M.leq(a, term(x, g, m))) {
              return RegularWitness{a, x, g, m};
            }
          }
        }
      }
      return std::nullopt;
    }

    template <typename Pred>
    bool all_elements(OrderedGammaStructure const& M, Pred&& pred) {
      for (element_index a = 0; a < M.size(); ++a) {
        if (!pred(a)) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  bool is_strong_witness(OrderedGammaStructure const& M,
                         StrongWitness const&         w) {
    auto const [a, x, g, m] = w;
    element_index const agx = M.product(a, g, x);
    return M.leq(a, M.product(agx, m, a)) && agx == M.product(x, g, a)
           && agx == M.product(x, m, a) && agx == M.product(a, m, x);
  }

  std::optional<RegularWitness> regular_witness(OrderedGammaStructure const& M,
                                                element_index a) {
    return search_below(M, a, [&](element_index x, op_index g, op_index m) {
      return M.product(M.product(a, g, x), m, a);
    });
  }

  std::optional<RegularWitness> left_regular_witness(
      OrderedGammaStructure const& M, element_index a) {
    return search_below(M, a, [&](element_index x, op_index g, op_index m) {
      return M.product(M.product(x, g, a), m, a);
    });
  }

  std::optional<RegularWitness> right_regular_witness(
      OrderedGammaStructure const& M, element_index a) {
    return search_below(M, a, [&](element_index x, op_index g, op_index m) {
      return M.product(M.product(a, g, a), m, x);
    });
  }

  bool is_regular(OrderedGammaStructure const& M) {
    return all_elements(
        M, [&](element_index a) { return regular_witness(M, a).has_value(); });
  }

  bool is_regular_by_membership(OrderedGammaStructure const& M) {
    return all_elements(M, [&](element_index a) {
      auto const A = M.singleton(a);
      return down_closure(M, product_gamma(M, product_gamma(M, A, M.full()), A))
          .contains(a);
    });
  }

  bool is_left_regular(OrderedGammaStructure const& M) {
    return all_elements(M, [&](element_index a) {
      return principal_set(M, Pattern::m_a_a, a).contains(a);
    });
  }

  bool is_right_regular(OrderedGammaStructure const& M) {
    return all_elements(M, [&](element_index a) {
      return principal_set(M, Pattern::a_a_m, a).contains(a);
    });
  }

  bool is_completely_regular(OrderedGammaStructure const& M) {
    return is_regular(M) && is_left_regular(M) && is_right_regular(M);
  }

  std::optional<StrongWitness> strong_witness(OrderedGammaStructure const& M,
                                              element_index                a,
                                              SubsetMask const&            T) {
    if (a >= M.size() || !T.contains(a)) {
      throw UsageError("strong_witness: element " + std::to_string(a)
                       + " is not in the given subset");
    }
    for (auto x : T) {
      for (op_index g = 0; g < M.number_of_ops(); ++g) {
        for (op_index m = 0; m < M.number_of_ops(); ++m) {
          StrongWitness w{a, x, g, m};
          if (is_strong_witness(M, w)) {
            return w;
          }
        }
      }
    }
    return std::nullopt;
  }

  bool is_strongly_regular(OrderedGammaStructure const& M) {
    auto const all = M.full();
    return all_elements(M, [&](element_index a) {
      return strong_witness(M, a, all).has_value();
    });
  }

  std::optional<SrsDefect> srs_defect(OrderedGammaStructure const& M,
                                      SubsetMask const&            T) {
    if (T.empty()) {
      return SrsDefect{SrsDefect::Kind::empty};
    }
    for (auto x : T) {
      for (auto y : T) {
        for (op_index op = 0; op < M.number_of_ops(); ++op) {
          if (!T.contains(M.product(x, op, y))) {
            return SrsDefect{SrsDefect::Kind::not_closed, x, op, y};
          }
        }
      }
    }
    for (auto a : T) {
      if (!strong_witness(M, a, T)) {
        return SrsDefect{SrsDefect::Kind::no_witness, a};
      }
    }
    return std::nullopt;
  }

  bool is_strongly_regular_subsemigroup(OrderedGammaStructure const& M,
                                        SubsetMask const&            T) {
    if (!is_subsemigroup(M, T)) {
      return false;
    }
    for (auto a : T) {
      if (!strong_witness(M, a, T)) {
        return false;
      }
    }
    return true;
  }

  StrongWitness upgrade_witness(OrderedGammaStructure const& M,
                                StrongWitness const&         w) {
    element_index const y = M.product(M.product(w.x, w.mu, w.a), w.gamma, w.x);
    return StrongWitness{w.a, y, w.gamma, w.mu};
  }

}  // namespace gammasg

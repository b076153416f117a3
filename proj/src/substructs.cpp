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

#include "gammasg/substructs.hpp"

#include "gammasg/errors.hpp"
#include "gammasg/subsets.hpp"

namespace gammasg {

  bool is_subsemigroup(OrderedGammaStructure const& M, SubsetMask const& T) {
    return !T.empty() && product_gamma(M, T, T).is_subset_of(T);
  }

  bool is_left_ideal(OrderedGammaStructure const& M, SubsetMask const& A) {
    return !A.empty() && product_gamma(M, M.full(), A).is_subset_of(A)
           && down_closure(M, A) == A;
  }

  bool is_right_ideal(OrderedGammaStructure const& M, SubsetMask const& A) {
    return !A.empty() && product_gamma(M, A, M.full()).is_subset_of(A)
           && down_closure(M, A) == A;
  }

  bool is_filter(OrderedGammaStructure const& M, SubsetMask const& F) {
    if (!is_subsemigroup(M, F) || up_closure(M, F) != F) {
      return false;
    }
    for (element_index x = 0; x < M.size(); ++x) {
      for (element_index y = 0; y < M.size(); ++y) {
        if (F.contains(x) && F.contains(y)) {
          continue;
        }
        for (op_index op = 0; op < M.number_of_ops(); ++op) {
          if (F.contains(M.product(x, op, y))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  element_index semiprime_counterexample(OrderedGammaStructure const& M,
                                         SubsetMask const&            T) {
    for (element_index a = 0; a < M.size(); ++a) {
      if (!T.contains(a)) {
        auto aa = M.singleton(a);
        if (product_gamma(M, aa, aa).is_subset_of(T)) {
          return a;
        }
      }
    }
    return M.size();
  }

  bool is_semiprime(OrderedGammaStructure const& M, SubsetMask const& T) {
    return semiprime_counterexample(M, T) == M.size();
  }

  SubsetMask filter_generated(OrderedGammaStructure const& M, element_index a) {
    SubsetMask current = M.singleton(a);
    while (true) {
      SubsetMask next =
          current | product_gamma(M, current, current) | up_closure(M, current);
      for (element_index x = 0; x < M.size(); ++x) {
        for (element_index y = 0; y < M.size(); ++y) {
          for (op_index op = 0; op < M.number_of_ops(); ++op) {
            if (current.contains(M.product(x, op, y))) {
              next.insert(x);
              next.insert(y);
              break;
            }
          }
        }
      }
      if (next == current) {
        return current;
      }
      current = next;
    }
  }

  std::string to_string(SubstructureKind kind) {
    switch (kind) {
      case SubstructureKind::left_ideal:
        return "left-ideal";
      case SubstructureKind::right_ideal:
        return "right-ideal";
      case SubstructureKind::filter:
        return "filter";
      case SubstructureKind::subsemigroup:
        return "subsemigroup";
    }
    return "?";
  }

  std::vector<SubsetMask> enumerate_substructures(
      OrderedGammaStructure const& M, SubstructureKind kind, std::size_t cap) {
    std::size_t const n = M.size();
    if (n > cap || n >= 64) {
      throw ResourceError("enumerate_substructures: n = " + std::to_string(n)
                          + " exceeds the subset scan cap of "
                          + std::to_string(cap));
    }
    std::vector<SubsetMask> result;
    std::uint64_t const     limit = std::uint64_t(1) << n;
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
      auto A    = SubsetMask::from_bits(n, bits);
      bool keep = false;
      switch (kind) {
        case SubstructureKind::left_ideal:
          keep = is_left_ideal(M, A);
          break;
        case SubstructureKind::right_ideal:
          keep = is_right_ideal(M, A);
          break;
        case SubstructureKind::filter:
          keep = is_filter(M, A);
          break;
        case SubstructureKind::subsemigroup:
          keep = is_subsemigroup(M, A);
          break;
      }
      if (keep) {
        result.push_back(A);
      }
    }
    return result;
  }

}  // namespace gammasg

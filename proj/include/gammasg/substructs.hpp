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

// Subsemigroups, one-sided ideals, filters and semiprime subsets.
//
// The empty set is never a substructure; every predicate below returns false
// for it.

#ifndef GAMMASG_SUBSTRUCTS_HPP_
#define GAMMASG_SUBSTRUCTS_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "gammasg/core.hpp"
#include "gammasg/subset-mask.hpp"

namespace gammasg {

  // T nonempty and TΓT ⊆ T.
  bool is_subsemigroup(OrderedGammaStructure const& M, SubsetMask const& T);

  // A nonempty, MΓA ⊆ A and (A] = A.
  bool is_left_ideal(OrderedGammaStructure const& M, SubsetMask const& A);
  // A nonempty, AΓM ⊆ A and (A] = A.
  bool is_right_ideal(OrderedGammaStructure const& M, SubsetMask const& A);

  // F a subsemigroup, x γ y in F forces x, y in F, and [F) = F.
  bool is_filter(OrderedGammaStructure const& M, SubsetMask const& F);

  // aΓa ⊆ T implies a in T, for every element a.
  bool is_semiprime(OrderedGammaStructure const& M, SubsetMask const& T);

  // Least element a with aΓa ⊆ T and a not in T, or M.size() if T is
  // semiprime.
  element_index semiprime_counterexample(OrderedGammaStructure const& M,
                                         SubsetMask const&            T);

  // N(a): least filter containing a, computed as a forward fixpoint.
  SubsetMask filter_generated(OrderedGammaStructure const& M, element_index a);

  enum class SubstructureKind { left_ideal, right_ideal, filter, subsemigroup };

  std::string to_string(SubstructureKind kind);

  inline constexpr std::size_t kDefaultSubsetScanCap = 16;

  // Every nonempty subset of the given kind, ascending by mask value.
  // Throws ResourceError if M.size() > cap.
  std::vector<SubsetMask> enumerate_substructures(
      OrderedGammaStructure const& M,
      SubstructureKind             kind,
      std::size_t                  cap = kDefaultSubsetScanCap);

}  // namespace gammasg

#endif  // GAMMASG_SUBSTRUCTS_HPP_

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

// Regularity notions on an ordered Γ-semigroup M, each decided per element
// with an explicit certificate.
//
//   regular           a in (aΓMΓa]
//   left regular      a in (MΓaΓa]
//   right regular     a in (aΓaΓM]
//   strongly regular  a <= aγxμa and aγx == xγa == xμa == aμx
//
// Witness searches run over (x, γ, μ) in lexicographic order, so reported
// witnesses are the lexicographically least ones.

#ifndef GAMMASG_REGULARITY_HPP_
#define GAMMASG_REGULARITY_HPP_

#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "gammasg/core.hpp"
#include "gammasg/subset-mask.hpp"

namespace gammasg {

  // a <= aγxμa (regular), a <= xγaμa (left), a <= aγaμx (right).
  struct RegularWitness {
    element_index a;
    element_index x;
    op_index      gamma;
    op_index      mu;
    friend bool   operator==(RegularWitness const&,
                             RegularWitness const&) = default;
  };

  // a <= aγxμa and aγx == xγa == xμa == aμx.
  struct StrongWitness {
    element_index a;
    element_index x;
    op_index      gamma;
    op_index      mu;
    friend bool   operator==(StrongWitness const&,
                             StrongWitness const&) = default;
  };

  bool is_strong_witness(OrderedGammaStructure const& M,
                         StrongWitness const&         w);

  std::optional<RegularWitness> regular_witness(OrderedGammaStructure const& M,
                                                element_index                a);
  std::optional<RegularWitness> left_regular_witness(
      OrderedGammaStructure const& M, element_index a);
  std::optional<RegularWitness> right_regular_witness(
      OrderedGammaStructure const& M, element_index a);

  bool is_regular(OrderedGammaStructure const& M);
  // Same predicate via a in (aΓMΓa], without a witness search.
  bool is_regular_by_membership(OrderedGammaStructure const& M);
  bool is_left_regular(OrderedGammaStructure const& M);
  bool is_right_regular(OrderedGammaStructure const& M);
  bool is_completely_regular(OrderedGammaStructure const& M);

  // Least (x, γ, μ) with x in T. Throws UsageError if a is not in T.
  std::optional<StrongWitness> strong_witness(OrderedGammaStructure const& M,
                                              element_index                a,
                                              SubsetMask const&            T);

  bool is_strongly_regular(OrderedGammaStructure const& M);

  // T with M's operations and order restricted to it.
  bool is_strongly_regular_subsemigroup(OrderedGammaStructure const& M,
                                        SubsetMask const&            T);

  // Why T fails to be a strongly regular subsemigroup.
  struct SrsDefect {
    enum class Kind { empty, not_closed, no_witness };
    Kind kind;
    // not_closed: x op y leaves T; no_witness: element lacking a witness.
    element_index x  = 0;
    op_index      op = 0;
    element_index y  = 0;
  };

  std::optional<SrsDefect> srs_defect(OrderedGammaStructure const& M,
                                      SubsetMask const&            T);

  // y := xμaγx for a strong witness (a, x, γ, μ); returned with the same
  // γ and μ.
  StrongWitness upgrade_witness(OrderedGammaStructure const& M,
                                StrongWitness const&         w);

}  // namespace gammasg

#endif  // GAMMASG_REGULARITY_HPP_

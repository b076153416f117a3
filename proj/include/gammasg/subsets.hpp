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

// Subset algebra over a fixed ordered Γ-semigroup M.
//
//   A γ B  = { a γ b : a in A, b in B }         product
//   A Γ B  = union over γ of A γ B               product_gamma
//   (H]    = { t : t <= h for some h in H }      down_closure
//   [H)    = { t : h <= t for some h in H }      up_closure
//
// Empty sets propagate: anything times the empty set is empty.

#ifndef GAMMASG_SUBSETS_HPP_
#define GAMMASG_SUBSETS_HPP_

#include <array>        // for array
#include <string>       // for string
#include <string_view>  // for string_view

#include "gammasg/core.hpp"
#include "gammasg/subset-mask.hpp"

namespace gammasg {

  SubsetMask product(OrderedGammaStructure const& M,
                     SubsetMask const&            A,
                     op_index                     op,
                     SubsetMask const&            B);

  SubsetMask product_gamma(OrderedGammaStructure const& M,
                           SubsetMask const&            A,
                           SubsetMask const&            B);

  SubsetMask down_closure(OrderedGammaStructure const& M, SubsetMask const& H);
  SubsetMask up_closure(OrderedGammaStructure const& M, SubsetMask const& H);

  // The principal sets built from a single element a. All but the last are
  // downward closed.
  enum class Pattern {
    m_a,     // (MΓa]
    a_m,     // (aΓM]
    m_a_m,   // (MΓaΓM]
    m_a_a,   // (MΓaΓa]
    a_a_m,   // (aΓaΓM]
    m_a_a_m  // MΓaΓaΓM, no closure
  };

  inline constexpr std::array<Pattern, 6> kAllPatterns = {Pattern::m_a,
                                                          Pattern::a_m,
                                                          Pattern::m_a_m,
                                                          Pattern::m_a_a,
                                                          Pattern::a_a_m,
                                                          Pattern::m_a_a_m};

  // Accepts both the Γ spelling "(MΓaΓM]" and the ASCII spelling "(MGaGM]".
  // Throws UsageError for anything else.
  Pattern parse_pattern(std::string_view name);

  // ASCII spelling.
  std::string to_string(Pattern p);

  SubsetMask principal_set(OrderedGammaStructure const& M,
                           Pattern                      p,
                           element_index                a);

}  // namespace gammasg

#endif  // GAMMASG_SUBSETS_HPP_

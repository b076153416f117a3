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

// Eight characterizations of strong regularity (C1-C8) and three more in
// subset form (K1-K3), each decided by brute force over its own quantifiers.
// None of the checks delegates to another, so agreement of all eleven flags
// on a structure is a genuine cross-check.
//
//   C1  M is strongly regular.
//   C2  every a has y, γ, μ with a <= aγyμa, y <= yμaγy and
//       aγy == yγa == yμa == aμy.
//   C3  every 𝒩-class is a strongly regular subsemigroup.
//   C4  all left and right ideals are semiprime, and (LΓR] is a strongly
//       regular subsemigroup for every left ideal L and right ideal R.
//   C5  M is left and right regular, and (MΓaΓM] is a strongly regular
//       subsemigroup for every a.
//   C6  every a has e, e' in MΓaΓaΓM and ρ, μ with e <= eρe', a <= eμa,
//       a <= aρe', (MΓeΓM] == (MΓe'ΓM] == (MΓaΓM]; plus the (MΓaΓM] clause.
//   C7  every a has e, e' in M and ρ, μ with a <= eμa, a <= aρe'; plus the
//       (MΓaΓM] clause.
//   C8  a in (MΓa] ∩ (aΓM] for every a; plus the (MΓaΓM] clause.
//   K1  same as C1.
//   K2  with E := MΓaΓaΓM: E ⊆ (EΓE], a in (EΓa], a in (aΓE],
//       (MΓEΓM] == (MΓaΓM]; plus the (MΓaΓM] clause.
//   K3  some subset E has a in (EΓa] and a in (aΓE]; plus the (MΓaΓM]
//       clause.
//
// The "(MΓaΓM] clause" is: (MΓaΓM] is a strongly regular subsemigroup.

#ifndef GAMMASG_THEOREM_HPP_
#define GAMMASG_THEOREM_HPP_

#include <array>        // for array
#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "gammasg/core.hpp"
#include "gammasg/names.hpp"
#include "gammasg/subset-mask.hpp"
#include "gammasg/substructs.hpp"

namespace gammasg {

  enum class ConditionId { C1, C2, C3, C4, C5, C6, C7, C8, K1, K2, K3 };

  inline constexpr std::size_t kNumberOfConditions = 11;

  inline constexpr std::array<ConditionId, kNumberOfConditions> kAllConditions =
      {ConditionId::C1,
       ConditionId::C2,
       ConditionId::C3,
       ConditionId::C4,
       ConditionId::C5,
       ConditionId::C6,
       ConditionId::C7,
       ConditionId::C8,
       ConditionId::K1,
       ConditionId::K2,
       ConditionId::K3};

  std::string to_string(ConditionId id);
  // Throws UsageError for unknown names.
  ConditionId parse_condition(std::string_view name);

  struct Failure {
    std::optional<element_index> element;
    std::string                  reason;
  };

  // One named component of a certificate.
  struct WitnessField {
    enum class Kind { element, op, subset };
    std::string name;
    Kind        kind;
    std::size_t index = 0;  // element or op
    SubsetMask  subset;     // subset

    static WitnessField element_value(std::string name, element_index a) {
      return {std::move(name), Kind::element, a, {}};
    }
    static WitnessField op_value(std::string name, op_index g) {
      return {std::move(name), Kind::op, g, {}};
    }
    static WitnessField subset_value(std::string name, SubsetMask m) {
      return {std::move(name), Kind::subset, 0, std::move(m)};
    }
  };

  struct Witness {
    element_index             element;
    std::vector<WitnessField> fields;
  };

  struct ConditionReport {
    ConditionId          id;
    bool                 holds = true;
    std::vector<Failure> failures;
    std::vector<Witness> witnesses;
  };

  struct TheoremOptions {
    // Run K3's existential over all 2^n subsets instead of the E = M
    // shortcut. Subject to subset_cap.
    bool        k3_exhaustive = false;
    std::size_t subset_cap    = kDefaultSubsetScanCap;
    // Used to render failure reasons; indices if null.
    Names const* names = nullptr;
  };

  ConditionReport check_C1(OrderedGammaStructure const& M,
                           TheoremOptions const&        opts = {});
  ConditionReport check_C2(OrderedGammaStructure const& M,
                           TheoremOptions const&        opts = {});
  ConditionReport check_C3(OrderedGammaStructure const& M,
                           TheoremOptions const&        opts = {});
  // Throws ResourceError if M.size() > opts.subset_cap.
  ConditionReport check_C4(OrderedGammaStructure const& M,
                           TheoremOptions const&        opts = {});
  ConditionReport check_C5(OrderedGammaStructure const& M,
                           TheoremOptions const&        opts = {});
  ConditionReport check_C6(OrderedGammaStructure const& M,
                           TheoremOptions const&        opts = {});
  ConditionReport check_C7(OrderedGammaStructure const& M,
                           TheoremOptions const&        opts = {});
  ConditionReport check_C8(OrderedGammaStructure const& M,
                           TheoremOptions const&        opts = {});
  ConditionReport check_K1(OrderedGammaStructure const& M,
                           TheoremOptions const&        opts = {});
  ConditionReport check_K2(OrderedGammaStructure const& M,
                           TheoremOptions const&        opts = {});
  ConditionReport check_K3(OrderedGammaStructure const& M,
                           TheoremOptions const&        opts = {});

  ConditionReport check_condition(OrderedGammaStructure const& M,
                                  ConditionId                  id,
                                  TheoremOptions const&        opts = {});

  struct EquivalenceVerdict {
    std::array<bool, kNumberOfConditions> flags{};
    bool                                  consistent = true;
    std::vector<ConditionReport>          reports;

    bool flag(ConditionId id) const noexcept {
      return flags[static_cast<std::size_t>(id)];
    }
  };

  EquivalenceVerdict equivalence_verdict(OrderedGammaStructure const& M,
                                         TheoremOptions const& opts = {});

}  // namespace gammasg

#endif  // GAMMASG_THEOREM_HPP_

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

// The relation 𝒩 = { (a, b) : N(a) == N(b) } and generic equivalence
// relations on M, with congruence checks.

#ifndef GAMMASG_NREL_HPP_
#define GAMMASG_NREL_HPP_

#include <cstddef>  // for size_t
#include <vector>   // for vector

#include "gammasg/core.hpp"
#include "gammasg/subset-mask.hpp"

namespace gammasg {

  // An equivalence relation on {0, ..., n - 1} stored as a partition. Classes
  // are numbered in order of their least element.
  class EqRelation {
   public:
    // Any labelling of the elements; labels are renumbered.
    static EqRelation from_labels(std::vector<std::size_t> const& labels);
    // Throws UsageError unless the classes partition {0, ..., n - 1}.
    static EqRelation from_classes(std::size_t                    n,
                                   std::vector<SubsetMask> const& classes);
    static EqRelation identity(std::size_t n);
    static EqRelation universal(std::size_t n);

    std::size_t size() const noexcept {
      return _class_id.size();
    }

    std::size_t number_of_classes() const noexcept {
      return _classes.size();
    }

    std::size_t class_id(element_index a) const noexcept {
      return _class_id[a];
    }

    bool related(element_index a, element_index b) const noexcept {
      return _class_id[a] == _class_id[b];
    }

    std::vector<SubsetMask> const& classes() const noexcept {
      return _classes;
    }

    SubsetMask const& class_of(element_index a) const noexcept {
      return _classes[_class_id[a]];
    }

    friend bool operator==(EqRelation const&, EqRelation const&) = default;

   private:
    std::vector<std::size_t> _class_id;
    std::vector<SubsetMask>  _classes;
  };

  // 𝒩, via filter_generated.
  EqRelation n_relation(OrderedGammaStructure const& M);

  // (a, b) in σ implies (aγc, bγc) and (cγa, cγb) in σ.
  bool is_congruence(OrderedGammaStructure const& M, EqRelation const& rel);

  // A congruence with (aγb, bγa) in σ and (a, aγa) in σ for all a, b, γ.
  bool is_semilattice_congruence(OrderedGammaStructure const& M,
                                 EqRelation const&            rel);

}  // namespace gammasg

#endif  // GAMMASG_NREL_HPP_

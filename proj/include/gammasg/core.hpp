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

// Finite ordered Γ-semigroups.
//
// A Γ-semigroup here is a carrier M = {0, ..., n - 1} together with k total
// binary operations Γ = {0, ..., k - 1} (one Cayley table each) satisfying
// mixed associativity:
//
//   (x ρ y) ω z == x ρ (y ω z)   for all x, y, z in M and ρ, ω in Γ.
//
// An ordered Γ-semigroup additionally carries a partial order that is
// compatible with every operation on both sides. With k == 1 this is just an
// ordered semigroup.
//
// Elements and operations are plain 0-based indices; names live in the I/O
// layer (see document.hpp).

#ifndef GAMMASG_CORE_HPP_
#define GAMMASG_CORE_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint8_t
#include <string>   // for string
#include <variant>  // for variant
#include <vector>   // for vector

#include "gammasg/names.hpp"
#include "gammasg/subset-mask.hpp"

namespace gammasg {

  // tables[op][x][y] == x op y
  using RawTable  = std::vector<std::vector<std::size_t>>;
  using RawTables = std::vector<RawTable>;
  // leq[i][j] == (i <= j)
  using RawOrder = std::vector<std::vector<bool>>;

  ////////////////////////////////////////////////////////////////////////
  // Violations
  ////////////////////////////////////////////////////////////////////////

  struct OutOfRangeEntry {
    op_index      op;
    element_index x, y;
    std::size_t   value;
    friend bool   operator==(OutOfRangeEntry const&,
                             OutOfRangeEntry const&) = default;
  };

  // (x rho y) omega z != x rho (y omega z)
  struct AssociativityViolation {
    op_index      rho, omega;
    element_index x, y, z;
    friend bool   operator==(AssociativityViolation const&,
                             AssociativityViolation const&) = default;
  };

  struct ReflexivityViolation {
    element_index i;
    friend bool   operator==(ReflexivityViolation const&,
                             ReflexivityViolation const&) = default;
  };

  // i <= j and j <= i with i < j
  struct AntisymmetryViolation {
    element_index i, j;
    friend bool   operator==(AntisymmetryViolation const&,
                             AntisymmetryViolation const&) = default;
  };

  // i <= j and j <= l but not i <= l
  struct TransitivityViolation {
    element_index i, j, l;
    friend bool   operator==(TransitivityViolation const&,
                             TransitivityViolation const&) = default;
  };

  // Which side the fixed element c multiplies from.
  enum class Side {
    right,  // a <= b but not a op c <= b op c
    left    // a <= b but not c op a <= c op b
  };

  struct CompatibilityViolation {
    element_index a, b, c;
    op_index      op;
    Side          side;
    friend bool   operator==(CompatibilityViolation const&,
                             CompatibilityViolation const&) = default;
  };

  using Violation = std::variant<OutOfRangeEntry,
                                 AssociativityViolation,
                                 ReflexivityViolation,
                                 AntisymmetryViolation,
                                 TransitivityViolation,
                                 CompatibilityViolation>;

  // Element and operation indices are rendered through `names` if given.
  std::string describe(Violation const& v, Names const* names = nullptr);

  struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept {
      return violations.empty();
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Validators
  ////////////////////////////////////////////////////////////////////////

  // Lists every out-of-range entry and every violated mixed-associativity
  // instance (rho, omega, x, y, z), in lexicographic order of that tuple.
  // Throws StructureError if the shape is not k tables of n x n.
  ValidationReport validate_tables(RawTables const& tables,
                                   std::size_t      n,
                                   std::size_t      k);

  // Reflexivity, antisymmetry (i < j), transitivity violations.
  // Throws StructureError if leq is not n x n.
  ValidationReport validate_order(RawOrder const& leq, std::size_t n);

  class GammaStructure;
  class OrderRelation;

  ValidationReport validate_compatibility(GammaStructure const& structure,
                                          OrderRelation const&  order);

  ////////////////////////////////////////////////////////////////////////
  // GammaStructure
  ////////////////////////////////////////////////////////////////////////

  class GammaStructure {
   public:
    // Throws StructureError unless tables is a valid Γ-semigroup.
    explicit GammaStructure(RawTables const& tables);

    // entries[op * n * n + x * n + y] == x op y. The caller guarantees range
    // and mixed associativity; used by the enumerator, which has already
    // checked both.
    static GammaStructure unchecked(std::size_t               n,
                                    std::size_t               k,
                                    std::vector<std::uint8_t> entries);

    std::size_t size() const noexcept {
      return _n;
    }

    std::size_t number_of_ops() const noexcept {
      return _k;
    }

    element_index product(element_index x,
                          op_index      op,
                          element_index y) const noexcept {
      return _entries[(op * _n + x) * _n + y];
    }

    RawTables tables() const;

    std::vector<std::uint8_t> const& entries() const noexcept {
      return _entries;
    }

    friend bool operator==(GammaStructure const&,
                           GammaStructure const&) = default;

   private:
    GammaStructure() = default;

    std::size_t               _n = 0;
    std::size_t               _k = 0;
    std::vector<std::uint8_t> _entries;
  };

  ////////////////////////////////////////////////////////////////////////
  // OrderRelation
  ////////////////////////////////////////////////////////////////////////

  class OrderRelation {
   public:
    // Throws StructureError unless leq is a partial order.
    explicit OrderRelation(RawOrder const& leq);

    static OrderRelation equality(std::size_t n);

    // The caller guarantees leq is a partial order.
    static OrderRelation unchecked(RawOrder const& leq);

    std::size_t size() const noexcept {
      return _below.size();
    }

    bool leq(element_index i, element_index j) const noexcept {
      return _below[j].contains(i);
    }

    // { t : t <= j }
    SubsetMask const& below(element_index j) const noexcept {
      return _below[j];
    }

    // { t : i <= t }
    SubsetMask const& above(element_index i) const noexcept {
      return _above[i];
    }

    RawOrder matrix() const;

    friend bool operator==(OrderRelation const& lhs, OrderRelation const& rhs) {
      return lhs._below == rhs._below;
    }

   private:
    OrderRelation() = default;
    void init(RawOrder const& leq);

    std::vector<SubsetMask> _below;
    std::vector<SubsetMask> _above;
  };

  ////////////////////////////////////////////////////////////////////////
  // OrderedGammaStructure
  ////////////////////////////////////////////////////////////////////////

  class OrderedGammaStructure {
   public:
    // Throws StructureError if the order is not compatible or the sizes
    // differ.
    OrderedGammaStructure(GammaStructure structure, OrderRelation order);

    // Equality order.
    explicit OrderedGammaStructure(GammaStructure structure);

    static OrderedGammaStructure unchecked(GammaStructure structure,
                                           OrderRelation  order);

    GammaStructure const& structure() const noexcept {
      return _structure;
    }

    OrderRelation const& order() const noexcept {
      return _order;
    }

    std::size_t size() const noexcept {
      return _structure.size();
    }

    std::size_t number_of_ops() const noexcept {
      return _structure.number_of_ops();
    }

    element_index product(element_index x,
                          op_index      op,
                          element_index y) const noexcept {
      return _structure.product(x, op, y);
    }

    bool leq(element_index i, element_index j) const noexcept {
      return _order.leq(i, j);
    }

    SubsetMask full() const {
      return SubsetMask::full(size());
    }

    SubsetMask empty_set() const {
      return SubsetMask(size());
    }

    SubsetMask singleton(element_index a) const {
      return SubsetMask::singleton(size(), a);
    }

    friend bool operator==(OrderedGammaStructure const&,
                           OrderedGammaStructure const&) = default;

   private:
    struct unchecked_tag {};
    OrderedGammaStructure(unchecked_tag, GammaStructure s, OrderRelation o)
        : _structure(std::move(s)), _order(std::move(o)) {}

    GammaStructure _structure;
    OrderRelation  _order;
  };

}  // namespace gammasg

#endif  // GAMMASG_CORE_HPP_

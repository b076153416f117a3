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

// The v1 text format for ordered Γ-semigroups (".gps" files):
//
//   gamma-structure v1
//   elements: a b
//   gammas: g m
//   table g:
//   a b
//   b a
//   table m:
//   b a
//   a b
//   order:
//   # one "x <= y" line per strict pair
//
// Line oriented; `#` starts a comment; tokens are whitespace separated.
// Reflexive order pairs are implied. Every strict pair must be listed and the
// listed pairs must already be transitively closed; a missing "order:"
// section means the equality order.

#ifndef GAMMASG_DOCUMENT_HPP_
#define GAMMASG_DOCUMENT_HPP_

#include <cstddef>      // for size_t
#include <stdexcept>    // for runtime_error
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "gammasg/core.hpp"
#include "gammasg/names.hpp"

namespace gammasg {

  class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& msg);

    std::size_t line() const noexcept {
      return _line;
    }

    std::size_t column() const noexcept {
      return _column;
    }

    // what() without the position prefix.
    std::string const& message() const noexcept {
      return _message;
    }

   private:
    std::size_t _line;
    std::size_t _column;
    std::string _message;
  };

  struct StructureDocument {
    std::vector<std::string> elements;
    std::vector<std::string> ops;
    RawTables                tables;  // by index
    // Strict pairs (lesser, greater) by index, sorted, no duplicates.
    std::vector<std::pair<std::size_t, std::size_t>> order_pairs;

    Names names() const {
      return {elements, ops};
    }

    RawOrder order_matrix() const;

    // Throws StructureError unless the tables form a Γ-semigroup and the
    // order is compatible.
    OrderedGammaStructure to_structure() const;

    // Default names: a, b, c, ... (e0, e1, ... beyond 26) and g0, g1, ...
    static StructureDocument from_structure(OrderedGammaStructure const& M);
    static StructureDocument from_structure(OrderedGammaStructure const& M,
                                            Names const&                 names);

    friend bool operator==(StructureDocument const&,
                           StructureDocument const&) = default;
  };

  // Throws ParseError with a 1-based line and column.
  StructureDocument parse(std::string_view text);

  std::string format(StructureDocument const& doc);

}  // namespace gammasg

#endif  // GAMMASG_DOCUMENT_HPP_

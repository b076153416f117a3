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

#ifndef GAMMASG_NAMES_HPP_
#define GAMMASG_NAMES_HPP_

#include <string>  // for string
#include <vector>  // for vector

#include "gammasg/subset-mask.hpp"

namespace gammasg {

  // Display names for elements and operations. Defaults to the indices.
  struct Names {
    std::vector<std::string> elements;
    std::vector<std::string> ops;

    static Names indices(std::size_t n, std::size_t k);

    std::string const& element(element_index a) const {
      return elements[a];
    }

    std::string const& op(op_index g) const {
      return ops[g];
    }

    // "{a, b}"
    std::string subset(SubsetMask const& mask) const;
  };

}  // namespace gammasg

#endif  // GAMMASG_NAMES_HPP_

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

#include "gammasg/names.hpp"

namespace gammasg {

  Names Names::indices(std::size_t n, std::size_t k) {
    Names names;
    for (std::size_t i = 0; i < n; ++i) {
      names.elements.push_back(std::to_string(i));
    }
    for (std::size_t g = 0; g < k; ++g) {
      names.ops.push_back(std::to_string(g));
    }
    return names;
  }

  std::string Names::subset(SubsetMask const& mask) const {
    std::string out   = "{";
    bool        first = true;
    for (auto a : mask) {
      out += (first ? "" : ", ") + elements[a];
      first = false;
    }
    return out + "}";
  }

}  // namespace gammasg

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

#ifndef GAMMASG_ERRORS_HPP_
#define GAMMASG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gammasg {

  // Malformed input shape: wrong table dimensions, n or k out of range.
  // Distinct from an axiom violation, which is reported, not thrown.
  class StructureError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Caller broke a precondition (unknown pattern name, element not in set,
  // unknown predicate name, ...).
  class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // An exhaustive scan would exceed the configured size budget.
  class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

}  // namespace gammasg

#endif  // GAMMASG_ERRORS_HPP_

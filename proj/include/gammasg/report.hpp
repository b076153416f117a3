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

// JSON and plain-text renderings of condition reports and verdicts. Both
// are produced from the same report objects.
//
// Each condition report serializes to exactly the keys
//   { "condition", "holds", "failures", "witnesses" }
// with failures as { "element", "reason" } (element null when the failure
// is not tied to one element) and witnesses as { "element", "values" }.

#ifndef GAMMASG_REPORT_HPP_
#define GAMMASG_REPORT_HPP_

#include <string>  // for string

#include "json.hpp"

#include "gammasg/names.hpp"
#include "gammasg/theorem.hpp"

namespace gammasg {

  nlohmann::json to_json(ConditionReport const& report, Names const& names);
  nlohmann::json to_json(EquivalenceVerdict const& verdict, Names const& names);

  std::string to_text(ConditionReport const& report, Names const& names);
  std::string to_text(EquivalenceVerdict const& verdict, Names const& names);

  // "x = a, gamma = g, mu = g"
  std::string to_text(Witness const& witness, Names const& names);

}  // namespace gammasg

#endif  // GAMMASG_REPORT_HPP_

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

// Command dispatcher behind the `gammasg` executable.
//
//   validate <file>
//   check <file> [--condition all|C1..C8|K1..K3] [--format json|text]
//   classify <file> [--format json|text]
//   nclasses <file> [--format json|text]
//   enumerate --n N --k K [--orders] [--count-only]
//   search --n N --k K [--sat p,..] [--unsat q,..] [--limit L]
//
// Exit codes: 0 success, 1 property fails or verdict inconsistent,
// 2 usage or parse error, 3 resource budget exceeded.

#ifndef GAMMASG_CLI_HPP_
#define GAMMASG_CLI_HPP_

#include <iosfwd>  // for ostream
#include <string>  // for string
#include <vector>  // for vector

namespace gammasg::cli {

  enum ExitCode : int {
    success        = 0,
    property_fails = 1,
    usage_error    = 2,
    resource_error = 3
  };

  // `args` excludes the program name.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace gammasg::cli

#endif  // GAMMASG_CLI_HPP_

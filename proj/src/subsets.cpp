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

#include "gammasg/subsets.hpp"

#include <cassert>  // for assert
#include <vector>   // for vector

#include "gammasg/errors.hpp"

namespace gammasg {

  SubsetMask product(OrderedGammaStructure const& M,
                     SubsetMask const&            A,
                     op_index                     op,
                     SubsetMask const&            B) {
    SubsetMask result(M.size());
    for (auto a : A) {
      for (auto b : B) {
        result.insert(M.product(a, op, b));
      }
    }
    return result;
  }

  SubsetMask product_gamma(OrderedGammaStructure const& M,
                           SubsetMask const&            A,
                           SubsetMask const&            B) {
    SubsetMask result(M.size());
    for (auto a : A) {
      for (auto b : B) {
        for (op_index op = 0; op < M.number_of_ops(); ++op) {
          result.insert(M.product(a, op, b));
        }
      }
    }
    return result;
  }

  SubsetMask down_closure(OrderedGammaStructure const& M, SubsetMask const& H) {
    SubsetMask result(M.size());
    for (auto h : H) {
      result |= M.order().below(h);
    }
    return result;
  }

  SubsetMask up_closure(OrderedGammaStructure const& M, SubsetMask const& H) {
    SubsetMask result(M.size());
    for (auto h : H) {
      result |= M.order().above(h);
    }
    return result;
  }

  namespace {
    struct PatternInfo {
      Pattern          pattern;
      std::string_view ascii;
      std::string_view unicode;
    };

    constexpr std::array<PatternInfo, 6> kPatternNames = {
        {{Pattern::m_a, "(MGa]", "(MΓa]"},
         {Pattern::a_m, "(aGM]", "(aΓM]"},
         {Pattern::m_a_m, "(MGaGM]", "(MΓaΓM]"},
         {Pattern::m_a_a, "(MGaGa]", "(MΓaΓa]"},
         {Pattern::a_a_m, "(aGaGM]", "(aΓaΓM]"},
         {Pattern::m_a_a_m, "MGaGaGM", "MΓaΓaΓM"}}};

    // Factors of each pattern, true for M and false for {a}.
    std::vector<bool> factors(Pattern p) {
      switch (p) {
        case Pattern::m_a:
          return {true, false};
        case Pattern::a_m:
          return {false, true};
        case Pattern::m_a_m:
          return {true, false, true};
        case Pattern::m_a_a:
          return {true, false, false};
        case Pattern::a_a_m:
          return {false, false, true};
        case Pattern::m_a_a_m:
          return {true, false, false, true};
      }
      return {};
    }

    bool is_closed(Pattern p) {
      return p != Pattern::m_a_a_m;
    }
  }  // namespace

  Pattern parse_pattern(std::string_view name) {
    for (auto const& info : kPatternNames) {
      if (name == info.ascii || name == info.unicode) {
        return info.pattern;
      }
    }
    throw UsageError("unknown principal-set pattern \"" + std::string(name)
                     + "\"");
  }

  std::string to_string(Pattern p) {
    for (auto const& info : kPatternNames) {
      if (info.pattern == p) {
        return std::string(info.ascii);
      }
    }
    return "?";
  }

  SubsetMask principal_set(OrderedGammaStructure const& M,
                           Pattern                      p,
                           element_index                a) {
    if (a >= M.size()) {
      throw UsageError("principal_set: element " + std::to_string(a)
                       + " out of range");
    }
    auto const fs = factors(p);
    auto factor   = [&](bool is_m) { return is_m ? M.full() : M.singleton(a); };

    // Left to right: ((f0 Γ f1) Γ f2) Γ ...
    SubsetMask result = factor(fs[0]);
    for (std::size_t i = 1; i < fs.size(); ++i) {
      result = product_gamma(M, result, factor(fs[i]));
    }

#ifndef NDEBUG
    // Right to left must agree by mixed associativity.
    SubsetMask alt = factor(fs.back());
    for (std::size_t i = fs.size() - 1; i-- > 0;) {
      alt = product_gamma(M, factor(fs[i]), alt);
    }
    assert(alt == result);
#endif

    return is_closed(p) ? down_closure(M, result) : result;
  }

}  // namespace gammasg

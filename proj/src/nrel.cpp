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

#include "gammasg/nrel.hpp"

#include <map>  // for map

#include "gammasg/errors.hpp"
#include "gammasg/substructs.hpp"

namespace gammasg {

  EqRelation EqRelation::from_labels(std::vector<std::size_t> const& labels) {
    std::size_t const                  n = labels.size();
    std::map<std::size_t, std::size_t> renumber;
    EqRelation                         rel;
    rel._class_id.resize(n);
    for (element_index a = 0; a < n; ++a) {
      auto [it, inserted] = renumber.emplace(labels[a], rel._classes.size());
      if (inserted) {
        rel._classes.emplace_back(n);
      }
      rel._class_id[a] = it->second;
      rel._classes[it->second].insert(a);
    }
    return rel;
  }

  EqRelation EqRelation::from_classes(std::size_t                    n,
                                      std::vector<SubsetMask> const& classes) {
    std::vector<std::size_t> labels(n, classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (classes[c].universe_size() != n || classes[c].empty()) {
        throw UsageError("equivalence: class " + std::to_string(c)
                         + " is empty or has the wrong carrier size");
      }
      for (auto a : classes[c]) {
        if (labels[a] != classes.size()) {
          throw UsageError("equivalence: element " + std::to_string(a)
                           + " lies in two classes");
        }
        labels[a] = c;
      }
    }
    for (element_index a = 0; a < n; ++a) {
      if (labels[a] == classes.size()) {
        throw UsageError("equivalence: element " + std::to_string(a)
                         + " lies in no class");
      }
    }
    return from_labels(labels);
  }

  EqRelation EqRelation::identity(std::size_t n) {
    std::vector<std::size_t> labels(n);
    for (std::size_t a = 0; a < n; ++a) {
      labels[a] = a;
    }
    return from_labels(labels);
  }

  EqRelation EqRelation::universal(std::size_t n) {
    return from_labels(std::vector<std::size_t>(n, 0));
  }

  EqRelation n_relation(OrderedGammaStructure const& M) {
    std::map<SubsetMask, std::size_t> seen;
    std::vector<std::size_t>          labels(M.size());
    for (element_index a = 0; a < M.size(); ++a) {
      auto [it, _] = seen.emplace(filter_generated(M, a), seen.size());
      labels[a]    = it->second;
    }
    return EqRelation::from_labels(labels);
  }

  bool is_congruence(OrderedGammaStructure const& M, EqRelation const& rel) {
    std::size_t const n = M.size();
    for (element_index a = 0; a < n; ++a) {
      for (element_index b = a + 1; b < n; ++b) {
        if (!rel.related(a, b)) {
          continue;
        }
        for (element_index c = 0; c < n; ++c) {
          for (op_index op = 0; op < M.number_of_ops(); ++op) {
            if (!rel.related(M.product(a, op, c), M.product(b, op, c))
                || !rel.related(M.product(c, op, a), M.product(c, op, b))) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  bool is_semilattice_congruence(OrderedGammaStructure const& M,
                                 EqRelation const&            rel) {
    if (!is_congruence(M, rel)) {
      return false;
    }
    for (element_index a = 0; a < M.size(); ++a) {
      for (op_index op = 0; op < M.number_of_ops(); ++op) {
        if (!rel.related(a, M.product(a, op, a))) {
          return false;
        }
        for (element_index b = 0; b < M.size(); ++b) {
          if (!rel.related(M.product(a, op, b), M.product(b, op, a))) {
            return false;
          }
        }
      }
    }
    return true;
  }

}  // namespace gammasg

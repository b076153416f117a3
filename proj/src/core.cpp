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

#include "gammasg/core.hpp"

#include <sstream>  // for ostringstream
#include <utility>  // for move

#include "gammasg/errors.hpp"

namespace gammasg {

  namespace {
    template <class... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };
    template <class... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;

    void check_size(std::size_t n, char const* what) {
      if (n == 0) {
        throw StructureError(std::string(what) + ": carrier must be nonempty");
      }
      if (n > kMaxElements) {
        throw StructureError(std::string(what) + ": carrier size "
                             + std::to_string(n) + " exceeds "
                             + std::to_string(kMaxElements));
      }
    }

    void check_table_shape(RawTables const& tables,
                           std::size_t      n,
                           std::size_t      k) {
      check_size(n, "tables");
      if (k == 0) {
        throw StructureError("tables: need at least one operation");
      }
      if (tables.size() != k) {
        throw StructureError("tables: expected " + std::to_string(k)
                             + " tables, got " + std::to_string(tables.size()));
      }
      for (std::size_t op = 0; op < k; ++op) {
        if (tables[op].size() != n) {
          throw StructureError("tables: table " + std::to_string(op) + " has "
                               + std::to_string(tables[op].size())
                               + " rows, expected " + std::to_string(n));
        }
        for (std::size_t x = 0; x < n; ++x) {
          if (tables[op][x].size() != n) {
            throw StructureError("tables: table " + std::to_string(op) + " row "
                                 + std::to_string(x) + " has "
                                 + std::to_string(tables[op][x].size())
                                 + " entries, expected " + std::to_string(n));
          }
        }
      }
    }

    std::string first_violations(ValidationReport const& report) {
      std::string msg;
      std::size_t shown = 0;
      for (auto const& v : report.violations) {
        if (shown++ == 3) {
          msg += "; ...";
          break;
        }
        msg += (shown == 1 ? "" : "; ") + describe(v);
      }
      return msg;
    }
  }  // namespace

  std::string describe(Violation const& v, Names const* names) {
    std::ostringstream out;
    auto               el = [names](element_index a) {
      return names == nullptr ? std::to_string(a) : names->element(a);
    };
    auto op = [names](op_index g) {
      return names == nullptr ? "op" + std::to_string(g) : names->op(g);
    };
    std::visit(overloaded{[&](OutOfRangeEntry const& e) {
                            out << "table " << op(e.op) << " entry (" << el(e.x)
                                << ", " << el(e.y) << ") = " << e.value
                                << " is out of range";
                          },
                          [&](AssociativityViolation const& e) {
                            out << "(" << el(e.x) << " " << op(e.rho) << " "
                                << el(e.y) << ") " << op(e.omega) << " "
                                << el(e.z) << " != " << el(e.x) << " "
                                << op(e.rho) << " (" << el(e.y) << " "
                                << op(e.omega) << " " << el(e.z) << ")";
                          },
                          [&](ReflexivityViolation const& e) {
                            out << "order is not reflexive at " << el(e.i);
                          },
                          [&](AntisymmetryViolation const& e) {
                            out << "order is not antisymmetric: " << el(e.i)
                                << " <= " << el(e.j) << " and " << el(e.j)
                                << " <= " << el(e.i);
                          },
                          [&](TransitivityViolation const& e) {
                            out << "order is not transitive: " << el(e.i)
                                << " <= " << el(e.j) << " <= " << el(e.l)
                                << " but not " << el(e.i) << " <= " << el(e.l);
                          },
                          [&](CompatibilityViolation const& e) {
                            out << el(e.a) << " <= " << el(e.b) << " but not ";
                            if (e.side == Side::right) {
                              out << el(e.a) << " " << op(e.op) << " "
                                  << el(e.c) << " <= " << el(e.b) << " "
                                  << op(e.op) << " " << el(e.c);
                            } else {
                              out << el(e.c) << " " << op(e.op) << " "
                                  << el(e.a) << " <= " << el(e.c) << " "
                                  << op(e.op) << " " << el(e.b);
                            }
                          }},
               v);
    return out.str();
  }

  ValidationReport validate_tables(RawTables const& tables,
                                   std::size_t      n,
                                   std::size_t      k) {
    check_table_shape(tables, n, k);
    ValidationReport report;
    for (std::size_t op = 0; op < k; ++op) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (tables[op][x][y] >= n) {
            report.violations.emplace_back(
                OutOfRangeEntry{op, x, y, tables[op][x][y]});
          }
        }
      }
    }
    auto in_range = [n](std::size_t v) { return v < n; };
    for (std::size_t rho = 0; rho < k; ++rho) {
      for (std::size_t omega = 0; omega < k; ++omega) {
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            std::size_t xy = tables[rho][x][y];
            if (!in_range(xy)) {
              continue;
            }
            for (std::size_t z = 0; z < n; ++z) {
              std::size_t yz = tables[omega][y][z];
              if (!in_range(yz)) {
                continue;
              }
              std::size_t lhs = tables[omega][xy][z];
              std::size_t rhs = tables[rho][x][yz];
              if (in_range(lhs) && in_range(rhs) && lhs != rhs) {
                report.violations.emplace_back(
                    AssociativityViolation{rho, omega, x, y, z});
              }
            }
          }
        }
      }
    }
    return report;
  }

  ValidationReport validate_order(RawOrder const& leq, std::size_t n) {
    check_size(n, "order");
    if (leq.size() != n) {
      throw StructureError("order: expected " + std::to_string(n)
                           + " rows, got " + std::to_string(leq.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (leq[i].size() != n) {
        throw StructureError("order: row " + std::to_string(i) + " has "
                             + std::to_string(leq[i].size())
                             + " entries, expected " + std::to_string(n));
      }
    }
    ValidationReport report;
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i][i]) {
        report.violations.emplace_back(ReflexivityViolation{i});
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (leq[i][j] && leq[j][i]) {
          report.violations.emplace_back(AntisymmetryViolation{i, j});
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!leq[i][j]) {
          continue;
        }
        for (std::size_t l = 0; l < n; ++l) {
          if (leq[j][l] && !leq[i][l]) {
            report.violations.emplace_back(TransitivityViolation{i, j, l});
          }
        }
      }
    }
    return report;
  }

  ValidationReport validate_compatibility(GammaStructure const& structure,
                                          OrderRelation const&  order) {
    std::size_t const n = structure.size();
    if (order.size() != n) {
      throw StructureError("compatibility: order has "
                           + std::to_string(order.size())
                           + " elements, structure has " + std::to_string(n));
    }
    ValidationReport report;
    for (element_index a = 0; a < n; ++a) {
      for (element_index b : order.above(a)) {
        for (element_index c = 0; c < n; ++c) {
          for (op_index op = 0; op < structure.number_of_ops(); ++op) {
            if (!order.leq(structure.product(a, op, c),
                           structure.product(b, op, c))) {
              report.violations.emplace_back(
                  CompatibilityViolation{a, b, c, op, Side::right});
            }
            if (!order.leq(structure.product(c, op, a),
                           structure.product(c, op, b))) {
              report.violations.emplace_back(
                  CompatibilityViolation{a, b, c, op, Side::left});
            }
          }
        }
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // GammaStructure
  ////////////////////////////////////////////////////////////////////////

  GammaStructure::GammaStructure(RawTables const& tables) {
    std::size_t const k      = tables.size();
    std::size_t const n      = k == 0 ? 0 : tables[0].size();
    auto              report = validate_tables(tables, n, k);
    if (!report.ok()) {
      throw StructureError("not a Γ-semigroup: " + first_violations(report));
    }
    _n = n;
    _k = k;
    _entries.reserve(k * n * n);
    for (auto const& table : tables) {
      for (auto const& row : table) {
        for (auto v : row) {
          _entries.push_back(static_cast<std::uint8_t>(v));
        }
      }
    }
  }

  GammaStructure GammaStructure::unchecked(std::size_t               n,
                                           std::size_t               k,
                                           std::vector<std::uint8_t> entries) {
    GammaStructure s;
    s._n       = n;
    s._k       = k;
    s._entries = std::move(entries);
    return s;
  }

  RawTables GammaStructure::tables() const {
    RawTables result(_k, RawTable(_n, std::vector<std::size_t>(_n)));
    for (op_index op = 0; op < _k; ++op) {
      for (element_index x = 0; x < _n; ++x) {
        for (element_index y = 0; y < _n; ++y) {
          result[op][x][y] = product(x, op, y);
        }
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // OrderRelation
  ////////////////////////////////////////////////////////////////////////

  OrderRelation::OrderRelation(RawOrder const& leq) {
    auto report = validate_order(leq, leq.size());
    if (!report.ok()) {
      throw StructureError("not a partial order: " + first_violations(report));
    }
    init(leq);
  }

  OrderRelation OrderRelation::equality(std::size_t n) {
    check_size(n, "order");
    RawOrder leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      leq[i][i] = true;
    }
    return unchecked(leq);
  }

  OrderRelation OrderRelation::unchecked(RawOrder const& leq) {
    OrderRelation o;
    o.init(leq);
    return o;
  }

  void OrderRelation::init(RawOrder const& leq) {
    std::size_t const n = leq.size();
    _below.assign(n, SubsetMask(n));
    _above.assign(n, SubsetMask(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[i][j]) {
          _below[j].insert(i);
          _above[i].insert(j);
        }
      }
    }
  }

  RawOrder OrderRelation::matrix() const {
    std::size_t const n = size();
    RawOrder          leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        leq[i][j] = this->leq(i, j);
      }
    }
    return leq;
  }

  ////////////////////////////////////////////////////////////////////////
  // OrderedGammaStructure
  ////////////////////////////////////////////////////////////////////////

  OrderedGammaStructure::OrderedGammaStructure(GammaStructure structure,
                                               OrderRelation  order)
      : _structure(std::move(structure)), _order(std::move(order)) {
    auto report = validate_compatibility(_structure, _order);
    if (!report.ok()) {
      throw StructureError("order is not compatible: "
                           + first_violations(report));
    }
  }

  OrderedGammaStructure::OrderedGammaStructure(GammaStructure structure)
      : _structure(std::move(structure)),
        _order(OrderRelation::equality(_structure.size())) {}

  OrderedGammaStructure OrderedGammaStructure::unchecked(GammaStructure s,
                                                         OrderRelation  o) {
    return OrderedGammaStructure(unchecked_tag{}, std::move(s), std::move(o));
  }

}  // namespace gammasg

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

#include "gammasg/report.hpp"

#include <sstream>  // for ostringstream

namespace gammasg {

  namespace {
    nlohmann::json value_json(WitnessField const& f, Names const& names) {
      switch (f.kind) {
        case WitnessField::Kind::element:
          return names.element(f.index);
        case WitnessField::Kind::op:
          return names.op(f.index);
        case WitnessField::Kind::subset: {
          auto arr = nlohmann::json::array();
          for (auto a : f.subset) {
            arr.push_back(names.element(a));
          }
          return arr;
        }
      }
      return nullptr;
    }

    std::string value_text(WitnessField const& f, Names const& names) {
      switch (f.kind) {
        case WitnessField::Kind::element:
          return names.element(f.index);
        case WitnessField::Kind::op:
          return names.op(f.index);
        case WitnessField::Kind::subset:
          return names.subset(f.subset);
      }
      return "";
    }
  }  // namespace

  nlohmann::json to_json(ConditionReport const& report, Names const& names) {
    auto failures = nlohmann::json::array();
    for (auto const& f : report.failures) {
      failures.push_back({{"element",
                           f.element ? nlohmann::json(names.element(*f.element))
                                     : nlohmann::json(nullptr)},
                          {"reason", f.reason}});
    }
    auto witnesses = nlohmann::json::array();
    for (auto const& w : report.witnesses) {
      auto values = nlohmann::json::object();
      for (auto const& field : w.fields) {
        values[field.name] = value_json(field, names);
      }
      witnesses.push_back(
          {{"element", names.element(w.element)}, {"values", values}});
    }
    return {{"condition", to_string(report.id)},
            {"holds", report.holds},
            {"failures", failures},
            {"witnesses", witnesses}};
  }

  nlohmann::json to_json(EquivalenceVerdict const& verdict,
                         Names const&              names) {
    auto flags   = nlohmann::json::object();
    auto reports = nlohmann::json::array();
    for (auto const& r : verdict.reports) {
      flags[to_string(r.id)] = r.holds;
      reports.push_back(to_json(r, names));
    }
    return {{"consistent", verdict.consistent},
            {"flags", flags},
            {"reports", reports}};
  }

  std::string to_text(Witness const& witness, Names const& names) {
    std::string out;
    for (auto const& field : witness.fields) {
      out += (out.empty() ? "" : ", ") + field.name + " = "
             + value_text(field, names);
    }
    return out;
  }

  std::string to_text(ConditionReport const& report, Names const& names) {
    std::ostringstream out;
    out << to_string(report.id) << ": " << (report.holds ? "holds" : "fails")
        << '\n';
    for (auto const& f : report.failures) {
      out << "  failure";
      if (f.element) {
        out << " at " << names.element(*f.element);
      }
      out << ": " << f.reason << '\n';
    }
    for (auto const& w : report.witnesses) {
      out << "  witness for " << names.element(w.element) << ": "
          << to_text(w, names) << '\n';
    }
    return out.str();
  }

  std::string to_text(EquivalenceVerdict const& verdict, Names const& names) {
    std::ostringstream out;
    for (auto const& r : verdict.reports) {
      out << to_text(r, names);
    }
    out << "consistent: " << (verdict.consistent ? "yes" : "no") << '\n';
    return out.str();
  }

}  // namespace gammasg

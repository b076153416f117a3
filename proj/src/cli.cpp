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

#include "gammasg/cli.hpp"

#include <fstream>   // for ifstream
#include <iostream>  // for ostream
#include <optional>  // for optional
#include <sstream>   // for ostringstream

#include "CLI11.hpp"
#include "json.hpp"

#include "gammasg/core.hpp"
#include "gammasg/document.hpp"
#include "gammasg/errors.hpp"
#include "gammasg/nrel.hpp"
#include "gammasg/regularity.hpp"
#include "gammasg/report.hpp"
#include "gammasg/search.hpp"
#include "gammasg/substructs.hpp"
#include "gammasg/theorem.hpp"

namespace gammasg::cli {

  namespace {
    using nlohmann::json;

    // Thrown to unwind with an exit code after a diagnostic has been written.
    struct Exit {
      int code;
    };

    std::string read_file(std::string const& path, std::ostream& err) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        err << "error: cannot read " << path << '\n';
        throw Exit{usage_error};
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }

    StructureDocument load_document(std::string const& path,
                                    std::ostream&      err) {
      auto text = read_file(path, err);
      try {
        return parse(text);
      } catch (ParseError const& e) {
        err << path << ":" << e.line() << ":" << e.column()
            << ": parse error: " << e.message() << '\n';
        throw Exit{usage_error};
      }
    }

    OrderedGammaStructure load_structure(StructureDocument const& doc,
                                         std::string const&       path,
                                         std::ostream&            err) {
      try {
        return doc.to_structure();
      } catch (StructureError const& e) {
        err << path << ": not a valid ordered Γ-semigroup: " << e.what()
            << "\n(run `validate` for the full list of violations)\n";
        throw Exit{usage_error};
      }
    }

    EnumerationBudget budget_from(std::optional<std::size_t> max_n) {
      EnumerationBudget b;
      if (max_n) {
        b.max_n_single_op = b.max_n_multi_op = b.max_n_orders = *max_n;
      }
      return b;
    }

    ////////////////////////////////////////////////////////////////////////
    // Subcommands
    ////////////////////////////////////////////////////////////////////////

    int cmd_validate(std::string const& path,
                     std::ostream&      out,
                     std::ostream&      err) {
      auto const        doc   = load_document(path, err);
      auto const        names = doc.names();
      std::size_t const n     = doc.elements.size();
      std::size_t const k     = doc.ops.size();

      std::vector<Violation> violations;
      auto                   tables = validate_tables(doc.tables, n, k);
      violations                    = tables.violations;
      auto order                    = validate_order(doc.order_matrix(), n);
      violations.insert(
          violations.end(), order.violations.begin(), order.violations.end());
      if (tables.ok() && order.ok()) {
        auto compat = validate_compatibility(GammaStructure(doc.tables),
                                             OrderRelation(doc.order_matrix()));
        violations  = compat.violations;
      }
      for (auto const& v : violations) {
        err << path << ": " << describe(v, &names) << '\n';
      }
      if (violations.empty()) {
        out << path << ": valid ordered Γ-semigroup (n = " << n << ", k = " << k
            << ")\n";
        return success;
      }
      out << path << ": invalid (" << violations.size() << " violation"
          << (violations.size() == 1 ? "" : "s") << ")\n";
      return property_fails;
    }

    int cmd_check(std::string const& path,
                  std::string const& condition,
                  std::string const& format,
                  bool               k3_exhaustive,
                  std::ostream&      out,
                  std::ostream&      err) {
      auto const     doc   = load_document(path, err);
      auto const     M     = load_structure(doc, path, err);
      auto const     names = doc.names();
      TheoremOptions opts;
      opts.k3_exhaustive = k3_exhaustive;
      opts.names         = &names;

      if (condition == "all") {
        auto verdict = equivalence_verdict(M, opts);
        if (format == "json") {
          out << to_json(verdict, names).dump(2) << '\n';
        } else {
          out << to_text(verdict, names);
        }
        return verdict.consistent ? success : property_fails;
      }
      auto report = check_condition(M, parse_condition(condition), opts);
      if (format == "json") {
        out << to_json(report, names).dump(2) << '\n';
      } else {
        out << to_text(report, names);
      }
      return report.holds ? success : property_fails;
    }

    int cmd_classify(std::string const& path,
                     std::string const& format,
                     std::ostream&      out,
                     std::ostream&      err) {
      auto const doc   = load_document(path, err);
      auto const M     = load_structure(doc, path, err);
      auto const names = doc.names();

      std::vector<std::pair<std::string, bool>> flags = {
          {"regular", is_regular(M)},
          {"left-regular", is_left_regular(M)},
          {"right-regular", is_right_regular(M)},
          {"completely-regular", is_completely_regular(M)},
          {"strongly-regular", is_strongly_regular(M)}};

      auto regular_json = [&](std::optional<RegularWitness> const& w) {
        return w ? json{{"x", names.element(w->x)},
                        {"gamma", names.op(w->gamma)},
                        {"mu", names.op(w->mu)}}
                 : json(nullptr);
      };
      auto regular_text = [&](auto const& w) {
        return w ? "x=" + names.element(w->x) + " γ=" + names.op(w->gamma)
                       + " μ=" + names.op(w->mu)
                 : std::string("-");
      };

      json               rows = json::array();
      std::ostringstream table;
      table << "element | regular | left-regular | right-regular | "
               "strongly-regular\n";
      for (element_index a = 0; a < M.size(); ++a) {
        auto                          reg    = regular_witness(M, a);
        auto                          left   = left_regular_witness(M, a);
        auto                          right  = right_regular_witness(M, a);
        auto                          strong = strong_witness(M, a, M.full());
        std::optional<RegularWitness> strong_as;
        if (strong) {
          strong_as = RegularWitness{a, strong->x, strong->gamma, strong->mu};
        }
        rows.push_back({{"element", names.element(a)},
                        {"regular", regular_json(reg)},
                        {"left-regular", regular_json(left)},
                        {"right-regular", regular_json(right)},
                        {"strongly-regular", regular_json(strong_as)}});
        table << names.element(a) << " | " << regular_text(reg) << " | "
              << regular_text(left) << " | " << regular_text(right) << " | "
              << regular_text(strong_as) << '\n';
      }

      if (format == "json") {
        json j = json::object();
        for (auto const& [name, value] : flags) {
          j[name] = value;
        }
        j["witnesses"] = rows;
        out << j.dump(2) << '\n';
      } else {
        for (auto const& [name, value] : flags) {
          out << name << ": " << (value ? "yes" : "no") << '\n';
        }
        out << table.str();
      }
      return success;
    }

    int cmd_nclasses(std::string const& path,
                     std::string const& format,
                     std::ostream&      out,
                     std::ostream&      err) {
      auto const doc   = load_document(path, err);
      auto const M     = load_structure(doc, path, err);
      auto const names = doc.names();
      auto const rel   = n_relation(M);

      auto set_json = [&](SubsetMask const& m) {
        json arr = json::array();
        for (auto a : m) {
          arr.push_back(names.element(a));
        }
        return arr;
      };

      if (format == "json") {
        json classes = json::array();
        for (auto const& cls : rel.classes()) {
          json filters = json::object();
          for (auto a : cls) {
            filters[names.element(a)] = set_json(filter_generated(M, a));
          }
          classes.push_back({{"class", set_json(cls)}, {"filters", filters}});
        }
        out << json{{"classes", classes},
                    {"semilattice_congruence",
                     is_semilattice_congruence(M, rel)}}
                   .dump(2)
            << '\n';
      } else {
        for (std::size_t c = 0; c < rel.number_of_classes(); ++c) {
          auto const& cls = rel.classes()[c];
          out << "class " << c << ": " << names.subset(cls) << '\n';
          for (auto a : cls) {
            out << "  N(" << names.element(a)
                << ") = " << names.subset(filter_generated(M, a)) << '\n';
          }
        }
      }
      return success;
    }

    int cmd_enumerate(std::size_t                n,
                      std::size_t                k,
                      bool                       orders,
                      bool                       count_only,
                      std::optional<std::size_t> max_n,
                      std::ostream&              out) {
      auto const  budget = budget_from(max_n);
      std::size_t count  = 0;
      auto        emit   = [&](OrderedGammaStructure const& M) {
        ++count;
        if (!count_only) {
          out << "# structure " << count << '\n'
              << format(StructureDocument::from_structure(M)) << '\n';
        }
        return true;
      };
      if (orders) {
        for_each_ordered_structure(n, k, OrderMode::all, emit, budget);
      } else {
        for_each_table_tuple(
            n,
            k,
            [&](GammaStructure const& s) {
              return emit(OrderedGammaStructure(s));
            },
            budget);
      }
      if (count_only) {
        out << count << '\n';
      } else {
        out << "# " << count << " structures\n";
      }
      return success;
    }

    int cmd_search(SearchQuery const&         q,
                   std::optional<std::size_t> max_n,
                   std::size_t                threads,
                   std::string const&         format_name,
                   std::ostream&              out) {
      auto const result = run_search(q, budget_from(max_n), threads);
      if (format_name == "json") {
        json hits = json::array();
        for (auto const& hit : result.hits) {
          auto doc = StructureDocument::from_structure(hit.structure);
          hits.push_back({{"structure", format(doc)},
                          {"verdict", to_json(hit.verdict, doc.names())}});
        }
        out << json{{"hits", hits},
                    {"examined", result.examined},
                    {"truncated", result.truncated}}
                   .dump(2)
            << '\n';
      } else {
        std::size_t i = 0;
        for (auto const& hit : result.hits) {
          out << "# hit " << ++i << '\n'
              << format(StructureDocument::from_structure(hit.structure))
              << "# flags:";
          for (auto const& r : hit.verdict.reports) {
            out << ' ' << to_string(r.id) << '=' << (r.holds ? 1 : 0);
          }
          out << "\n\n";
        }
        out << "# " << result.hits.size() << " hit"
            << (result.hits.size() == 1 ? "" : "s") << ", " << result.examined
            << " ordered structures examined"
            << (result.truncated ? " (limit reached)" : "") << '\n';
      }
      return success;
    }
  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{
        "Verification and enumeration toolkit for finite ordered "
        "Γ-semigroups",
        "gammasg"};
    app.require_subcommand(1);
    auto const formats = CLI::IsMember({"json", "text"});

    std::string file;
    std::string condition     = "all";
    bool        k3_exhaustive = false;
    std::string check_format, classify_format, nclasses_format, search_format;

    auto* validate = app.add_subcommand(
        "validate", "Check the Γ-semigroup, order and compatibility axioms");
    validate->add_option("file", file, "Structure file (.gps)")->required();

    auto* check =
        app.add_subcommand("check", "Decide conditions C1-C8 and K1-K3");
    check->add_option("file", file, "Structure file (.gps)")->required();
    check->add_option("--condition", condition, "all, C1..C8 or K1..K3")
        ->default_val("all");
    check->add_option("--format", check_format, "json or text")
        ->default_val("json")
        ->check(formats);
    check->add_flag("--k3-exhaustive",
                    k3_exhaustive,
                    "Search all subsets E for K3 instead of E = M");

    auto* classify =
        app.add_subcommand("classify", "Regularity flags and witnesses");
    classify->add_option("file", file, "Structure file (.gps)")->required();
    classify->add_option("--format", classify_format, "json or text")
        ->default_val("text")
        ->check(formats);

    auto* nclasses =
        app.add_subcommand("nclasses", "𝒩-classes and generated filters");
    nclasses->add_option("file", file, "Structure file (.gps)")->required();
    nclasses->add_option("--format", nclasses_format, "json or text")
        ->default_val("text")
        ->check(formats);

    std::size_t                n = 0, k = 0;
    bool                       orders = false, count_only = false;
    std::optional<std::size_t> max_n;
    auto*                      enumerate = app.add_subcommand(
        "enumerate", "List all Γ-semigroups of a given size");
    enumerate->add_option("--n", n, "Number of elements")->required();
    enumerate->add_option("--k", k, "Number of operations")->required();
    enumerate->add_flag("--orders", orders, "Include every compatible order");
    enumerate->add_flag("--count-only", count_only, "Print only the count");
    enumerate->add_option("--max-n", max_n, "Override the size budget");

    SearchQuery q;
    q.limit                = 10;
    std::string order_mode = "all";
    std::size_t threads    = 0;
    auto*       search =
        app.add_subcommand("search", "Find structures with given properties");
    search->add_option("--n", q.n, "Number of elements")->required();
    search->add_option("--k", q.k, "Number of operations")->required();
    search->add_option("--sat", q.sat, "Predicates that must hold")
        ->delimiter(',');
    search->add_option("--unsat", q.unsat, "Predicates that must fail")
        ->delimiter(',');
    search->add_option("--limit", q.limit, "Maximum number of hits")
        ->default_val(10);
    search->add_option("--order-mode", order_mode, "all or equality")
        ->default_val("all")
        ->check(CLI::IsMember({"all", "equality"}));
    search->add_option("--threads", threads, "Worker threads (0 = all cores)");
    search->add_option("--max-n", max_n, "Override the size budget");
    search->add_option("--format", search_format, "json or text")
        ->default_val("text")
        ->check(formats);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? success : usage_error;
    }

    try {
      if (validate->parsed()) {
        return cmd_validate(file, out, err);
      } else if (check->parsed()) {
        return cmd_check(
            file, condition, check_format, k3_exhaustive, out, err);
      } else if (classify->parsed()) {
        return cmd_classify(file, classify_format, out, err);
      } else if (nclasses->parsed()) {
        return cmd_nclasses(file, nclasses_format, out, err);
      } else if (enumerate->parsed()) {
        return cmd_enumerate(n, k, orders, count_only, max_n, out);
      } else if (search->parsed()) {
        q.order_mode =
            order_mode == "all" ? OrderMode::all : OrderMode::equality_only;
        return cmd_search(q, max_n, threads, search_format, out);
      }
    } catch (Exit const& e) {
      return e.code;
    } catch (ResourceError const& e) {
      err << "error: " << e.what() << '\n';
      return resource_error;
    } catch (UsageError const& e) {
      err << "error: " << e.what() << '\n';
      return usage_error;
    } catch (StructureError const& e) {
      err << "error: " << e.what() << '\n';
      return usage_error;
    }
    return usage_error;
  }

}  // namespace gammasg::cli

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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gammasg/cli.hpp"
#include "gammasg/document.hpp"
#include "gammasg/nrel.hpp"
#include "gammasg/regularity.hpp"
#include "gammasg/search.hpp"
#include "gammasg/subsets.hpp"
#include "gammasg/substructs.hpp"
#include "gammasg/theorem.hpp"
#include "test-helpers.hpp"

namespace {
  using namespace gammasg;
  using nlohmann::json;

  struct Outcome {
    bool        pass = true;
    std::string detail;
  };

  // Every (n, k) with n <= 3 and k <= 2, all compatible orders.
  void sweep(std::function<void(OrderedGammaStructure const&)> const& f) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t k = 1; k <= 2; ++k) {
        for_each_ordered_structure(n, k, OrderMode::all, [&](auto const& M) {
          f(M);
          return true;
        });
      }
    }
  }

  std::string describe(OrderedGammaStructure const& M) {
    return format(StructureDocument::from_structure(M));
  }

  Outcome consistency_sweep() {
    std::size_t total = 0, inconsistent = 0, strongly = 0;
    std::string first;
    sweep([&](auto const& M) {
      ++total;
      auto const v = equivalence_verdict(M);
      strongly += v.flag(ConditionId::C1) ? 1 : 0;
      if (!v.consistent) {
        if (inconsistent++ == 0) {
          first = describe(M);
        }
      }
    });
    Outcome o;
    o.pass   = inconsistent == 0 && total == 4230;
    o.detail = std::to_string(total) + " ordered structures, "
               + std::to_string(strongly) + " strongly regular, "
               + std::to_string(inconsistent) + " inconsistent";
    if (!first.empty()) {
      o.detail += "; first:\n" + first;
    }
    return o;
  }

  Outcome z2_pair_fixture() {
    auto const raw = test::z2_pair_tables();
    Outcome    o;
    o.pass = validate_tables(raw, 2, 2).ok()
             && validate_order(OrderRelation::equality(2).matrix(), 2).ok();
    auto const  M       = test::z2_pair();
    auto const  v       = equivalence_verdict(M);
    std::size_t holding = 0;
    for (bool f : v.flags) {
      holding += f ? 1 : 0;
    }
    o.pass   = o.pass && v.consistent && holding == kNumberOfConditions;
    o.detail = std::to_string(holding) + "/11 flags true";
    return o;
  }

  Outcome semilattice_congruence() {
    std::size_t total = 0, good = 0;
    sweep([&](auto const& M) {
      ++total;
      good += is_semilattice_congruence(M, n_relation(M)) ? 1 : 0;
    });
    return {good == total && total > 0,
            std::to_string(good) + "/" + std::to_string(total) + " structures"};
  }

  Outcome closure_identities() {
    std::mt19937_64                    rng(0x5eed);
    std::vector<OrderedGammaStructure> sample;
    auto pick = [&](std::size_t n, std::size_t k, std::size_t count) {
      auto const tables = enumerate_tables(n, k);
      for (std::size_t i = 0; i < count; ++i) {
        auto const& s      = tables[rng() % tables.size()];
        auto const  orders = enumerate_orders(s);
        sample.push_back(
            OrderedGammaStructure::unchecked(s, orders[rng() % orders.size()]));
      }
    };
    pick(4, 1, 30);
    pick(3, 2, 20);
    pick(3, 3, 10);

    std::size_t checks = 0, failures = 0;
    for (auto const& M : sample) {
      std::size_t const n    = M.size();
      auto              mask = [&] {
        return SubsetMask::from_bits(n, rng() & ((std::uint64_t{1} << n) - 1));
      };
      auto down = [&](SubsetMask const& H) { return down_closure(M, H); };
      auto prod = [&](SubsetMask const& A, SubsetMask const& B) {
        return product_gamma(M, A, B);
      };
      bool ok = down(M.full()) == M.full();
      for (int i = 0; i < 1000; ++i) {
        auto const A  = mask();
        auto const B  = mask();
        auto const dA = down(A);
        auto const dB = down(B);
        auto const AB = down(prod(A, B));
        // A ⊆ (A] = ((A]]
        ok = ok && A.is_subset_of(dA) && down(dA) == dA;
        // A ⊆ B implies (A] ⊆ (B], on the pair (A ∩ B, B)
        ok = ok && down(A & B).is_subset_of(dB);
        if (A.is_subset_of(B)) {
          ok = ok && dA.is_subset_of(dB);
        }
        // (A]Γ(B] ⊆ (AΓB]
        ok = ok && prod(dA, dB).is_subset_of(AB);
        // ((A]Γ(B]] = ((A]ΓB] = (AΓ(B]] = (AΓB]
        ok = ok && down(prod(dA, dB)) == AB && down(prod(dA, B)) == AB
             && down(prod(A, dB)) == AB;
        ++checks;
      }
      failures += ok ? 0 : 1;
    }
    return {failures == 0 && sample.size() >= 50,
            std::to_string(sample.size()) + " structures x 1000 pairs, "
                + std::to_string(failures) + " structures with a violation"};
  }

  Outcome filter_oracle() {
    EnumerationBudget budget;
    budget.max_n_multi_op = 4;
    std::size_t total = 0, mismatches = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      std::size_t const subsets = std::size_t{1} << n;
      for (std::size_t k = 1; k <= 2; ++k) {
        for_each_ordered_structure(
            n,
            k,
            OrderMode::all,
            [&](auto const& M) {
              ++total;
              std::vector<std::uint64_t> filters;
              for (std::uint64_t bits = 1; bits < subsets; ++bits) {
                if (test::naive::is_filter(M,
                                           test::naive::from_bits(n, bits))) {
                  filters.push_back(bits);
                }
              }
              for (element_index a = 0; a < n; ++a) {
                std::uint64_t meet = subsets - 1;
                for (auto f : filters) {
                  if ((f >> a) & 1U) {
                    meet &= f;
                  }
                }
                if (filter_generated(M, a).to_bits() != meet) {
                  ++mismatches;
                }
              }
              return true;
            },
            budget);
      }
    }
    return {mismatches == 0,
            std::to_string(total) + " ordered structures (n <= 4, k <= 2), "
                + std::to_string(mismatches) + " mismatches"};
  }

  Outcome witness_upgrade() {
    std::size_t witnesses = 0, bad = 0;
    auto        visit = [&](OrderedGammaStructure const& M) {
      if (!is_strongly_regular(M)) {
        return;
      }
      for (element_index a = 0; a < M.size(); ++a) {
        auto const w = strong_witness(M, a, M.full());
        ++witnesses;
        if (!w) {
          ++bad;
          continue;
        }
        auto const  u  = upgrade_witness(M, *w);
        auto const  y  = u.x;
        auto const  g  = u.gamma;
        auto const  m  = u.mu;
        auto const& P  = M;
        bool        c1 = P.leq(a, P.product(P.product(a, g, y), m, a));
        bool        c2 = P.leq(y, P.product(P.product(y, m, a), g, y));
        auto        ay = P.product(a, g, y);
        bool        c3 = ay == P.product(y, g, a) && ay == P.product(y, m, a)
                         && ay == P.product(a, m, y);
        bad += (c1 && c2 && c3) ? 0 : 1;
      }
    };
    sweep(visit);
    for_each_ordered_structure(4, 1, OrderMode::all, [&](auto const& M) {
      visit(M);
      return true;
    });
    return {bad == 0 && witnesses > 0,
            std::to_string(witnesses) + " witnesses upgraded (n <= 3, k <= 2 "
                "and n = 4, k = 1), " + std::to_string(bad) + " failures"};
  }

  Outcome enumeration_counts() {
    auto const c21 = enumerate_tables(2, 1).size();
    auto const c22 = enumerate_tables(2, 2).size();
    auto const c31 = enumerate_tables(3, 1).size();
    return {c21 == 8 && c22 == 14 && c31 == 113,
            "n=2,k=1: " + std::to_string(c21) + ", n=2,k=2: "
                + std::to_string(c22) + ", n=3,k=1: " + std::to_string(c31)};
  }

  Outcome implication() {
    std::size_t strongly = 0, violations = 0;
    sweep([&](auto const& M) {
      if (is_strongly_regular(M)) {
        ++strongly;
        violations += is_completely_regular(M) ? 0 : 1;
      }
    });
    std::string                                      per_size;
    std::size_t                                      unverified = 0;
    std::vector<std::pair<std::size_t, std::size_t>> sizes      = {
        {1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}};
    for (auto [n, k] : sizes) {
      SearchQuery q;
      q.n          = n;
      q.k          = k;
      q.sat        = {"completely-regular"};
      q.unsat      = {"strongly-regular"};
      auto const r = run_search(q);
      for (auto const& hit : r.hits) {
        if (!test::naive::regular(hit.structure)
            || test::naive::strongly_regular(hit.structure)
            || !is_completely_regular(hit.structure)) {
          ++unverified;
        }
      }
      per_size += " n=" + std::to_string(n) + ",k=" + std::to_string(k) + ":"
                  + std::to_string(r.hits.size()) + "/"
                  + std::to_string(r.examined);
    }
    return {violations == 0 && unverified == 0,
            std::to_string(strongly)
                + " strongly regular structures all completely regular; "
                  "CR and not SR hits/examined:"
                + per_size + "; " + std::to_string(unverified)
                + " unverified"};
  }

  std::string slurp(std::string const& path) {
    std::ifstream      in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  Outcome cli_contract() {
    std::string const dir = GAMMASG_FIXTURES;
    auto run = [](std::vector<std::string> args, std::string& out) {
      std::ostringstream o, e;
      int                code = cli::run(args, o, e);
      out                     = o.str();
      return code;
    };
    std::vector<std::string> problems;
    std::string              out;

    for (auto name : {"trivial.gps",
                      "z2-pair.gps",
                      "constant.gps",
                      "left-zero.gps",
                      "nonassoc.gps",
                      "incompatible.gps"}) {
      auto const doc  = parse(slurp(dir + "/" + name));
      auto const text = format(doc);
      if (!(parse(text) == doc) || format(parse(text)) != text) {
        problems.push_back(std::string("round trip ") + name);
      }
    }
    for (auto name :
         {"trivial.gps", "z2-pair.gps", "constant.gps", "left-zero.gps"}) {
      int const  code = run({"check", dir + "/" + name}, out);
      json const v    = json::parse(out);
      bool       same = true;
      for (auto const& r : v.at("reports")) {
        same = same && r.at("holds") == v.at("reports")[0].at("holds")
               && r.at("holds") == r.at("failures").empty()
               && v.at("flags").at(r.at("condition").get<std::string>())
                      == r.at("holds");
      }
      if (v.at("consistent") != same || code != (same ? 0 : 1)
          || v.at("reports").size() != 11 || v.at("flags").size() != 11) {
        problems.push_back(std::string("check ") + name);
      }
    }
    if (run({"check", dir + "/constant.gps", "--condition", "C1"}, out) != 1) {
      problems.push_back("single failing condition exit code");
    }
    if (run({"validate", dir + "/garbage.gps"}, out) != 2) {
      problems.push_back("garbage exit code");
    }
    if (run({"validate", dir + "/nonassoc.gps"}, out) != 1) {
      problems.push_back("non-associative exit code");
    }
    if (run({"enumerate", "--n", "9", "--k", "1"}, out) != 3) {
      problems.push_back("budget exit code");
    }
    run({"check", dir + "/z2-pair.gps"}, out);
    if (json::parse(out) != json::parse(slurp(dir + "/z2-pair.check.json"))) {
      problems.push_back("golden JSON");
    }
    std::string detail =
        "6 fixtures round-trip, exit codes 0/1/2/3, golden "
        "JSON";
    for (auto const& p : problems) {
      detail += "; FAILED " + p;
    }
    return {problems.empty(), detail};
  }
}  // namespace

int main() {
  struct Criterion {
    char const* title;
    Outcome (*run)();
  };
  Criterion const criteria[] = {
      {"consistency sweep", consistency_sweep},
      {"Z/2 pair: all 11 conditions hold", z2_pair_fixture},
      {"N is a semilattice congruence", semilattice_congruence},
      {"closure identities", closure_identities},
      {"filter oracle", filter_oracle},
      {"witness upgrade", witness_upgrade},
      {"enumeration counts", enumeration_counts},
      {"strongly regular implies completely regular", implication},
      {"CLI contract", cli_contract},
  };
  int failed = 0;
  int index  = 0;
  for (auto const& c : criteria) {
    ++index;
    auto const start = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("criterion %d: %s  %s (%s) [%.1fs]\n",
                index,
                o.pass ? "PASS" : "FAIL",
                c.title,
                o.detail.c_str(),
                secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}

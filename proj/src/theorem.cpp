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

#include "gammasg/theorem.hpp"

#include <cctype>  // for toupper
#include <map>     // for map

#include "gammasg/errors.hpp"
#include "gammasg/nrel.hpp"
#include "gammasg/regularity.hpp"
#include "gammasg/subsets.hpp"

namespace gammasg {

  namespace {
    using Kind = WitnessField::Kind;

    class ReportBuilder {
     public:
      ReportBuilder(OrderedGammaStructure const& M,
                    ConditionId                  id,
                    TheoremOptions const&        opts)
          : _M(M),
            _default_names(opts.names == nullptr
                               ? Names::indices(M.size(), M.number_of_ops())
                               : Names{}),
            _names(opts.names == nullptr ? _default_names : *opts.names) {
        _report.id = id;
      }

      Names const& names() const noexcept {
        return _names;
      }

      void fail(std::optional<element_index> a, std::string reason) {
        _report.failures.push_back({a, std::move(reason)});
      }

      void witness(element_index a, std::vector<WitnessField> fields) {
        _report.witnesses.push_back({a, std::move(fields)});
      }

      std::string const& el(element_index a) const {
        return _names.element(a);
      }

      std::string const& op(op_index g) const {
        return _names.op(g);
      }

      std::string set(SubsetMask const& m) const {
        return _names.subset(m);
      }

      std::string defect(SubsetMask const& T, SrsDefect const& d) const {
        switch (d.kind) {
          case SrsDefect::Kind::empty:
            return "it is empty";
          case SrsDefect::Kind::not_closed:
            return "it is not closed: " + el(d.x) + " " + op(d.op) + " "
                   + el(d.y) + " = " + el(_M.product(d.x, d.op, d.y))
                   + " lies outside " + set(T);
          case SrsDefect::Kind::no_witness:
            return "element " + el(d.x)
                   + " has no strong-regularity witness inside it";
        }
        return "";
      }

      ConditionReport finish() {
        _report.holds = _report.failures.empty();
        return std::move(_report);
      }

     private:
      OrderedGammaStructure const& _M;
      Names                        _default_names;
      Names const&                 _names;
      ConditionReport              _report;
    };

    // Memoised "is T a strongly regular subsemigroup".
    class SrsCache {
     public:
      explicit SrsCache(OrderedGammaStructure const& M) : _M(M) {}

      std::optional<SrsDefect> const& operator()(SubsetMask const& T) {
        auto it = _cache.find(T);
        if (it == _cache.end()) {
          it = _cache.emplace(T, srs_defect(_M, T)).first;
        }
        return it->second;
      }

     private:
      OrderedGammaStructure const&                   _M;
      std::map<SubsetMask, std::optional<SrsDefect>> _cache;
    };

    // The "(MΓaΓM] is a strongly regular subsemigroup" clause shared by
    // C5-C8, K2 and K3. Returns whether it held.
    bool mam_clause(OrderedGammaStructure const& M,
                    ReportBuilder&               rb,
                    SrsCache&                    srs,
                    element_index                a) {
      auto const  mam    = principal_set(M, Pattern::m_a_m, a);
      auto const& defect = srs(mam);
      if (defect) {
        rb.fail(a,
                "(MΓ" + rb.el(a) + "ΓM] = " + rb.set(mam)
                    + " is not a strongly regular subsemigroup: "
                    + rb.defect(mam, *defect));
        return false;
      }
      return true;
    }

    bool in_down_product(OrderedGammaStructure const& M,
                         element_index                a,
                         SubsetMask const&            A,
                         SubsetMask const&            B) {
      return down_closure(M, product_gamma(M, A, B)).contains(a);
    }
  }  // namespace

  std::string to_string(ConditionId id) {
    static constexpr std::array<char const*, kNumberOfConditions> names = {
        "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "K1", "K2", "K3"};
    return names[static_cast<std::size_t>(id)];
  }

  ConditionId parse_condition(std::string_view name) {
    std::string upper(name);
    for (auto& c : upper) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    for (auto id : kAllConditions) {
      if (upper == to_string(id)) {
        return id;
      }
    }
    throw UsageError("unknown condition \"" + std::string(name) + "\"");
  }

  ConditionReport check_C1(OrderedGammaStructure const& M,
                           TheoremOptions const&        opts) {
    ReportBuilder rb(M, ConditionId::C1, opts);
    auto const    all = M.full();
    for (element_index a = 0; a < M.size(); ++a) {
      if (auto w = strong_witness(M, a, all)) {
        rb.witness(a,
                   {WitnessField::element_value("x", w->x),
                    WitnessField::op_value("gamma", w->gamma),
                    WitnessField::op_value("mu", w->mu)});
      } else {
        rb.fail(a,
                "no x, γ, μ with " + rb.el(a) + " <= " + rb.el(a) + "γxμ"
                    + rb.el(a) + " and " + rb.el(a) + "γx = xγ" + rb.el(a)
                    + " = xμ" + rb.el(a) + " = " + rb.el(a) + "μx");
      }
    }
    return rb.finish();
  }

  ConditionReport check_K1(OrderedGammaStructure const& M,
                           TheoremOptions const&        opts) {
    auto report = check_C1(M, opts);
    report.id   = ConditionId::K1;
    return report;
  }

  ConditionReport check_C2(OrderedGammaStructure const& M,
                           TheoremOptions const&        opts) {
    ReportBuilder     rb(M, ConditionId::C2, opts);
    std::size_t const k = M.number_of_ops();
    for (element_index a = 0; a < M.size(); ++a) {
      bool found = false;
      for (element_index y = 0; y < M.size() && !found; ++y) {
        for (op_index g = 0; g < k && !found; ++g) {
          for (op_index m = 0; m < k && !found; ++m) {
            auto const agy = M.product(a, g, y);
            auto const yma = M.product(y, m, a);
            found          = M.leq(a, M.product(agy, m, a))
                             && M.leq(y, M.product(yma, g, y))
                             && agy == M.product(y, g, a) && agy == yma
                             && agy == M.product(a, m, y);
            if (found) {
              rb.witness(a,
                         {WitnessField::element_value("y", y),
                          WitnessField::op_value("gamma", g),
                          WitnessField::op_value("mu", m)});
            }
          }
        }
      }
      if (!found) {
        rb.fail(a,
                "no y, γ, μ with " + rb.el(a) + " <= " + rb.el(a) + "γyμ"
                    + rb.el(a) + ", y <= yμ" + rb.el(a) + "γy and " + rb.el(a)
                    + "γy = yγ" + rb.el(a) + " = yμ" + rb.el(a) + " = "
                    + rb.el(a) + "μy");
      }
    }
    return rb.finish();
  }

  ConditionReport check_C3(OrderedGammaStructure const& M,
                           TheoremOptions const&        opts) {
    ReportBuilder rb(M, ConditionId::C3, opts);
    auto const    rel = n_relation(M);
    for (auto const& cls : rel.classes()) {
      if (auto defect = srs_defect(M, cls)) {
        element_index who = defect->kind == SrsDefect::Kind::no_witness
                                ? defect->x
                                : cls.first();
        rb.fail(who,
                "𝒩-class " + rb.set(cls)
                    + " is not a strongly regular subsemigroup: "
                    + rb.defect(cls, *defect));
        continue;
      }
      for (auto a : cls) {
        auto w = strong_witness(M, a, cls);
        rb.witness(a,
                   {WitnessField::subset_value("class", cls),
                    WitnessField::element_value("x", w->x),
                    WitnessField::op_value("gamma", w->gamma),
                    WitnessField::op_value("mu", w->mu)});
      }
    }
    return rb.finish();
  }

  ConditionReport check_C4(OrderedGammaStructure const& M,
                           TheoremOptions const&        opts) {
    ReportBuilder rb(M, ConditionId::C4, opts);
    auto const    lefts = enumerate_substructures(
        M, SubstructureKind::left_ideal, opts.subset_cap);
    auto const rights = enumerate_substructures(
        M, SubstructureKind::right_ideal, opts.subset_cap);

    auto semiprime = [&](SubsetMask const& T, char const* what) {
      auto const a = semiprime_counterexample(M, T);
      if (a != M.size()) {
        rb.fail(a,
                std::string(what) + " " + rb.set(T)
                    + " is not semiprime: " + rb.el(a) + "Γ" + rb.el(a) + " ⊆ "
                    + rb.set(T) + " but " + rb.el(a) + " ∉ " + rb.set(T));
      }
    };
    for (auto const& L : lefts) {
      semiprime(L, "left ideal");
    }
    for (auto const& R : rights) {
      semiprime(R, "right ideal");
    }

    SrsCache srs(M);
    for (auto const& L : lefts) {
      for (auto const& R : rights) {
        auto const  T      = down_closure(M, product_gamma(M, L, R));
        auto const& defect = srs(T);
        if (defect) {
          std::optional<element_index> who;
          if (defect->kind == SrsDefect::Kind::no_witness) {
            who = defect->x;
          }
          rb.fail(who,
                  "(LΓR] = " + rb.set(T) + " for L = " + rb.set(L) + ", R = "
                      + rb.set(R) + " is not a strongly regular subsemigroup: "
                      + rb.defect(T, *defect));
        }
      }
    }
    return rb.finish();
  }

  ConditionReport check_C5(OrderedGammaStructure const& M,
                           TheoremOptions const&        opts) {
    ReportBuilder rb(M, ConditionId::C5, opts);
    SrsCache      srs(M);
    for (element_index a = 0; a < M.size(); ++a) {
      auto const left  = principal_set(M, Pattern::m_a_a, a);
      auto const right = principal_set(M, Pattern::a_a_m, a);
      bool       ok    = true;
      if (!left.contains(a)) {
        ok = false;
        rb.fail(a,
                rb.el(a) + " ∉ (MΓ" + rb.el(a) + "Γ" + rb.el(a)
                    + "] = " + rb.set(left) + " (not left regular)");
      }
      if (!right.contains(a)) {
        ok = false;
        rb.fail(a,
                rb.el(a) + " ∉ (" + rb.el(a) + "Γ" + rb.el(a)
                    + "ΓM] = " + rb.set(right) + " (not right regular)");
      }
      ok = mam_clause(M, rb, srs, a) && ok;
      if (ok) {
        rb.witness(a,
                   {WitnessField::subset_value("MaaM_left", left),
                    WitnessField::subset_value("aaM_right", right),
                    WitnessField::subset_value(
                        "MaM", principal_set(M, Pattern::m_a_m, a))});
      }
    }
    return rb.finish();
  }

  ConditionReport check_C6(OrderedGammaStructure const& M,
                           TheoremOptions const&        opts) {
    ReportBuilder     rb(M, ConditionId::C6, opts);
    SrsCache          srs(M);
    std::size_t const k = M.number_of_ops();

    std::vector<SubsetMask> mam(M.size());
    for (element_index e = 0; e < M.size(); ++e) {
      mam[e] = principal_set(M, Pattern::m_a_m, e);
    }

    for (element_index a = 0; a < M.size(); ++a) {
      auto const pool  = principal_set(M, Pattern::m_a_a_m, a);
      bool       found = false;
      for (auto e : pool) {
        if (found || mam[e] != mam[a]) {
          continue;
        }
        for (auto e2 : pool) {
          if (found || mam[e2] != mam[a]) {
            continue;
          }
          for (op_index rho = 0; rho < k && !found; ++rho) {
            if (!M.leq(e, M.product(e, rho, e2))
                || !M.leq(a, M.product(a, rho, e2))) {
              continue;
            }
            for (op_index mu = 0; mu < k && !found; ++mu) {
              if (M.leq(a, M.product(e, mu, a))) {
                found = true;
                rb.witness(a,
                           {WitnessField::element_value("e", e),
                            WitnessField::element_value("e_prime", e2),
                            WitnessField::op_value("rho", rho),
                            WitnessField::op_value("mu", mu)});
              }
            }
          }
        }
      }
      if (!found) {
        rb.fail(a,
                "no e, e' in MΓ" + rb.el(a) + "Γ" + rb.el(a) + "ΓM = "
                    + rb.set(pool) + " and ρ, μ with e <= eρe', " + rb.el(a)
                    + " <= eμ" + rb.el(a) + ", " + rb.el(a) + " <= " + rb.el(a)
                    + "ρe' and (MΓeΓM] = (MΓe'ΓM] = (MΓ" + rb.el(a) + "ΓM]");
      }
      mam_clause(M, rb, srs, a);
    }
    return rb.finish();
  }

  ConditionReport check_C7(OrderedGammaStructure const& M,
                           TheoremOptions const&        opts) {
    ReportBuilder     rb(M, ConditionId::C7, opts);
    SrsCache          srs(M);
    std::size_t const n = M.size();
    std::size_t const k = M.number_of_ops();
    for (element_index a = 0; a < n; ++a) {
      bool found = false;
      for (element_index e = 0; e < n && !found; ++e) {
        for (element_index e2 = 0; e2 < n && !found; ++e2) {
          for (op_index rho = 0; rho < k && !found; ++rho) {
            for (op_index mu = 0; mu < k && !found; ++mu) {
              if (M.leq(a, M.product(e, mu, a))
                  && M.leq(a, M.product(a, rho, e2))) {
                found = true;
                rb.witness(a,
                           {WitnessField::element_value("e", e),
                            WitnessField::element_value("e_prime", e2),
                            WitnessField::op_value("rho", rho),
                            WitnessField::op_value("mu", mu)});
              }
            }
          }
        }
      }
      if (!found) {
        rb.fail(a,
                "no e, e' in M and ρ, μ with " + rb.el(a) + " <= eμ" + rb.el(a)
                    + " and " + rb.el(a) + " <= " + rb.el(a) + "ρe'");
      }
      mam_clause(M, rb, srs, a);
    }
    return rb.finish();
  }

  ConditionReport check_C8(OrderedGammaStructure const& M,
                           TheoremOptions const&        opts) {
    ReportBuilder rb(M, ConditionId::C8, opts);
    SrsCache      srs(M);
    for (element_index a = 0; a < M.size(); ++a) {
      auto const ma = principal_set(M, Pattern::m_a, a);
      auto const am = principal_set(M, Pattern::a_m, a);
      bool       ok = true;
      if (!ma.contains(a)) {
        ok = false;
        rb.fail(a, rb.el(a) + " ∉ (MΓ" + rb.el(a) + "] = " + rb.set(ma));
      }
      if (!am.contains(a)) {
        ok = false;
        rb.fail(a, rb.el(a) + " ∉ (" + rb.el(a) + "ΓM] = " + rb.set(am));
      }
      ok = mam_clause(M, rb, srs, a) && ok;
      if (ok) {
        rb.witness(a,
                   {WitnessField::subset_value("Ma", ma),
                    WitnessField::subset_value("aM", am)});
      }
    }
    return rb.finish();
  }

  ConditionReport check_K2(OrderedGammaStructure const& M,
                           TheoremOptions const&        opts) {
    ReportBuilder rb(M, ConditionId::K2, opts);
    SrsCache      srs(M);
    auto const    all = M.full();
    for (element_index a = 0; a < M.size(); ++a) {
      auto const E = principal_set(M, Pattern::m_a_a_m, a);
      auto const A = M.singleton(a);
      auto const ename =
          "E = MΓ" + rb.el(a) + "Γ" + rb.el(a) + "ΓM = " + rb.set(E);
      bool ok = true;
      if (!E.is_subset_of(down_closure(M, product_gamma(M, E, E)))) {
        ok = false;
        rb.fail(a, ename + " is not contained in (EΓE]");
      }
      if (!in_down_product(M, a, E, A)) {
        ok = false;
        rb.fail(a, rb.el(a) + " ∉ (EΓ" + rb.el(a) + "] for " + ename);
      }
      if (!in_down_product(M, a, A, E)) {
        ok = false;
        rb.fail(a, rb.el(a) + " ∉ (" + rb.el(a) + "ΓE] for " + ename);
      }
      auto const meM =
          down_closure(M, product_gamma(M, product_gamma(M, all, E), all));
      auto const maM =
          down_closure(M, product_gamma(M, product_gamma(M, all, A), all));
      if (meM != maM) {
        ok = false;
        rb.fail(a,
                "(MΓEΓM] = " + rb.set(meM) + " differs from (MΓ" + rb.el(a)
                    + "ΓM] = " + rb.set(maM) + " for " + ename);
      }
      ok = mam_clause(M, rb, srs, a) && ok;
      if (ok) {
        rb.witness(a, {WitnessField::subset_value("E", E)});
      }
    }
    return rb.finish();
  }

  ConditionReport check_K3(OrderedGammaStructure const& M,
                           TheoremOptions const&        opts) {
    ReportBuilder     rb(M, ConditionId::K3, opts);
    SrsCache          srs(M);
    std::size_t const n = M.size();
    if (opts.k3_exhaustive && (n > opts.subset_cap || n >= 64)) {
      throw ResourceError("K3 exhaustive search: n = " + std::to_string(n)
                          + " exceeds the subset scan cap of "
                          + std::to_string(opts.subset_cap));
    }
    for (element_index a = 0; a < n; ++a) {
      auto const                A = M.singleton(a);
      std::optional<SubsetMask> chosen;
      auto                      good = [&](SubsetMask const& E) {
        return in_down_product(M, a, E, A) && in_down_product(M, a, A, E);
      };
      if (opts.k3_exhaustive) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
          auto E = SubsetMask::from_bits(n, bits);
          if (good(E)) {
            chosen = E;
            break;
          }
        }
      } else if (good(M.full())) {
        // E = M is the largest candidate.
        chosen = M.full();
      }
      if (!chosen) {
        rb.fail(a,
                "no subset E with " + rb.el(a) + " ∈ (EΓ" + rb.el(a) + "] and "
                    + rb.el(a) + " ∈ (" + rb.el(a) + "ΓE]");
      }
      bool ok = mam_clause(M, rb, srs, a) && chosen.has_value();
      if (ok) {
        rb.witness(a, {WitnessField::subset_value("E", *chosen)});
      }
    }
    return rb.finish();
  }

  ConditionReport check_condition(OrderedGammaStructure const& M,
                                  ConditionId                  id,
                                  TheoremOptions const&        opts) {
    switch (id) {
      case ConditionId::C1:
        return check_C1(M, opts);
      case ConditionId::C2:
        return check_C2(M, opts);
      case ConditionId::C3:
        return check_C3(M, opts);
      case ConditionId::C4:
        return check_C4(M, opts);
      case ConditionId::C5:
        return check_C5(M, opts);
      case ConditionId::C6:
        return check_C6(M, opts);
      case ConditionId::C7:
        return check_C7(M, opts);
      case ConditionId::C8:
        return check_C8(M, opts);
      case ConditionId::K1:
        return check_K1(M, opts);
      case ConditionId::K2:
        return check_K2(M, opts);
      case ConditionId::K3:
        return check_K3(M, opts);
    }
    throw UsageError("unknown condition");
  }

  EquivalenceVerdict equivalence_verdict(OrderedGammaStructure const& M,
                                         TheoremOptions const&        opts) {
    EquivalenceVerdict verdict;
    verdict.reports.reserve(kNumberOfConditions);
    for (auto id : kAllConditions) {
      verdict.reports.push_back(check_condition(M, id, opts));
      verdict.flags[static_cast<std::size_t>(id)] =
          verdict.reports.back().holds;
    }
    for (bool f : verdict.flags) {
      verdict.consistent = verdict.consistent && f == verdict.flags[0];
    }
    return verdict;
  }

}  // namespace gammasg

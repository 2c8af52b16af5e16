/*
 * Copyright 2026 The crossconn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "crossconn/report.hpp"

#include <chrono>  // for steady_clock
#include <sstream> // for ostringstream

#include <fmt/format.h>  // for fmt::format

#include "crossconn/category_export.hpp"  // for to_json(Morphism)
#include "crossconn/error.hpp"            // for Error
#include "crossconn/green.hpp"            // for green

namespace crossconn {

  using nlohmann::json;

  namespace {

    template <typename T>
    json optional_json(std::optional<T> const& x) {
      return x ? json(*x) : json(nullptr);
    }

    json pair_json(std::optional<std::pair<element_t, element_t>> const& p) {
      return p ? json::array({p->first, p->second}) : json(nullptr);
    }

  }  // namespace

  json analysis_summary(FiniteSemigroup const& S) {
    auto const g = green(S);
    json       j;
    j["order"]       = S.size();
    j["idempotents"] = idempotents(S);
    j["green"]       = {{"L", g.num_lclasses},
                        {"R", g.num_rclasses},
                        {"H", g.num_hclasses},
                        {"D", g.num_dclasses}};
    j["regular"]     = is_regular(S);
    j["inverse"]     = is_inverse(S);
    j["clifford"]    = is_clifford(S);
    j["clifford_by_d_classes"] = is_clifford_by_d_classes(S);
    j["commutative"] = is_commutative(S);
    j["band"]        = is_band(S);
    j["semilattice"] = is_semilattice(S);
    j["group"]       = is_group(S);
    j["non_regular"] = optional_json(first_non_regular(S));
    if (auto w = first_non_central_idempotent(S)) {
      j["centrality_witness"] = {{"idempotent", w->idempotent},
                                 {"element", w->element}};
    } else {
      j["centrality_witness"] = nullptr;
    }
    if (S.has_labels()) {
      j["labels"] = S.labels();
    }
    return j;
  }

  std::string analysis_text(FiniteSemigroup const& S) {
    auto const         j = analysis_summary(S);
    std::ostringstream out;
    out << fmt::format("order        {}\n", j["order"].get<std::size_t>());
    out << "idempotents  " << j["idempotents"].dump() << '\n';
    out << fmt::format("green        L={} R={} H={} D={}\n",
                       j["green"]["L"].get<std::size_t>(),
                       j["green"]["R"].get<std::size_t>(),
                       j["green"]["H"].get<std::size_t>(),
                       j["green"]["D"].get<std::size_t>());
    for (auto const* key : {"regular", "inverse", "clifford", "semilattice", "group"}) {
      out << fmt::format("{:<13}{}\n", key, j[key].get<bool>());
    }
    if (!j["centrality_witness"].is_null()) {
      out << fmt::format("central      no: e={} x={}\n",
                         j["centrality_witness"]["idempotent"].get<std::size_t>(),
                         j["centrality_witness"]["element"].get<std::size_t>());
    }
    return out.str();
  }

  json cone_dump(TLSemigroup const& tl) {
    std::vector<std::optional<element_t>> least(tl.cones.size());
    for (element_t a = 0; a < tl.principal_index.size(); ++a) {
      auto& w = least[tl.principal_index[a]];
      if (!w) {
        w = a;
      }
    }
    json cones = json::array();
    for (std::size_t i = 0; i < tl.cones.size(); ++i) {
      json components = json::array();
      for (auto const& m : tl.cones[i].components) {
        components.push_back(to_json(m));
      }
      cones.push_back({{"index", i},
                       {"apex", tl.cones[i].apex},
                       {"components", components},
                       {"principal", least[i].has_value()},
                       {"witness", optional_json(least[i])}});
    }
    return {{"num_cones", tl.cones.size()},
            {"semigroup_order", tl.principal_index.size()},
            {"visited_per_apex", tl.visited_per_apex},
            {"cones", cones}};
  }

  std::string cone_text(TLSemigroup const& tl) {
    auto const         j = cone_dump(tl);
    std::ostringstream out;
    out << fmt::format("{} cones, semigroup order {}\n",
                       j["num_cones"].get<std::size_t>(),
                       j["semigroup_order"].get<std::size_t>());
    for (auto const& c : j["cones"]) {
      out << fmt::format("{:>3}  apex {:<3} {}  {}\n",
                         c["index"].get<std::size_t>(),
                         c["apex"].get<std::size_t>(),
                         c["components"].dump(),
                         c["principal"].get<bool>()
                             ? fmt::format("principal, a={}",
                                           c["witness"].get<std::size_t>())
                             : std::string("not principal"));
    }
    return out.str();
  }

  json to_json(Prop2Report const& r) {
    return {{"holds", r.holds},
            {"witness", pair_json(r.witness)},
            {"witness_iso", r.witness_iso ? to_json(*r.witness_iso) : json(nullptr)},
            {"identity_failures", r.identity_failures}};
  }

  json to_json(Prop3Report const& r) {
    json collision = nullptr;
    if (r.collision) {
      collision = json::array({to_json(r.collision->first), to_json(r.collision->second)});
    }
    return {{"holds", r.holds},
            {"raw_triples", r.raw_triples},
            {"morphisms", r.morphisms},
            {"collision", collision},
            {"general_rule_agrees", r.general_rule_agrees}};
  }

  json to_json(Prop4Report const& r) {
    return {{"holds", r.holds},
            {"num_cones", r.num_cones},
            {"num_principal", r.num_principal},
            {"non_principal", optional_json(r.non_principal)}};
  }

  json to_json(Prop5Report const& r) {
    return {{"holds", r.holds}, {"collision", pair_json(r.collision)}};
  }

  json to_json(HomomorphismReport const& r) {
    return {{"holds", r.holds}, {"failure", pair_json(r.failure)}};
  }

  json to_json(Theorem6Report const& r) {
    return {{"homomorphism", r.homomorphism},
            {"injective", r.injective},
            {"surjective", r.surjective},
            {"isomorphism", r.isomorphism},
            {"semigroup_order", r.semigroup_order},
            {"tl_order", r.tl_order},
            {"homomorphism_failure", pair_json(r.homomorphism_failure)},
            {"injectivity_failure", pair_json(r.injectivity_failure)},
            {"not_in_image", optional_json(r.not_in_image)}};
  }

  json to_json(CategoryIso const& iso) {
    json morphisms = json::array();
    for (auto const& [m, image] : iso.morphism_map) {
      morphisms.push_back(json::array({to_json(m), to_json(image)}));
    }
    return {{"object_map", iso.object_map},
            {"morphism_map", morphisms},
            {"verified", iso.verified}};
  }

  json to_json(DualIsoReport const& r) {
    return {{"holds", r.holds},
            {"semigroup_iso", optional_json(r.semigroup_iso)},
            {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
            {"failure", r.failure}};
  }

  json to_json(Theorem7Report const& r) {
    return {{"holds", r.holds},
            {"tl_order", r.tl_order},
            {"dual_iso", to_json(r.dual_iso)}};
  }

  json to_json(Theorem8Report const& r) {
    return {{"holds", r.holds},
            {"tr_order", r.tr_order},
            {"anti_isomorphic", r.anti_isomorphic},
            {"anti_iso", optional_json(r.anti_iso)},
            {"dual_iso", to_json(r.dual_iso)}};
  }

  json to_json(DegenerationReport const& r) {
    return {{"holds", r.holds},
            {"gamma", to_json(r.gamma)},
            {"delta", to_json(r.delta)}};
  }

  namespace {

    json to_json(SemilatticeReport const& r) {
      return {{"holds", r.holds},
              {"theorem6", crossconn::to_json(r.theorem6)},
              {"theorem7", crossconn::to_json(r.theorem7)},
              {"theorem8", crossconn::to_json(r.theorem8)},
              {"tl_commutative", r.tl_commutative},
              {"tl_idempotent", r.tl_idempotent},
              {"same_order", r.same_order}};
    }

    // Adds rows, timing each one.
    class RowBuilder {
     public:
      explicit RowBuilder(std::vector<CheckRow>& rows) : _rows(rows) {}

      // A row that must pass when \p premise holds; otherwise it is
      // reported not applicable with the observed outcome kept.
      template <typename F>
      void conditional(std::string name,
                       bool        premise,
                       std::string premise_note,
                       F&&         run) {
        auto const start       = std::chrono::steady_clock::now();
        auto [holds, detail]   = run();
        CheckRow row{std::move(name), Status::pass, "", std::move(detail), 0};
        if (!premise) {
          row.status = Status::not_applicable;
          row.note   = fmt::format("premise fails: {}; observed {}",
                                 premise_note,
                                 holds ? "holds" : "fails");
        } else if (!holds) {
          row.status = Status::fail;
        }
        row.millis = elapsed(start);
        _rows.push_back(std::move(row));
      }

      void skipped(std::string name, std::string note) {
        _rows.push_back({std::move(name), Status::not_applicable, std::move(note), nullptr, 0});
      }

      void failed(std::string name, std::string note) {
        _rows.push_back({std::move(name), Status::fail, std::move(note), nullptr, 0});
      }

     private:
      static double elapsed(std::chrono::steady_clock::time_point start) {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
            .count();
      }

      std::vector<CheckRow>& _rows;
    };

    std::pair<bool, json> with_json(bool holds, json detail) {
      return {holds, std::move(detail)};
    }

    std::vector<std::string> const ROW_NAMES = {"prop2",
                                                "prop3",
                                                "prop4",
                                                "prop5",
                                                "theorem6",
                                                "theorem7",
                                                "theorem8",
                                                "degeneration",
                                                "semilattice",
                                                "homomorphism",
                                                "tl_wellformed"};

  }  // namespace

  std::string to_string(Status s) {
    switch (s) {
      case Status::pass:
        return "PASS";
      case Status::fail:
        return "FAIL";
      case Status::not_applicable:
        return "N-A";
    }
    return "?";
  }

  bool VerifyReport::failed() const {
    for (auto const& row : rows) {
      if (row.status == Status::fail) {
        return true;
      }
    }
    return false;
  }

  VerifyReport run_verification(FiniteSemigroup const& S,
                                std::string const&     source,
                                VerifyOptions const&   opts,
                                bool                   include_timings) {
    VerifyReport report;
    report.source          = source;
    report.summary         = analysis_summary(S);
    report.include_timings = include_timings;
    report.budgets         = {{"budget_per_apex", opts.enumeration.budget_per_apex},
                              {"node_budget", opts.search.node_budget}};
    RowBuilder rows(report.rows);

    if (!is_regular(S)) {
      for (auto const& name : ROW_NAMES) {
        rows.skipped(name, "premise fails: not regular");
      }
      report.tl = nullptr;
      return report;
    }

    bool const clifford    = is_clifford(S);
    bool const semilattice = is_semilattice(S);
    auto const L           = build_L(S);

    rows.conditional("prop2", clifford, "not Clifford", [&] {
      auto r = verify_prop2(L);
      return with_json(r.holds, to_json(r));
    });
    rows.conditional("prop3", clifford, "not Clifford", [&] {
      auto r = verify_prop3(L);
      return with_json(r.holds, to_json(r));
    });

    std::optional<TLSemigroup> tl;
    std::string                tl_error;
    try {
      tl = build_TL(L, opts.enumeration);
    } catch (Error const& e) {
      if (e.is_budget()) {
        throw;
      }
      tl_error = e.what();
    }

    if (tl) {
      rows.conditional("prop4", clifford, "not Clifford", [&] {
        auto r = verify_prop4(*tl);
        return with_json(r.holds, to_json(r));
      });
      rows.conditional("prop5", clifford, "not Clifford", [&] {
        auto r = verify_prop5(*tl);
        return with_json(r.holds, to_json(r));
      });
      rows.conditional("theorem6", clifford, "not Clifford", [&] {
        auto r = verify_theorem6(S, *tl);
        return with_json(r.isomorphism, to_json(r));
      });
    } else {
      for (auto const* name : {"prop4", "prop5", "theorem6"}) {
        rows.failed(name, tl_error);
      }
    }
    rows.conditional("theorem7", clifford, "not Clifford", [&] {
      auto r = verify_theorem7(S, opts);
      return with_json(r.holds, to_json(r));
    });
    rows.conditional("theorem8", clifford, "not Clifford", [&] {
      auto r = verify_theorem8(S, opts);
      return with_json(r.holds, to_json(r));
    });
    rows.conditional("degeneration", clifford, "not Clifford", [&] {
      auto r = verify_degeneration(S, opts);
      return with_json(r.holds, to_json(r));
    });
    if (semilattice) {
      rows.conditional("semilattice", true, "", [&] {
        auto r = verify_semilattice_theorems(S, opts);
        return with_json(r.holds, to_json(r));
      });
    } else {
      rows.skipped("semilattice", "premise fails: not a semilattice");
    }
    rows.conditional("homomorphism", true, "", [&] {
      auto r = verify_homomorphism_law(L);
      return with_json(r.holds, to_json(r));
    });
    if (tl) {
      rows.conditional("tl_wellformed", true, "", [&] {
        json detail = {{"associative", true}, {"regular", tl->is_regular()}};
        return with_json(tl->is_regular(), detail);
      });
      report.tl = {{"order", tl->cones.size()},
                   {"semigroup_order", S.size()},
                   {"visited_per_apex", tl->visited_per_apex}};
    } else {
      rows.failed("tl_wellformed", tl_error);
      report.tl = nullptr;
    }
    return report;
  }

  json to_json(VerifyReport const& r) {
    json rows = json::array();
    for (auto const& row : r.rows) {
      json j = {{"name", row.name},
                {"status", to_string(row.status)},
                {"note", row.note},
                {"detail", row.detail}};
      if (r.include_timings) {
        j["millis"] = row.millis;
      }
      rows.push_back(std::move(j));
    }
    return {{"source", r.source},
            {"summary", r.summary},
            {"rows", rows},
            {"tl", r.tl},
            {"budgets", r.budgets},
            {"failed", r.failed()}};
  }

  std::string to_text(VerifyReport const& r) {
    std::ostringstream out;
    out << "source " << r.source << '\n';
    out << fmt::format("|S| = {}", r.summary["order"].get<std::size_t>());
    if (!r.tl.is_null()) {
      out << fmt::format(", |TL| = {}", r.tl["order"].get<std::size_t>());
    }
    out << fmt::format(", clifford = {}\n", r.summary["clifford"].get<bool>());
    for (auto const& row : r.rows) {
      out << fmt::format("{:<14}{}", row.name, to_string(row.status));
      if (!row.note.empty()) {
        out << fmt::format("{:<{}}{}", "", 6 - to_string(row.status).size(), row.note);
      }
      if (r.include_timings) {
        out << fmt::format("  ({:.1f} ms)", row.millis);
      }
      out << '\n';
    }
    out << (r.failed() ? "result FAIL\n" : "result OK\n");
    return out.str();
  }

}  // namespace crossconn

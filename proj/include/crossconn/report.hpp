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

#ifndef CROSSCONN_REPORT_HPP_
#define CROSSCONN_REPORT_HPP_

#include <string>  // for string
#include <vector>  // for vector

#include "json.hpp"  // for nlohmann::json

#include "category.hpp"   // for NormalCategory
#include "duals.hpp"      // for VerifyOptions and the theorem reports
#include "semigroup.hpp"  // for FiniteSemigroup
#include "tl.hpp"         // for TLSemigroup

namespace crossconn {

  //! Order, idempotents, Green's class counts and the structural flags.
  nlohmann::json analysis_summary(FiniteSemigroup const& S);
  std::string    analysis_text(FiniteSemigroup const& S);

  //! The cones of \p tl with apex, component triples, and for principal
  //! cones the least element witnessing it.
  nlohmann::json cone_dump(TLSemigroup const& tl);
  std::string    cone_text(TLSemigroup const& tl);

  nlohmann::json to_json(Prop2Report const& r);
  nlohmann::json to_json(Prop3Report const& r);
  nlohmann::json to_json(Prop4Report const& r);
  nlohmann::json to_json(Prop5Report const& r);
  nlohmann::json to_json(HomomorphismReport const& r);
  nlohmann::json to_json(Theorem6Report const& r);
  nlohmann::json to_json(CategoryIso const& iso);
  nlohmann::json to_json(DualIsoReport const& r);
  nlohmann::json to_json(Theorem7Report const& r);
  nlohmann::json to_json(Theorem8Report const& r);
  nlohmann::json to_json(DegenerationReport const& r);

  enum class Status { pass, fail, not_applicable };

  std::string to_string(Status s);

  struct CheckRow {
    std::string    name;
    Status         status;
    std::string    note;
    nlohmann::json detail;
    double         millis = 0;
  };

  struct VerifyReport {
    std::string           source;
    nlohmann::json        summary;
    std::vector<CheckRow> rows;
    nlohmann::json        tl;  // orders and enumeration statistics
    nlohmann::json        budgets;
    bool                  include_timings = false;

    //! Some row failed that must pass for the input's class.
    bool failed() const;
  };

  //! Runs prop2, prop3, prop4, prop5, theorem6, theorem7, theorem8,
  //! degeneration and the semilattice suite, then the two laws that hold
  //! for every regular semigroup (homomorphism, tl_wellformed).
  //!
  //! Rows whose premise is that S is Clifford (or a semilattice) report
  //! not_applicable on other inputs, with the observed outcome in their
  //! detail. Budget errors propagate.
  VerifyReport run_verification(FiniteSemigroup const& S,
                                std::string const&     source,
                                VerifyOptions const&   opts,
                                bool                   include_timings = false);

  nlohmann::json to_json(VerifyReport const& r);
  std::string    to_text(VerifyReport const& r);

}  // namespace crossconn

#endif  // CROSSCONN_REPORT_HPP_

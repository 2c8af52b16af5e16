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

#ifndef CROSSCONN_DUALS_HPP_
#define CROSSCONN_DUALS_HPP_

#include <cstddef>   // for size_t
#include <map>       // for map
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include "category.hpp"     // for NormalCategory, Morphism
#include "cones.hpp"        // for EnumerationOptions
#include "isomorphism.hpp"  // for ElementMap, SearchOptions
#include "tl.hpp"           // for TLSemigroup, Theorem6Report

namespace crossconn {

  //! An isomorphism between two normal categories.
  struct CategoryIso {
    //! object_map[i] is the position in the target of the image of the
    //! source object at position i.
    std::vector<std::size_t>     object_map;
    std::map<Morphism, Morphism> morphism_map;
    bool                         verified = false;
  };

  struct IsoCheck {
    bool        ok = true;
    std::string failure;
  };

  //! Checks that \p iso is a bijection on objects preserving inclusion both
  //! ways, a bijection on every hom-set, sends identities and inclusions to
  //! identities and inclusions, and preserves every composable pair.
  IsoCheck verify_category_iso(CategoryIso const&    iso,
                               NormalCategory const& from,
                               NormalCategory const& to);

  //! Transports structure along a semigroup isomorphism
  //! phi: from.base() -> to.base().
  //!
  //! Throws NotAnIsomorphism if \p phi is not one, and FunctorialityFailed
  //! if the transported map does not verify.
  CategoryIso induced_category_iso(std::span<element_t const> phi,
                                   NormalCategory const&      from,
                                   NormalCategory const&      to);

  //! Independent exhaustive search for a category isomorphism, without
  //! reference to the base semigroups. Intended for categories with few
  //! objects; throws SearchBudgetExceeded when \p opts.node_budget runs out.
  std::optional<CategoryIso>
  find_category_iso_exhaustive(NormalCategory const& from,
                               NormalCategory const& to,
                               SearchOptions         opts = {});

  //! R(TL(S)): the concrete model of the normal dual of L(S).
  NormalCategory normal_dual_L(FiniteSemigroup const& S,
                               EnumerationOptions     opts = {});

  //! R(TR(S)) with TR(S) the cone semigroup of R(S); models the normal
  //! dual of R(S).
  NormalCategory normal_dual_R(FiniteSemigroup const& S,
                               EnumerationOptions     opts = {});

  struct DualIsoReport {
    bool                       holds = false;
    std::optional<ElementMap>  semigroup_iso;  // base of source -> target
    std::optional<CategoryIso> witness;
    std::string                failure;
  };

  struct Theorem7Report {
    //! N*L(S) = R(TL(S)) isomorphic to R(S).
    DualIsoReport dual_iso;
    std::size_t   tl_order = 0;
    bool          holds = false;
  };

  struct Theorem8Report {
    //! TR(S) isomorphic to opposite(S).
    bool                      anti_isomorphic = false;
    std::optional<ElementMap> anti_iso;  // TR(S) -> S
    //! N*R(S) isomorphic to L(S).
    DualIsoReport dual_iso;
    std::size_t   tr_order = 0;
    bool          holds = false;
  };

  struct DegenerationReport {
    //! R(S) -> N*L(S).
    DualIsoReport gamma;
    //! L(S) -> N*R(S).
    DualIsoReport delta;
    bool          holds = false;
  };

  struct SemilatticeReport {
    Theorem6Report theorem6;
    Theorem7Report theorem7;
    Theorem8Report theorem8;
    bool           tl_commutative = false;
    bool           tl_idempotent = false;
    bool           same_order = false;
    bool           holds = false;
  };

  struct VerifyOptions {
    EnumerationOptions enumeration;
    SearchOptions      search;
  };

  Theorem7Report verify_theorem7(FiniteSemigroup const& S,
                                 VerifyOptions          opts = {});
  Theorem8Report verify_theorem8(FiniteSemigroup const& S,
                                 VerifyOptions          opts = {});
  DegenerationReport verify_degeneration(FiniteSemigroup const& S,
                                         VerifyOptions          opts = {});

  //! Throws NotASemilattice unless S is commutative and idempotent.
  SemilatticeReport verify_semilattice_theorems(FiniteSemigroup const& S,
                                                VerifyOptions opts = {});

}  // namespace crossconn

#endif  // CROSSCONN_DUALS_HPP_

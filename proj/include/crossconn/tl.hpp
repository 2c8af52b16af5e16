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

#ifndef CROSSCONN_TL_HPP_
#define CROSSCONN_TL_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <utility>   // for pair
#include <vector>    // for vector

#include "category.hpp"   // for NormalCategory
#include "cones.hpp"      // for NormalCone, ConeIndex, EnumerationOptions
#include "semigroup.hpp"  // for FiniteSemigroup

namespace crossconn {

  //! The semigroup of all normal cones of a normal category.
  struct TLSemigroup {
    std::vector<NormalCone> cones;
    ConeIndex               index;
    //! Product table on cone positions; passed from_table validation.
    FiniteSemigroup table;
    //! principal_index[a] is the position of the principal cone of a.
    std::vector<std::size_t> principal_index;
    std::vector<std::size_t> visited_per_apex;

    //! For each cone gamma, some delta with gamma delta gamma = gamma, or
    //! nothing when gamma is not regular.
    std::vector<std::optional<std::size_t>> regular_witness;

    bool is_regular() const;
  };

  //! Enumerates the cones, fills the product table and records the
  //! principal cones. Throws ClosureFailed if a product is not among the
  //! enumerated cones, and NotAssociative if the table is not associative.
  TLSemigroup build_TL(NormalCategory const& C, EnumerationOptions opts = {});

  struct Prop4Report {
    bool                       holds = true;
    std::size_t                num_cones = 0;
    std::size_t                num_principal = 0;
    std::optional<std::size_t> non_principal;  // first, by position
  };

  //! Every cone is principal.
  Prop4Report verify_prop4(TLSemigroup const& tl);

  struct Prop5Report {
    bool                                     holds = true;
    std::optional<std::pair<element_t, element_t>> collision;  // a < b
  };

  //! a -> principal cone of a is injective.
  Prop5Report verify_prop5(TLSemigroup const& tl);

  struct HomomorphismReport {
    bool holds = true;
    //! First (a, b) with principal(a) principal(b) != principal(ab).
    std::optional<std::pair<element_t, element_t>> failure;
  };

  //! cone_product(rho^a, rho^b) = rho^(ab) for all a, b, checked on cones
  //! directly rather than through the table.
  HomomorphismReport verify_homomorphism_law(NormalCategory const& C);

  struct Theorem6Report {
    bool        homomorphism = false;
    bool        injective = false;
    bool        surjective = false;
    bool        isomorphism = false;
    std::size_t semigroup_order = 0;
    std::size_t tl_order = 0;
    std::optional<std::pair<element_t, element_t>> homomorphism_failure;
    std::optional<std::pair<element_t, element_t>> injectivity_failure;
    std::optional<std::size_t>                     not_in_image;
  };

  //! a -> rho^a is an isomorphism S -> TL(S).
  Theorem6Report verify_theorem6(FiniteSemigroup const& S,
                                 TLSemigroup const&     tl);
  Theorem6Report verify_theorem6(FiniteSemigroup const& S,
                                 EnumerationOptions     opts = {});

  //! rho-bar as an element map S -> TL(S), or nothing if it is not a
  //! bijection.
  std::optional<std::vector<element_t>> rho_bar(TLSemigroup const& tl);

}  // namespace crossconn

#endif  // CROSSCONN_TL_HPP_

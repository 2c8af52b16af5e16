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

#ifndef CROSSCONN_ISOMORPHISM_HPP_
#define CROSSCONN_ISOMORPHISM_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <span>      // for span
#include <vector>    // for vector

#include "semigroup.hpp"  // for FiniteSemigroup, element_t

namespace crossconn {

  using ElementMap = std::vector<element_t>;

  struct SearchOptions {
    //! Maximum number of candidate assignments tried before giving up with
    //! SearchBudgetExceeded.
    std::size_t node_budget = 10'000'000;
  };

  //! Returns the lexicographically least isomorphism S -> T, if any.
  //!
  //! Candidate images are restricted to elements with the same invariants
  //! (idempotency, index and period, ideal and Green's class sizes), and
  //! every assignment is closed under products before branching again.
  std::optional<ElementMap> find_isomorphism(FiniteSemigroup const& S,
                                             FiniteSemigroup const& T,
                                             SearchOptions          opts = {});

  //! An isomorphism S -> opposite(T).
  std::optional<ElementMap>
  find_anti_isomorphism(FiniteSemigroup const& S,
                        FiniteSemigroup const& T,
                        SearchOptions          opts = {});

  //! Checks phi(ab) = phi(a)phi(b) (or phi(b)phi(a) when \p anti) for every
  //! pair, after checking that \p map is a total map S -> T.
  bool verify_morphism(FiniteSemigroup const&     S,
                       FiniteSemigroup const&     T,
                       std::span<element_t const> map,
                       bool                       anti = false);

  bool is_bijection(std::span<element_t const> map, std::size_t codomain);

  //! verify_morphism and is_bijection.
  bool verify_isomorphism(FiniteSemigroup const&     S,
                          FiniteSemigroup const&     T,
                          std::span<element_t const> map,
                          bool                       anti = false);

  ElementMap inverse_map(std::span<element_t const> bijection);

}  // namespace crossconn

#endif  // CROSSCONN_ISOMORPHISM_HPP_

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

#ifndef CROSSCONN_TESTS_ORACLES_HPP_
#define CROSSCONN_TESTS_ORACLES_HPP_

// Deliberately naive reference computations. None of these share code with
// the library routines they are compared against.

#include <optional>  // for optional
#include <vector>    // for vector

#include "crossconn/category.hpp"     // for NormalCategory
#include "crossconn/cones.hpp"        // for NormalCone
#include "crossconn/isomorphism.hpp"  // for ElementMap
#include "crossconn/semigroup.hpp"    // for FiniteSemigroup

namespace oracle {

  using crossconn::element_t;
  using crossconn::FiniteSemigroup;

  using Relation = std::vector<std::vector<bool>>;

  struct Green {
    Relation L, R, H, D;
  };

  // a L b iff each divides the other on the left in S^1, and so on.
  Green green_by_divisibility(FiniteSemigroup const& S);

  // Tries every permutation in lexicographic order, so the result is the
  // lexicographically least isomorphism.
  std::optional<crossconn::ElementMap>
  brute_force_isomorphism(FiniteSemigroup const& S, FiniteSemigroup const& T);

  // Every assignment of one morphism per object into each apex, filtered by
  // the three cone conditions written out directly. Sorted.
  std::vector<crossconn::NormalCone>
  unpruned_cones(crossconn::NormalCategory const& C);

  // x u for x in e S, over the raw table, ignoring the category.
  bool translations_equal(FiniteSemigroup const& S,
                          element_t              e,
                          element_t              u,
                          element_t              v);

}  // namespace oracle

#endif  // CROSSCONN_TESTS_ORACLES_HPP_

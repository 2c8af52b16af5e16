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

#ifndef CROSSCONN_KERNELS_HPP_
#define CROSSCONN_KERNELS_HPP_

// The data-parallel inner loops of the library. Every kernel comes as an
// OpenMP version, used by the public API, and a serial reference with the
// same contract that the tests and benchmarks compare against. Results never
// depend on the thread count.

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <span>      // for span
#include <vector>    // for vector

#include "category.hpp"   // for NormalCategory
#include "cones.hpp"      // for ApexCones, ConeIndex, NormalCone
#include "semigroup.hpp"  // for FiniteSemigroup, element_t

namespace crossconn {

  //! Thread count used by the parallel kernels (0 = OpenMP default).
  void set_num_jobs(int jobs);
  int  num_jobs();

  namespace kernels {

    struct Triple {
      element_t a, b, c;
      bool      operator==(Triple const&) const = default;
    };

    //! First (a, b, c) in lexicographic order with (ab)c != a(bc). \p table
    //! is n * n, row major, with entries already known to be in range.
    std::optional<Triple>
    associativity_violation_serial(std::size_t                n,
                                   std::span<element_t const> table);
    std::optional<Triple>
    associativity_violation_parallel(std::size_t                n,
                                     std::span<element_t const> table);

    //! The sets e S f for every pair of \p objects, row major, ascending.
    std::vector<std::vector<element_t>>
    hom_sets_serial(FiniteSemigroup const&     S,
                    std::span<element_t const> objects);
    std::vector<std::vector<element_t>>
    hom_sets_parallel(FiniteSemigroup const&     S,
                      std::span<element_t const> objects);

    //! enumerate_cones_at for every object, in object order. If any apex
    //! throws, the exception from the first such apex is rethrown.
    std::vector<ApexCones> cones_by_apex_serial(NormalCategory const& C,
                                                EnumerationOptions    opts);
    std::vector<ApexCones> cones_by_apex_parallel(NormalCategory const& C,
                                                  EnumerationOptions    opts);

    inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

    //! The cone product table, row major, as positions in \p cones; npos
    //! where the product is not in the list.
    std::vector<std::size_t> cone_table_serial(NormalCategory const&       C,
                                               std::span<NormalCone const> cones,
                                               ConeIndex const&            index);
    std::vector<std::size_t>
    cone_table_parallel(NormalCategory const&       C,
                        std::span<NormalCone const> cones,
                        ConeIndex const&            index);

  }  // namespace kernels
}  // namespace crossconn

#endif  // CROSSCONN_KERNELS_HPP_

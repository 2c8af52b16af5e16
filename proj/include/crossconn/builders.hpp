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

#ifndef CROSSCONN_BUILDERS_HPP_
#define CROSSCONN_BUILDERS_HPP_

#include <cstddef>  // for size_t
#include <vector>   // for vector

#include "semigroup.hpp"  // for FiniteSemigroup, element_t

namespace crossconn {

  //! The chain 0 > 1 > ... > n - 1 as a meet-semilattice: ab = max(a, b).
  FiniteSemigroup chain(std::size_t n);

  //! The four element semilattice t > a, b > z with ab = z, labelled
  //! t, a, b, z in index order.
  FiniteSemigroup diamond();

  //! Z_n under addition mod n.
  FiniteSemigroup cyclic_group(std::size_t n);

  //! S_3 with elements the permutations of {0, 1, 2} in lexicographic order
  //! of their one-line notation (so 0 is the identity) and product
  //! (pq)(x) = p(q(x)).
  FiniteSemigroup symmetric_group3();

  //! The Brandt semigroup B_2: 0 is the zero and 1, 2, 3, 4 are the matrix
  //! units (1,1), (1,2), (2,1), (2,2); (i,j)(k,l) = (i,l) if j = k, else 0.
  FiniteSemigroup brandt_b2();

  //! A connecting homomorphism G_from -> G_to, from >= to in the
  //! semilattice.
  struct HomSpec {
    element_t              from;
    element_t              to;
    std::vector<element_t> map;
  };

  //! Blueprint for a strong semilattice of groups.
  //!
  //! Homomorphisms must be given for every pair from > to; the diagonal
  //! ones may be omitted and default to the identity.
  struct SLGSpec {
    FiniteSemigroup              semilattice;
    std::vector<FiniteSemigroup> groups;
    std::vector<HomSpec>         homs;
  };

  //! The strong semilattice of groups described by \p spec.
  //!
  //! The carrier is the disjoint union of the groups, vertex by vertex in
  //! semilattice index order. For a in G_alpha and b in G_beta the product
  //! is phi_{alpha,alpha beta}(a) phi_{beta,alpha beta}(b) in
  //! G_{alpha beta}.
  //!
  //! Validation errors carry a JSON-pointer path into the SLG JSON format:
  //! BadSemilattice, BadGroup, BadHom, MissingHom and IncoherentHoms.
  FiniteSemigroup strong_semilattice_of_groups(SLGSpec const& spec);

  //! Offsets of each vertex group in the carrier of
  //! strong_semilattice_of_groups(spec); a trailing entry holds the order.
  std::vector<std::size_t> slg_offsets(SLGSpec const& spec);

  //! The homomorphism G_from -> G_to sending everything to the identity.
  HomSpec trivial_hom(SLGSpec const& partial, element_t from, element_t to);

  //! The SLG over chain(2) with top group \p top, bottom group \p bottom
  //! and the connecting homomorphism \p map (trivial when empty).
  SLGSpec two_level_slg(FiniteSemigroup const& top,
                        FiniteSemigroup const& bottom,
                        std::vector<element_t> map = {});

}  // namespace crossconn

#endif  // CROSSCONN_BUILDERS_HPP_

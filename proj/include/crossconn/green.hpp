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

#ifndef CROSSCONN_GREEN_HPP_
#define CROSSCONN_GREEN_HPP_

#include <cstddef>  // for size_t
#include <vector>   // for vector

#include "semigroup.hpp"  // for FiniteSemigroup, ElementSet, element_t

namespace crossconn {

  //! Green's relations of a finite semigroup, computed from explicit
  //! principal ideals.
  //!
  //! Class ids are assigned in order of first appearance when scanning the
  //! elements in ascending order, so class 0 always contains element 0.
  struct GreenStructure {
    std::vector<std::size_t> lclass;
    std::vector<std::size_t> rclass;
    std::vector<std::size_t> hclass;
    std::vector<std::size_t> dclass;

    std::size_t num_lclasses = 0;
    std::size_t num_rclasses = 0;
    std::size_t num_hclasses = 0;
    std::size_t num_dclasses = 0;

    //! lorder[i][j] iff the principal left ideal of L-class i is contained
    //! in that of L-class j.
    std::vector<ElementSet> lorder;

    //! Sa and aS for every element a.
    std::vector<ElementSet> left_ideal;
    std::vector<ElementSet> right_ideal;

    //! S^1 a = Sa u {a}.
    ElementSet left_ideal1(element_t a) const;
    //! a S^1 = aS u {a}.
    ElementSet right_ideal1(element_t a) const;

    bool l_related(element_t a, element_t b) const {
      return lclass[a] == lclass[b];
    }
    bool r_related(element_t a, element_t b) const {
      return rclass[a] == rclass[b];
    }
    bool h_related(element_t a, element_t b) const {
      return hclass[a] == hclass[b];
    }
    bool d_related(element_t a, element_t b) const {
      return dclass[a] == dclass[b];
    }

    //! Sizes of the class containing each element.
    std::vector<std::size_t> class_sizes(std::vector<std::size_t> const& cls,
                                         std::size_t num) const;
  };

  GreenStructure green(FiniteSemigroup const& S);

}  // namespace crossconn

#endif  // CROSSCONN_GREEN_HPP_

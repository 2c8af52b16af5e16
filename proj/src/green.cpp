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

#include "crossconn/green.hpp"

#include <map>      // for map
#include <numeric>  // for iota
#include <utility>  // for pair

namespace crossconn {

  namespace {

    // Class ids by first appearance of each key, scanning a = 0, 1, ...
    template <typename Key>
    std::size_t number_classes(std::vector<Key> const&   keys,
                               std::vector<std::size_t>& out) {
      std::map<Key, std::size_t> ids;
      out.resize(keys.size());
      for (std::size_t a = 0; a < keys.size(); ++a) {
        auto [it, inserted] = ids.emplace(keys[a], ids.size());
        out[a]              = it->second;
      }
      return ids.size();
    }

    std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }

  }  // namespace

  ElementSet GreenStructure::left_ideal1(element_t a) const {
    ElementSet result = left_ideal[a];
    result.set(a);
    return result;
  }

  ElementSet GreenStructure::right_ideal1(element_t a) const {
    ElementSet result = right_ideal[a];
    result.set(a);
    return result;
  }

  std::vector<std::size_t>
  GreenStructure::class_sizes(std::vector<std::size_t> const& cls,
                              std::size_t                     num) const {
    std::vector<std::size_t> count(num, 0);
    for (auto c : cls) {
      ++count[c];
    }
    std::vector<std::size_t> result(cls.size());
    for (std::size_t a = 0; a < cls.size(); ++a) {
      result[a] = count[cls[a]];
    }
    return result;
  }

  GreenStructure green(FiniteSemigroup const& S) {
    std::size_t const n = S.size();
    GreenStructure    G;
    G.left_ideal.reserve(n);
    G.right_ideal.reserve(n);
    for (element_t a = 0; a < n; ++a) {
      G.left_ideal.push_back(principal_left_ideal(S, a));
      G.right_ideal.push_back(principal_right_ideal(S, a));
    }

    std::vector<ElementSet> left1, right1;
    for (element_t a = 0; a < n; ++a) {
      left1.push_back(G.left_ideal1(a));
      right1.push_back(G.right_ideal1(a));
    }
    G.num_lclasses = number_classes(left1, G.lclass);
    G.num_rclasses = number_classes(right1, G.rclass);

    std::vector<std::pair<std::size_t, std::size_t>> lr(n);
    for (element_t a = 0; a < n; ++a) {
      lr[a] = {G.lclass[a], G.rclass[a]};
    }
    G.num_hclasses = number_classes(lr, G.hclass);

    // D is the join of L and R; union the L-class and R-class of every
    // element.
    std::vector<std::size_t> parent(G.num_lclasses);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::size_t> first_l_of_r(G.num_rclasses, n);
    for (element_t a = 0; a < n; ++a) {
      auto& first = first_l_of_r[G.rclass[a]];
      if (first == n) {
        first = G.lclass[a];
      } else {
        parent[find_root(parent, G.lclass[a])] = find_root(parent, first);
      }
    }
    std::vector<std::size_t> droot(n);
    for (element_t a = 0; a < n; ++a) {
      droot[a] = find_root(parent, G.lclass[a]);
    }
    G.num_dclasses = number_classes(droot, G.dclass);

    std::vector<ElementSet> lideal_of_class(G.num_lclasses);
    for (element_t a = 0; a < n; ++a) {
      lideal_of_class[G.lclass[a]] = left1[a];
    }
    G.lorder.assign(G.num_lclasses, ElementSet(G.num_lclasses));
    for (std::size_t i = 0; i < G.num_lclasses; ++i) {
      for (std::size_t j = 0; j < G.num_lclasses; ++j) {
        if (lideal_of_class[i].is_subset_of(lideal_of_class[j])) {
          G.lorder[i].set(j);
        }
      }
    }
    return G;
  }

}  // namespace crossconn

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

#ifndef CROSSCONN_CONES_HPP_
#define CROSSCONN_CONES_HPP_

#include <compare>   // for strong_ordering
#include <cstddef>   // for size_t
#include <map>       // for map
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include "category.hpp"   // for NormalCategory, Morphism
#include "semigroup.hpp"  // for element_t

namespace crossconn {

  //! A normal cone: an apex object together with one component per object
  //! of the category, components[i] lying in hom(objects()[i], apex).
  struct NormalCone {
    element_t             apex;
    std::vector<Morphism> components;

    auto operator<=>(NormalCone const&) const = default;
  };

  enum class ConeCondition {
    none,           // valid
    membership,     // some component is not in hom(Se, apex)
    compatibility,  // inclusion followed by a component disagrees
    isomorphism,    // no component is an isomorphism
  };

  struct ConeCheck {
    bool          valid = true;
    ConeCondition failed = ConeCondition::none;
    //! The offending objects: one for membership, the included pair for
    //! compatibility, none for isomorphism.
    std::vector<element_t> witness_objects;
    std::string            message;
  };

  //! Checks the three cone axioms in order and reports the first failure.
  //!
  //! \p candidate is indexed by object position. Throws MixedApex when the
  //! components do not share one destination, and NotInHom when the
  //! candidate does not have one component per object.
  ConeCheck validate_cone(NormalCategory const&     C,
                          std::span<Morphism const> candidate);

  inline ConeCheck validate_cone(NormalCategory const& C,
                                 NormalCone const&     cone) {
    return validate_cone(C, cone.components);
  }

  //! The principal cone of \p a: apex the object L-related to a and
  //! component (e, ea, apex) at each object Se.
  NormalCone principal_cone(NormalCategory const& C, element_t a);

  struct EnumerationOptions {
    //! Cap on visited assignments per apex; EnumerationBudgetExceeded when
    //! exceeded.
    std::size_t budget_per_apex = 10'000'000;
  };

  struct ApexCones {
    std::vector<NormalCone> cones;    // sorted
    std::size_t             visited;  // assignments visited
  };

  //! All normal cones with the given apex.
  //!
  //! Objects are visited largest ideal first (ties by index); a component is
  //! chosen freely only at objects with no larger object, every other
  //! component is forced by compatibility with the inclusions. Branches
  //! where no component can be an isomorphism any more are cut.
  ApexCones enumerate_cones_at(NormalCategory const& C,
                               element_t             apex,
                               EnumerationOptions    opts = {});

  struct ConeEnumeration {
    //! Grouped by apex in object order; sorted within each apex.
    std::vector<NormalCone>  cones;
    std::vector<std::size_t> visited_per_apex;
  };

  //! Every normal cone, apexes processed in parallel.
  ConeEnumeration enumerate_cones(NormalCategory const& C,
                                  EnumerationOptions    opts = {});

  //! The product (gamma delta)(Se) = gamma(Se) followed by the epimorphic
  //! part of delta at the apex of gamma.
  NormalCone cone_product(NormalCategory const& C,
                          NormalCone const&     gamma,
                          NormalCone const&     delta);

  //! Position lookup for a list of cones.
  class ConeIndex {
   public:
    ConeIndex() = default;
    explicit ConeIndex(std::span<NormalCone const> cones);

    std::optional<std::size_t> find(NormalCone const& cone) const;

   private:
    std::map<NormalCone, std::size_t> _index;
  };

}  // namespace crossconn

#endif  // CROSSCONN_CONES_HPP_

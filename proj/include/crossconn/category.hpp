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

#ifndef CROSSCONN_CATEGORY_HPP_
#define CROSSCONN_CATEGORY_HPP_

#include <compare>   // for strong_ordering
#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <span>      // for span
#include <utility>   // for pair
#include <vector>    // for vector

#include "green.hpp"      // for GreenStructure
#include "semigroup.hpp"  // for FiniteSemigroup, element_t

namespace crossconn {

  //! Whether a category models principal left ideals of its base, or
  //! principal right ideals (in which case the stored base is the opposite
  //! of the semigroup the user supplied).
  enum class Side { left, right };

  //! The partial right translation x -> xu from S src to S dst, stored as
  //! the canonical triple (src, u, dst) with src and dst canonical
  //! idempotents and u in src S dst.
  struct Morphism {
    element_t src;
    element_t u;
    element_t dst;

    auto operator<=>(Morphism const&) const = default;
  };

  //! The normal category L(S) of a regular semigroup S.
  //!
  //! Objects are the principal left ideals Se; each is represented by the
  //! least idempotent of its L-class. Morphisms compose diagrammatically:
  //! compose(m1, m2) applies m1 first.
  class NormalCategory {
   public:
    //! Throws NotRegular if \p base is not regular.
    NormalCategory(FiniteSemigroup base, Side side);

    //! The semigroup whose left ideals are the objects. For Side::right
    //! this is the opposite of the user's semigroup.
    FiniteSemigroup const& base() const noexcept {
      return _base;
    }

    Side side() const noexcept {
      return _side;
    }

    GreenStructure const& green() const noexcept {
      return _green;
    }

    //! Canonical idempotents in ascending order.
    std::vector<element_t> const& objects() const noexcept {
      return _objects;
    }

    std::size_t num_objects() const noexcept {
      return _objects.size();
    }

    //! Position of the canonical idempotent \p e in objects().
    std::size_t object_index(element_t e) const;

    //! The canonical idempotent L-related to \p a. Requires the L-class of
    //! \p a to contain an idempotent, which holds for every a since the
    //! base is regular.
    element_t object_of(element_t a) const;

    bool is_object(element_t e) const;

    //! |Se|.
    std::size_t ideal_size(element_t e) const;

    //! The set e S f, ascending, for canonical e and f.
    std::span<element_t const> hom(element_t e, element_t f) const;

    std::size_t num_morphisms() const;

    //! Every morphism, ordered by (src, dst, u).
    std::vector<Morphism> morphisms() const;

    //! Se contained in Sf, for canonical e, f.
    bool included(element_t e, element_t f) const;

    //! Whether \p m is a valid canonical morphism of this category.
    bool contains(Morphism const& m) const;

    //! (e0, e0 u, f0) with e0, f0 the canonical idempotents of e, f.
    //! Throws NotIdempotent or NotInHom.
    Morphism canonicalize(element_t e, element_t u, element_t f) const;

    Morphism identity(element_t e) const;

    //! Throws NotComposable unless m1.dst == m2.src.
    Morphism compose(Morphism const& m1, Morphism const& m2) const;

    //! The inclusion Se -> Sf. Throws NotIncluded.
    Morphism inclusion(element_t e, element_t f) const;

    //! xu for x in S src. Throws NotInDomain.
    element_t apply(Morphism const& m, element_t x) const;

    //! The two-sided inverse of \p m, searched in hom(dst, src).
    std::optional<Morphism> inverse(Morphism const& m) const;

    bool is_iso(Morphism const& m) const {
      return inverse(m).has_value();
    }

    //! The first isomorphism Se -> Sf in hom order, if any.
    std::optional<Morphism> isomorphism_between(element_t e,
                                                element_t f) const;

    bool objects_isomorphic(element_t e, element_t f) const {
      return isomorphism_between(e, f).has_value();
    }

    //! Factorises m = (e, u, f) as (e, u, h) followed by the inclusion
    //! Sh -> Sf, where h is the canonical idempotent of the L-class of u.
    std::pair<Morphism, Morphism> epimorphic_part(Morphism const& m) const;

   private:
    FiniteSemigroup                     _base;
    Side                                _side;
    GreenStructure                      _green;
    std::vector<element_t>              _objects;
    std::vector<std::size_t>            _object_pos;  // element -> position
    std::vector<element_t>              _lclass_rep;  // L-class -> object
    std::vector<std::vector<element_t>> _homs;        // k * k, row major
    std::vector<ElementSet>             _included;    // by object position
  };

  //! L(S). Throws NotRegular.
  NormalCategory build_L(FiniteSemigroup const& S);

  //! R(S), realised as L(opposite(S)) with Side::right.
  NormalCategory build_R(FiniteSemigroup const& S);

  //! Same side, same base and same objects and hom-sets.
  bool structurally_equal(NormalCategory const& C, NormalCategory const& D);

  struct Prop2Report {
    //! Objects are isomorphic iff identical, over all pairs.
    bool holds = true;
    //! First pair of distinct isomorphic objects, with an isomorphism.
    std::optional<std::pair<element_t, element_t>> witness;
    std::optional<Morphism>                        witness_iso;
    //! Pairs of identical objects that were found not isomorphic; always
    //! zero unless something is badly wrong.
    std::size_t identity_failures = 0;
  };

  //! Objects isomorphic iff identical, checked on every pair.
  Prop2Report verify_prop2(NormalCategory const& C);

  struct Prop3Report {
    //! Canonicalisation is injective on raw triples (e, u, f), e and f
    //! idempotent, u in eSf.
    bool        holds = true;
    std::size_t raw_triples = 0;
    std::size_t morphisms = 0;
    //! Two distinct raw triples with the same canonical morphism.
    std::optional<std::pair<Morphism, Morphism>> collision;
    //! Canonical equality agrees with the general equality rule
    //! e L g, f L h and v = gu on every pair of raw triples.
    bool general_rule_agrees = true;
  };

  Prop3Report verify_prop3(NormalCategory const& C);

}  // namespace crossconn

#endif  // CROSSCONN_CATEGORY_HPP_

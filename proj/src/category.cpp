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

#include "crossconn/category.hpp"

#include <algorithm>  // for sort, unique
#include <map>        // for map

#include <fmt/format.h>  // for fmt::format

#include "crossconn/error.hpp"    // for Error
#include "crossconn/kernels.hpp"  // for hom_sets_parallel

namespace crossconn {

  namespace {
    constexpr std::size_t NONE = static_cast<std::size_t>(-1);

    std::string str(Morphism const& m) {
      return fmt::format("({}, {}, {})", m.src, m.u, m.dst);
    }
  }  // namespace

  NormalCategory::NormalCategory(FiniteSemigroup base, Side side)
      : _base(std::move(base)), _side(side) {
    if (auto a = first_non_regular(_base)) {
      throw Error(ErrorCode::NotRegular,
                  fmt::format("element {} has no x with {}x{} = {}",
                              *a,
                              *a,
                              *a,
                              *a));
    }
    _green = crossconn::green(_base);
    _lclass_rep.assign(_green.num_lclasses, NONE);
    for (element_t e : idempotents(_base)) {
      auto& rep = _lclass_rep[_green.lclass[e]];
      if (rep == NONE) {
        rep = e;
        _objects.push_back(e);
      }
    }
    std::sort(_objects.begin(), _objects.end());
    _object_pos.assign(_base.size(), NONE);
    for (std::size_t i = 0; i < _objects.size(); ++i) {
      _object_pos[_objects[i]] = i;
    }
    _homs = kernels::hom_sets_parallel(_base, _objects);
    std::size_t const k = _objects.size();
    _included.assign(k, ElementSet(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (_base.product(_objects[i], _objects[j]) == _objects[i]) {
          _included[i].set(j);
        }
      }
    }
  }

  std::size_t NormalCategory::object_index(element_t e) const {
    if (!is_object(e)) {
      throw Error(ErrorCode::NotIdempotent,
                  fmt::format("{} is not a canonical idempotent", e));
    }
    return _object_pos[e];
  }

  bool NormalCategory::is_object(element_t e) const {
    return e < _object_pos.size() && _object_pos[e] != NONE;
  }

  element_t NormalCategory::object_of(element_t a) const {
    if (a >= _base.size()) {
      throw Error(ErrorCode::NotInDomain,
                  fmt::format("{} is not an element", a));
    }
    element_t const rep = _lclass_rep[_green.lclass[a]];
    if (rep == NONE) {
      throw Error(ErrorCode::NotRegular,
                  fmt::format("the L-class of {} has no idempotent", a));
    }
    return rep;
  }

  std::size_t NormalCategory::ideal_size(element_t e) const {
    return _green.left_ideal[e].count();
  }

  std::span<element_t const> NormalCategory::hom(element_t e,
                                                 element_t f) const {
    return _homs[object_index(e) * _objects.size() + object_index(f)];
  }

  std::size_t NormalCategory::num_morphisms() const {
    std::size_t total = 0;
    for (auto const& h : _homs) {
      total += h.size();
    }
    return total;
  }

  std::vector<Morphism> NormalCategory::morphisms() const {
    std::vector<Morphism> result;
    for (element_t e : _objects) {
      for (element_t f : _objects) {
        for (element_t u : hom(e, f)) {
          result.push_back({e, u, f});
        }
      }
    }
    return result;
  }

  bool NormalCategory::included(element_t e, element_t f) const {
    return _included[object_index(e)][object_index(f)];
  }

  bool NormalCategory::contains(Morphism const& m) const {
    return is_object(m.src) && is_object(m.dst) && m.u < _base.size()
           && _base.product(_base.product(m.src, m.u), m.dst) == m.u;
  }

  Morphism NormalCategory::canonicalize(element_t e,
                                        element_t u,
                                        element_t f) const {
    std::size_t const n = _base.size();
    for (element_t x : {e, f}) {
      if (x >= n || !is_idempotent(_base, x)) {
        throw Error(ErrorCode::NotIdempotent,
                    fmt::format("{} is not an idempotent", x));
      }
    }
    if (u >= n || _base.product(_base.product(e, u), f) != u) {
      throw Error(ErrorCode::NotInHom,
                  fmt::format("{} is not in {}S{}", u, e, f));
    }
    element_t const e0 = object_of(e);
    return {e0, _base.product(e0, u), object_of(f)};
  }

  Morphism NormalCategory::identity(element_t e) const {
    object_index(e);
    return {e, e, e};
  }

  Morphism NormalCategory::compose(Morphism const& m1,
                                   Morphism const& m2) const {
    if (m1.dst != m2.src) {
      throw Error(ErrorCode::NotComposable,
                  fmt::format("{} then {}", str(m1), str(m2)));
    }
    return {m1.src, _base.product(m1.u, m2.u), m2.dst};
  }

  Morphism NormalCategory::inclusion(element_t e, element_t f) const {
    if (!included(e, f)) {
      throw Error(ErrorCode::NotIncluded,
                  fmt::format("S{} is not contained in S{}", e, f));
    }
    return {e, e, f};
  }

  element_t NormalCategory::apply(Morphism const& m, element_t x) const {
    // x in S e iff xe = x, for e idempotent
    if (x >= _base.size() || _base.product(x, m.src) != x) {
      throw Error(ErrorCode::NotInDomain,
                  fmt::format("{} is not in S{}", x, m.src));
    }
    return _base.product(x, m.u);
  }

  std::optional<Morphism> NormalCategory::inverse(Morphism const& m) const {
    auto const id_src = identity(m.src), id_dst = identity(m.dst);
    for (element_t v : hom(m.dst, m.src)) {
      Morphism const back{m.dst, v, m.src};
      if (compose(m, back) == id_src && compose(back, m) == id_dst) {
        return back;
      }
    }
    return std::nullopt;
  }

  std::optional<Morphism>
  NormalCategory::isomorphism_between(element_t e, element_t f) const {
    for (element_t u : hom(e, f)) {
      Morphism const m{e, u, f};
      if (is_iso(m)) {
        return m;
      }
    }
    return std::nullopt;
  }

  std::pair<Morphism, Morphism>
  NormalCategory::epimorphic_part(Morphism const& m) const {
    element_t const h = object_of(m.u);
    return {Morphism{m.src, m.u, h}, inclusion(h, m.dst)};
  }

  NormalCategory build_L(FiniteSemigroup const& S) {
    return NormalCategory(S, Side::left);
  }

  NormalCategory build_R(FiniteSemigroup const& S) {
    return NormalCategory(opposite(S), Side::right);
  }

  bool structurally_equal(NormalCategory const& C, NormalCategory const& D) {
    if (C.side() != D.side() || !(C.base() == D.base())
        || C.objects() != D.objects()) {
      return false;
    }
    for (element_t e : C.objects()) {
      for (element_t f : C.objects()) {
        auto const h1 = C.hom(e, f), h2 = D.hom(e, f);
        if (!std::equal(h1.begin(), h1.end(), h2.begin(), h2.end())
            || C.included(e, f) != D.included(e, f)) {
          return false;
        }
      }
    }
    return true;
  }

  Prop2Report verify_prop2(NormalCategory const& C) {
    Prop2Report r;
    for (element_t e : C.objects()) {
      for (element_t f : C.objects()) {
        auto const iso = C.isomorphism_between(e, f);
        if (e == f && !iso) {
          ++r.identity_failures;
          r.holds = false;
        } else if (e != f && iso) {
          r.holds = false;
          if (!r.witness) {
            r.witness     = std::make_pair(e, f);
            r.witness_iso = *iso;
          }
        }
      }
    }
    return r;
  }

  Prop3Report verify_prop3(NormalCategory const& C) {
    Prop3Report r;
    auto const& S = C.base();
    auto const& G = C.green();

    struct Raw {
      element_t e, u, f;
    };
    std::vector<Raw>      raw;
    std::vector<Morphism> canon;
    auto const            E = idempotents(S);
    for (element_t e : E) {
      for (element_t f : E) {
        for (element_t u = 0; u < S.size(); ++u) {
          if (S.product(S.product(e, u), f) == u) {
            raw.push_back({e, u, f});
            canon.push_back(C.canonicalize(e, u, f));
          }
        }
      }
    }
    r.raw_triples = raw.size();

    std::map<Morphism, std::size_t> first;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      auto [it, inserted] = first.emplace(canon[i], i);
      if (!inserted && !r.collision) {
        auto const& a = raw[it->second];
        r.collision   = std::make_pair(Morphism{a.e, a.u, a.f},
                                     Morphism{raw[i].e, raw[i].u, raw[i].f});
      }
    }
    r.morphisms = first.size();
    r.holds     = !r.collision.has_value();

    // rho(e,u,f) = rho(g,v,h) iff e L g, f L h and v = gu
    for (std::size_t i = 0; i < raw.size() && r.general_rule_agrees; ++i) {
      for (std::size_t j = 0; j < raw.size(); ++j) {
        auto const& p    = raw[i];
        auto const& q    = raw[j];
        bool const  rule = G.l_related(p.e, q.e) && G.l_related(p.f, q.f)
                          && q.u == S.product(q.e, p.u);
        if (rule != (canon[i] == canon[j])) {
          r.general_rule_agrees = false;
          break;
        }
      }
    }
    r.holds = r.holds && r.general_rule_agrees;
    return r;
  }

}  // namespace crossconn

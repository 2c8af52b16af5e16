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

#include "crossconn/duals.hpp"

#include <algorithm>  // for next_permutation, find
#include <numeric>    // for iota

#include <fmt/format.h>  // for fmt::format

#include "crossconn/error.hpp"  // for Error

namespace crossconn {

  namespace {

    constexpr std::size_t NONE = static_cast<std::size_t>(-1);

    std::string str(Morphism const& m) {
      return fmt::format("({}, {}, {})", m.src, m.u, m.dst);
    }

    // The category on one side of S together with its cone semigroup and
    // the concrete normal dual R(T) of that semigroup.
    struct DualSide {
      NormalCategory category;
      TLSemigroup    tl;
      NormalCategory dual;
    };

    DualSide dual_side(FiniteSemigroup const& S,
                       Side                   side,
                       EnumerationOptions     opts) {
      auto category = side == Side::left ? build_L(S) : build_R(S);
      auto tl       = build_TL(category, opts);
      auto dual     = build_R(tl.table);
      return {std::move(category), std::move(tl), std::move(dual)};
    }

    // Transports along \p candidate when it is a semigroup isomorphism of
    // the bases, and along a searched one otherwise.
    DualIsoReport transport(NormalCategory const&     from,
                            NormalCategory const&     to,
                            std::optional<ElementMap> candidate,
                            SearchOptions             search) {
      DualIsoReport r;
      if (candidate
          && !verify_isomorphism(from.base(), to.base(), *candidate)) {
        candidate.reset();
      }
      if (!candidate) {
        candidate = find_isomorphism(from.base(), to.base(), search);
      }
      if (!candidate) {
        r.failure = fmt::format("no isomorphism between the base semigroups "
                                "(orders {} and {})",
                                from.base().size(),
                                to.base().size());
        return r;
      }
      r.semigroup_iso = candidate;
      try {
        r.witness = induced_category_iso(*candidate, from, to);
        r.holds   = r.witness->verified;
      } catch (Error const& e) {
        r.failure = e.what();
      }
      return r;
    }

  }  // namespace

  IsoCheck verify_category_iso(CategoryIso const&    iso,
                               NormalCategory const& from,
                               NormalCategory const& to) {
    auto fail = [](std::string msg) { return IsoCheck{false, std::move(msg)}; };

    auto const&       objs_from = from.objects();
    auto const&       objs_to   = to.objects();
    std::size_t const k         = objs_from.size();
    if (iso.object_map.size() != k || objs_to.size() != k) {
      return fail(fmt::format("object counts differ ({} and {})",
                              k,
                              objs_to.size()));
    }
    std::vector<bool> hit(k, false);
    for (auto j : iso.object_map) {
      if (j >= k || hit[j]) {
        return fail("object map is not a bijection");
      }
      hit[j] = true;
    }
    auto F = [&](element_t e) { return objs_to[iso.object_map[from.object_index(e)]]; };

    for (element_t e : objs_from) {
      for (element_t f : objs_from) {
        if (from.included(e, f) != to.included(F(e), F(f))) {
          return fail(fmt::format("inclusion S{} in S{} not preserved", e, f));
        }
        if (from.hom(e, f).size() != to.hom(F(e), F(f)).size()) {
          return fail(fmt::format("hom(S{}, S{}) has the wrong size image", e, f));
        }
      }
    }

    auto const all = from.morphisms();
    if (iso.morphism_map.size() != all.size()) {
      return fail("morphism map is not total");
    }
    std::map<Morphism, Morphism> seen;
    for (auto const& m : all) {
      auto it = iso.morphism_map.find(m);
      if (it == iso.morphism_map.end()) {
        return fail(fmt::format("morphism {} has no image", str(m)));
      }
      auto const& image = it->second;
      if (!to.contains(image) || image.src != F(m.src) || image.dst != F(m.dst)) {
        return fail(fmt::format("image of {} is not in the right hom-set", str(m)));
      }
      auto [prev, inserted] = seen.emplace(image, m);
      if (!inserted) {
        return fail(fmt::format("{} and {} have the same image",
                                str(prev->second),
                                str(m)));
      }
    }

    auto map = [&](Morphism const& m) { return iso.morphism_map.at(m); };
    for (element_t e : objs_from) {
      if (map(from.identity(e)) != to.identity(F(e))) {
        return fail(fmt::format("identity at S{} not preserved", e));
      }
      for (element_t f : objs_from) {
        if (e != f && from.included(e, f)
            && map(from.inclusion(e, f)) != to.inclusion(F(e), F(f))) {
          return fail(fmt::format("inclusion S{} -> S{} not preserved", e, f));
        }
      }
    }
    for (element_t e : objs_from) {
      for (element_t f : objs_from) {
        for (element_t g : objs_from) {
          for (element_t u : from.hom(e, f)) {
            Morphism const m1{e, u, f};
            for (element_t v : from.hom(f, g)) {
              Morphism const m2{f, v, g};
              if (map(from.compose(m1, m2)) != to.compose(map(m1), map(m2))) {
                return fail(fmt::format("composite of {} and {} not preserved",
                                        str(m1),
                                        str(m2)));
              }
            }
          }
        }
      }
    }
    return {};
  }

  CategoryIso induced_category_iso(std::span<element_t const> phi,
                                   NormalCategory const&      from,
                                   NormalCategory const&      to) {
    if (!verify_isomorphism(from.base(), to.base(), phi)) {
      throw Error(ErrorCode::NotAnIsomorphism,
                  "the element map is not an isomorphism of the base "
                  "semigroups");
    }
    CategoryIso iso;
    for (element_t e : from.objects()) {
      iso.object_map.push_back(to.object_index(to.object_of(phi[e])));
    }
    for (auto const& m : from.morphisms()) {
      iso.morphism_map.emplace(
          m, to.canonicalize(phi[m.src], phi[m.u], phi[m.dst]));
    }
    auto const check = verify_category_iso(iso, from, to);
    if (!check.ok) {
      throw Error(ErrorCode::FunctorialityFailed, check.failure);
    }
    iso.verified = true;
    return iso;
  }

  namespace {

    // Backtracking search for a bijection on morphisms, for one fixed
    // object bijection, closed under composition at every step.
    class FunctorSearch {
     public:
      FunctorSearch(NormalCategory const&           from,
                    NormalCategory const&           to,
                    std::vector<std::size_t> const& object_map,
                    std::size_t&                    nodes,
                    std::size_t                     budget)
          : _from(from),
            _to(to),
            _nodes(nodes),
            _budget(budget),
            _ms_from(from.morphisms()),
            _ms_to(to.morphisms()) {
        auto const& of = from.objects();
        auto const& ot = to.objects();
        for (std::size_t i = 0; i < of.size(); ++i) {
          _F[of[i]] = ot[object_map[i]];
        }
        for (std::size_t i = 0; i < _ms_to.size(); ++i) {
          _to_index[_ms_to[i]] = i;
        }
        for (std::size_t i = 0; i < _ms_from.size(); ++i) {
          _from_index[_ms_from[i]] = i;
        }
        _image.assign(_ms_from.size(), NONE);
        _used.assign(_ms_to.size(), false);
      }

      std::optional<std::vector<std::size_t>> run() {
        // identities and inclusions are forced
        for (element_t e : _from.objects()) {
          for (element_t f : _from.objects()) {
            if (_from.included(e, f)
                && !assign(_from_index.at(_from.inclusion(e, f)),
                           _to_index.at(_to.inclusion(_F.at(e), _F.at(f))))) {
              return std::nullopt;
            }
          }
        }
        if (!propagate() || !search()) {
          return std::nullopt;
        }
        return _image;
      }

     private:
      bool search() {
        auto next = std::find(_image.begin(), _image.end(), NONE);
        if (next == _image.end()) {
          return true;
        }
        std::size_t const a = next - _image.begin();
        auto const&       m = _ms_from[a];
        element_t const   fe = _F.at(m.src), ff = _F.at(m.dst);
        for (element_t v : _to.hom(fe, ff)) {
          std::size_t const x = _to_index.at(Morphism{fe, v, ff});
          if (_used[x]) {
            continue;
          }
          if (++_nodes > _budget) {
            throw Error(ErrorCode::SearchBudgetExceeded,
                        fmt::format("functor search exceeded {} nodes",
                                    _budget));
          }
          std::size_t const mark = _trail.size();
          if (assign(a, x) && propagate() && search()) {
            return true;
          }
          undo(mark);
        }
        return false;
      }

      bool assign(std::size_t a, std::size_t x) {
        if (_image[a] != NONE) {
          return _image[a] == x;
        }
        auto const& m = _ms_from[a];
        auto const& n = _ms_to[x];
        if (_used[x] || n.src != _F.at(m.src) || n.dst != _F.at(m.dst)) {
          return false;
        }
        _image[a] = x;
        _used[x]  = true;
        _trail.push_back(a);
        _queue.push_back(a);
        return true;
      }

      bool propagate() {
        while (!_queue.empty()) {
          std::size_t const a = _queue.back();
          _queue.pop_back();
          for (std::size_t i = 0; i < _trail.size(); ++i) {
            std::size_t const b = _trail[i];
            for (auto [p, q] : {std::pair{a, b}, std::pair{b, a}}) {
              auto const& mp = _ms_from[p];
              auto const& mq = _ms_from[q];
              if (mp.dst != mq.src) {
                continue;
              }
              auto const composite = _to.compose(_ms_to[_image[p]],
                                                 _ms_to[_image[q]]);
              if (!assign(_from_index.at(_from.compose(mp, mq)),
                          _to_index.at(composite))) {
                _queue.clear();
                return false;
              }
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          std::size_t const a = _trail.back();
          _trail.pop_back();
          _used[_image[a]] = false;
          _image[a]        = NONE;
        }
      }

      NormalCategory const&           _from;
      NormalCategory const&           _to;
      std::size_t&                    _nodes;
      std::size_t                     _budget;
      std::vector<Morphism>           _ms_from;
      std::vector<Morphism>           _ms_to;
      std::map<element_t, element_t>  _F;
      std::map<Morphism, std::size_t> _from_index;
      std::map<Morphism, std::size_t> _to_index;
      std::vector<std::size_t>        _image;
      std::vector<bool>               _used;
      std::vector<std::size_t>        _trail;
      std::vector<std::size_t>        _queue;
    };

  }  // namespace

  std::optional<CategoryIso>
  find_category_iso_exhaustive(NormalCategory const& from,
                               NormalCategory const& to,
                               SearchOptions         opts) {
    std::size_t const k = from.num_objects();
    if (to.num_objects() != k || from.num_morphisms() != to.num_morphisms()) {
      return std::nullopt;
    }
    auto const& of = from.objects();
    auto const& ot = to.objects();

    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t nodes = 0;
    do {
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        for (std::size_t j = 0; j < k && ok; ++j) {
          ok = from.included(of[i], of[j]) == to.included(ot[perm[i]], ot[perm[j]])
               && from.hom(of[i], of[j]).size()
                      == to.hom(ot[perm[i]], ot[perm[j]]).size();
        }
      }
      if (!ok) {
        continue;
      }
      FunctorSearch search(from, to, perm, nodes, opts.node_budget);
      if (auto image = search.run()) {
        auto const  ms_from = from.morphisms();
        auto const  ms_to   = to.morphisms();
        CategoryIso iso;
        iso.object_map = perm;
        for (std::size_t a = 0; a < ms_from.size(); ++a) {
          iso.morphism_map.emplace(ms_from[a], ms_to[(*image)[a]]);
        }
        iso.verified = verify_category_iso(iso, from, to).ok;
        return iso;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
  }

  NormalCategory normal_dual_L(FiniteSemigroup const& S,
                               EnumerationOptions     opts) {
    return build_R(build_TL(build_L(S), opts).table);
  }

  NormalCategory normal_dual_R(FiniteSemigroup const& S,
                               EnumerationOptions     opts) {
    return build_R(build_TL(build_R(S), opts).table);
  }

  Theorem7Report verify_theorem7(FiniteSemigroup const& S, VerifyOptions opts) {
    auto const left = dual_side(S, Side::left, opts.enumeration);
    auto const R    = build_R(S);

    Theorem7Report r;
    r.tl_order = left.tl.cones.size();
    // rho-bar: S -> TL(S) is also an isomorphism opposite(S) -> opposite(TL)
    std::optional<ElementMap> phi;
    if (auto rb = rho_bar(left.tl)) {
      phi = inverse_map(*rb);
    }
    r.dual_iso = transport(left.dual, R, phi, opts.search);
    r.holds    = r.dual_iso.holds;
    return r;
  }

  Theorem8Report verify_theorem8(FiniteSemigroup const& S, VerifyOptions opts) {
    auto const right = dual_side(S, Side::right, opts.enumeration);
    auto const L     = build_L(S);

    Theorem8Report r;
    r.tr_order        = right.tl.cones.size();
    r.anti_iso        = find_isomorphism(right.tl.table, opposite(S), opts.search);
    r.anti_isomorphic = r.anti_iso.has_value();

    // rho-bar on R(S) = L(opposite(S)) maps opposite(S) onto TR(S), i.e. S
    // onto opposite(TR(S)), the base of the dual
    std::optional<ElementMap> phi;
    if (auto rb = rho_bar(right.tl)) {
      phi = inverse_map(*rb);
    }
    r.dual_iso = transport(right.dual, L, phi, opts.search);
    r.holds    = r.anti_isomorphic && r.dual_iso.holds;
    return r;
  }

  DegenerationReport verify_degeneration(FiniteSemigroup const& S,
                                         VerifyOptions          opts) {
    auto const left  = dual_side(S, Side::left, opts.enumeration);
    auto const right = dual_side(S, Side::right, opts.enumeration);

    DegenerationReport r;
    r.gamma = transport(right.category, left.dual, rho_bar(left.tl), opts.search);
    r.delta = transport(left.category, right.dual, rho_bar(right.tl), opts.search);
    r.holds = r.gamma.holds && r.delta.holds;
    return r;
  }

  SemilatticeReport verify_semilattice_theorems(FiniteSemigroup const& S,
                                                VerifyOptions          opts) {
    if (!is_semilattice(S)) {
      throw Error(ErrorCode::NotASemilattice,
                  is_commutative(S) ? "not every element is idempotent"
                                    : "not commutative");
    }
    SemilatticeReport r;
    auto const        tl = build_TL(build_L(S), opts.enumeration);
    r.theorem6           = verify_theorem6(S, tl);
    r.theorem7           = verify_theorem7(S, opts);
    r.theorem8           = verify_theorem8(S, opts);
    r.tl_commutative     = is_commutative(tl.table);
    r.tl_idempotent      = is_band(tl.table);
    r.same_order         = tl.table.size() == S.size();
    r.holds = r.theorem6.isomorphism && r.theorem7.holds && r.theorem8.holds
              && r.tl_commutative && r.tl_idempotent && r.same_order;
    return r;
  }

}  // namespace crossconn

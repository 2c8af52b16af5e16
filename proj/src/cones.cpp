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

#include "crossconn/cones.hpp"

#include <algorithm>  // for sort, stable_sort

#include <fmt/format.h>  // for fmt::format

#include "crossconn/error.hpp"    // for Error
#include "crossconn/kernels.hpp"  // for cones_by_apex_parallel

namespace crossconn {

  ConeCheck validate_cone(NormalCategory const&     C,
                          std::span<Morphism const> candidate) {
    auto const& objects = C.objects();
    if (candidate.size() != objects.size()) {
      throw Error(ErrorCode::NotInHom,
                  fmt::format("{} components given for {} objects",
                              candidate.size(),
                              objects.size()));
    }
    element_t const apex = candidate.front().dst;
    for (auto const& m : candidate) {
      if (m.dst != apex) {
        throw Error(ErrorCode::MixedApex,
                    fmt::format("components end at both {} and {}",
                                apex,
                                m.dst));
      }
    }

    ConeCheck check;
    auto      fail = [&check](ConeCondition          c,
                         std::vector<element_t> witness,
                         std::string            message) {
      check.valid           = false;
      check.failed          = c;
      check.witness_objects = std::move(witness);
      check.message         = std::move(message);
      return check;
    };

    for (std::size_t i = 0; i < objects.size(); ++i) {
      if (candidate[i].src != objects[i] || !C.contains(candidate[i])) {
        return fail(ConeCondition::membership,
                    {objects[i]},
                    fmt::format("component at S{} is not in hom(S{}, S{})",
                                objects[i],
                                objects[i],
                                apex));
      }
    }
    for (std::size_t i = 0; i < objects.size(); ++i) {
      for (std::size_t j = 0; j < objects.size(); ++j) {
        if (i == j || !C.included(objects[i], objects[j])) {
          continue;
        }
        auto const via = C.compose(C.inclusion(objects[i], objects[j]),
                                   candidate[j]);
        if (via != candidate[i]) {
          return fail(ConeCondition::compatibility,
                      {objects[i], objects[j]},
                      fmt::format("inclusion S{} -> S{} followed by the "
                                  "component at S{} differs from the "
                                  "component at S{}",
                                  objects[i],
                                  objects[j],
                                  objects[j],
                                  objects[i]));
        }
      }
    }
    for (auto const& m : candidate) {
      if (C.is_iso(m)) {
        return check;
      }
    }
    return fail(
        ConeCondition::isomorphism, {}, "no component is an isomorphism");
  }

  NormalCone principal_cone(NormalCategory const& C, element_t a) {
    auto const&     S    = C.base();
    element_t const apex = C.object_of(a);
    NormalCone      cone{apex, {}};
    cone.components.reserve(C.num_objects());
    for (element_t e : C.objects()) {
      cone.components.push_back(C.canonicalize(e, S.product(e, a), apex));
    }
    return cone;
  }

  namespace {

    class ApexSearch {
     public:
      ApexSearch(NormalCategory const& C, element_t apex, std::size_t budget)
          : _C(C),
            _S(C.base()),
            _apex(apex),
            _budget(budget),
            _u(C.num_objects()) {
        auto const&       objects = C.objects();
        std::size_t const k       = objects.size();

        for (std::size_t i = 0; i < k; ++i) {
          _order.push_back(i);
        }
        std::stable_sort(
            _order.begin(), _order.end(), [&](std::size_t i, std::size_t j) {
              return C.ideal_size(objects[i]) > C.ideal_size(objects[j]);
            });

        _larger.resize(k);
        _iso.assign(k, ElementSet(_S.size()));
        std::vector<bool> can_iso(k, false);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            if (i != j && C.included(objects[i], objects[j])) {
              _larger[i].push_back(j);
            }
          }
          for (element_t u : C.hom(objects[i], apex)) {
            if (C.is_iso({objects[i], u, apex})) {
              _iso[i].set(u);
              can_iso[i] = true;
            }
          }
        }
        _suffix_can_iso.assign(k + 1, false);
        for (std::size_t t = k; t-- > 0;) {
          _suffix_can_iso[t] = _suffix_can_iso[t + 1] || can_iso[_order[t]];
        }
      }

      ApexCones run() {
        search(0, false);
        std::sort(_found.begin(), _found.end());
        return {std::move(_found), _visited};
      }

     private:
      void visit() {
        if (++_visited > _budget) {
          throw Error(ErrorCode::EnumerationBudgetExceeded,
                      fmt::format("more than {} assignments visited for apex "
                                  "S{}",
                                  _budget,
                                  _apex));
        }
      }

      void search(std::size_t t, bool have_iso) {
        if (!have_iso && !_suffix_can_iso[t]) {
          return;
        }
        auto const& objects = _C.objects();
        if (t == _order.size()) {
          NormalCone cone{_apex, {}};
          for (std::size_t i = 0; i < objects.size(); ++i) {
            cone.components.push_back({objects[i], _u[i], _apex});
          }
          _found.push_back(std::move(cone));
          return;
        }
        std::size_t const i = _order[t];
        element_t const   e = objects[i];
        if (!_larger[i].empty()) {
          // forced: (e, e, g) followed by (g, u_g, apex) is (e, e u_g, apex)
          visit();
          element_t const u = _S.product(e, _u[_larger[i].front()]);
          for (std::size_t j : _larger[i]) {
            if (_S.product(e, _u[j]) != u) {
              return;
            }
          }
          _u[i] = u;
          search(t + 1, have_iso || _iso[i][u]);
          return;
        }
        for (element_t u : _C.hom(e, _apex)) {
          visit();
          _u[i] = u;
          search(t + 1, have_iso || _iso[i][u]);
        }
      }

      NormalCategory const&                 _C;
      FiniteSemigroup const&                _S;
      element_t                             _apex;
      std::size_t                           _budget;
      std::size_t                           _visited = 0;
      std::vector<std::size_t>              _order;
      std::vector<std::vector<std::size_t>> _larger;
      std::vector<ElementSet>               _iso;
      std::vector<bool>                     _suffix_can_iso;
      std::vector<element_t>                _u;
      std::vector<NormalCone>               _found;
    };

  }  // namespace

  ApexCones enumerate_cones_at(NormalCategory const& C,
                               element_t             apex,
                               EnumerationOptions    opts) {
    C.object_index(apex);
    return ApexSearch(C, apex, opts.budget_per_apex).run();
  }

  ConeEnumeration enumerate_cones(NormalCategory const& C,
                                  EnumerationOptions    opts) {
    ConeEnumeration result;
    for (auto& apex : kernels::cones_by_apex_parallel(C, opts)) {
      result.visited_per_apex.push_back(apex.visited);
      for (auto& cone : apex.cones) {
        result.cones.push_back(std::move(cone));
      }
    }
    return result;
  }

  NormalCone cone_product(NormalCategory const& C,
                          NormalCone const&     gamma,
                          NormalCone const&     delta) {
    auto const& at_apex = delta.components[C.object_index(gamma.apex)];
    auto const  epi     = C.epimorphic_part(at_apex).first;
    NormalCone  result{epi.dst, {}};
    result.components.reserve(gamma.components.size());
    for (auto const& m : gamma.components) {
      result.components.push_back(C.compose(m, epi));
    }
    return result;
  }

  ConeIndex::ConeIndex(std::span<NormalCone const> cones) {
    for (std::size_t i = 0; i < cones.size(); ++i) {
      _index.emplace(cones[i], i);
    }
  }

  std::optional<std::size_t> ConeIndex::find(NormalCone const& cone) const {
    auto it = _index.find(cone);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

}  // namespace crossconn

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

#include "crossconn/isomorphism.hpp"

#include <algorithm>  // for sort
#include <tuple>      // for tuple

#include <fmt/format.h>  // for fmt::format

#include "crossconn/error.hpp"  // for Error
#include "crossconn/green.hpp"  // for green

namespace crossconn {

  namespace {

    constexpr element_t UNDEFINED = static_cast<element_t>(-1);

    using Signature = std::tuple<bool,         // idempotent
                                 std::size_t,  // index
                                 std::size_t,  // period
                                 std::size_t,  // |S^1 a|
                                 std::size_t,  // |a S^1|
                                 std::size_t,  // |L_a|
                                 std::size_t,  // |R_a|
                                 std::size_t,  // |H_a|
                                 std::size_t>;  // |D_a|

    std::vector<Signature> signatures(FiniteSemigroup const& S) {
      auto const G  = green(S);
      auto const ls = G.class_sizes(G.lclass, G.num_lclasses);
      auto const rs = G.class_sizes(G.rclass, G.num_rclasses);
      auto const hs = G.class_sizes(G.hclass, G.num_hclasses);
      auto const ds = G.class_sizes(G.dclass, G.num_dclasses);

      std::vector<Signature> result;
      result.reserve(S.size());
      for (element_t a = 0; a < S.size(); ++a) {
        auto const ip = index_period(S, a);
        result.emplace_back(is_idempotent(S, a),
                            ip.index,
                            ip.period,
                            G.left_ideal1(a).count(),
                            G.right_ideal1(a).count(),
                            ls[a],
                            rs[a],
                            hs[a],
                            ds[a]);
      }
      return result;
    }

    class IsoSearch {
     public:
      IsoSearch(FiniteSemigroup const& S,
                FiniteSemigroup const& T,
                SearchOptions          opts)
          : _S(S),
            _T(T),
            _budget(opts.node_budget),
            _phi(S.size(), UNDEFINED),
            _used(T.size(), false) {
        auto const sig_s = signatures(S);
        auto const sig_t = signatures(T);
        _candidates.resize(S.size());
        for (element_t a = 0; a < S.size(); ++a) {
          for (element_t x = 0; x < T.size(); ++x) {
            if (sig_s[a] == sig_t[x]) {
              _candidates[a].push_back(x);
            }
          }
        }
        auto ss = sig_s, st = sig_t;
        std::sort(ss.begin(), ss.end());
        std::sort(st.begin(), st.end());
        _feasible = ss == st;
      }

      std::optional<ElementMap> run() {
        if (!_feasible) {
          return std::nullopt;
        }
        if (search()) {
          return _phi;
        }
        return std::nullopt;
      }

     private:
      bool search() {
        auto next = std::find(_phi.begin(), _phi.end(), UNDEFINED);
        if (next == _phi.end()) {
          return true;
        }
        element_t const a = next - _phi.begin();
        for (element_t x : _candidates[a]) {
          if (_used[x]) {
            continue;
          }
          if (++_nodes > _budget) {
            throw Error(ErrorCode::SearchBudgetExceeded,
                        fmt::format("isomorphism search exceeded {} nodes",
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

      bool assign(element_t a, element_t x) {
        if (_phi[a] != UNDEFINED) {
          return _phi[a] == x;
        }
        if (_used[x]
            || !std::binary_search(
                _candidates[a].begin(), _candidates[a].end(), x)) {
          return false;
        }
        _phi[a]  = x;
        _used[x] = true;
        _trail.push_back(a);
        _queue.push_back(a);
        return true;
      }

      // Closes the current partial map under products.
      bool propagate() {
        while (!_queue.empty()) {
          element_t const a = _queue.back();
          _queue.pop_back();
          // _trail grows while we iterate, so index rather than iterate
          for (std::size_t i = 0; i < _trail.size(); ++i) {
            element_t const b = _trail[i];
            if (!assign(_S.product(a, b), _T.product(_phi[a], _phi[b]))
                || !assign(_S.product(b, a), _T.product(_phi[b], _phi[a]))) {
              _queue.clear();
              return false;
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          element_t const a = _trail.back();
          _trail.pop_back();
          _used[_phi[a]] = false;
          _phi[a]        = UNDEFINED;
        }
      }

      FiniteSemigroup const&              _S;
      FiniteSemigroup const&              _T;
      std::size_t                         _budget;
      std::size_t                         _nodes = 0;
      bool                                _feasible = false;
      ElementMap                          _phi;
      std::vector<bool>                   _used;
      std::vector<std::vector<element_t>> _candidates;
      std::vector<element_t>              _trail;
      std::vector<element_t>              _queue;
    };

  }  // namespace

  std::optional<ElementMap> find_isomorphism(FiniteSemigroup const& S,
                                             FiniteSemigroup const& T,
                                             SearchOptions          opts) {
    if (S.size() != T.size()) {
      return std::nullopt;
    }
    return IsoSearch(S, T, opts).run();
  }

  std::optional<ElementMap> find_anti_isomorphism(FiniteSemigroup const& S,
                                                  FiniteSemigroup const& T,
                                                  SearchOptions opts) {
    return find_isomorphism(S, opposite(T), opts);
  }

  bool verify_morphism(FiniteSemigroup const&     S,
                       FiniteSemigroup const&     T,
                       std::span<element_t const> map,
                       bool                       anti) {
    if (map.size() != S.size()) {
      return false;
    }
    for (element_t x : map) {
      if (x >= T.size()) {
        return false;
      }
    }
    for (element_t a = 0; a < S.size(); ++a) {
      for (element_t b = 0; b < S.size(); ++b) {
        element_t const image = anti ? T.product(map[b], map[a])
                                     : T.product(map[a], map[b]);
        if (map[S.product(a, b)] != image) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_bijection(std::span<element_t const> map, std::size_t codomain) {
    if (map.size() != codomain) {
      return false;
    }
    std::vector<bool> seen(codomain, false);
    for (element_t x : map) {
      if (x >= codomain || seen[x]) {
        return false;
      }
      seen[x] = true;
    }
    return true;
  }

  bool verify_isomorphism(FiniteSemigroup const&     S,
                          FiniteSemigroup const&     T,
                          std::span<element_t const> map,
                          bool                       anti) {
    return verify_morphism(S, T, map, anti) && is_bijection(map, T.size());
  }

  ElementMap inverse_map(std::span<element_t const> bijection) {
    ElementMap result(bijection.size());
    for (element_t a = 0; a < bijection.size(); ++a) {
      result[bijection[a]] = a;
    }
    return result;
  }

}  // namespace crossconn

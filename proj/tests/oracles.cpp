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

#include "oracles.hpp"

#include <algorithm>  // for next_permutation, sort
#include <numeric>    // for iota

namespace oracle {

  namespace {

    Relation compose(Relation const& X, Relation const& Y) {
      std::size_t const n = X.size();
      Relation          Z(n, std::vector<bool>(n, false));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n && !Z[a][b]; ++c) {
            Z[a][b] = X[a][c] && Y[c][b];
          }
        }
      }
      return Z;
    }

  }  // namespace

  Green green_by_divisibility(FiniteSemigroup const& S) {
    std::size_t const n = S.size();
    // left[a][b]: b in S^1 a
    Relation left(n, std::vector<bool>(n, false));
    Relation right(n, std::vector<bool>(n, false));
    for (element_t a = 0; a < n; ++a) {
      left[a][a] = right[a][a] = true;
      for (element_t x = 0; x < n; ++x) {
        left[a][S.product(x, a)]  = true;
        right[a][S.product(a, x)] = true;
      }
    }
    Green g;
    g.L = g.R = g.H = Relation(n, std::vector<bool>(n, false));
    for (element_t a = 0; a < n; ++a) {
      for (element_t b = 0; b < n; ++b) {
        g.L[a][b] = left[a][b] && left[b][a];
        g.R[a][b] = right[a][b] && right[b][a];
        g.H[a][b] = g.L[a][b] && g.R[a][b];
      }
    }
    g.D = compose(g.L, g.R);
    return g;
  }

  std::optional<crossconn::ElementMap>
  brute_force_isomorphism(FiniteSemigroup const& S, FiniteSemigroup const& T) {
    if (S.size() != T.size()) {
      return std::nullopt;
    }
    std::size_t const    n = S.size();
    std::vector<element_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      bool ok = true;
      for (element_t a = 0; a < n && ok; ++a) {
        for (element_t b = 0; b < n && ok; ++b) {
          ok = p[S.product(a, b)] == T.product(p[a], p[b]);
        }
      }
      if (ok) {
        return p;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return std::nullopt;
  }

  bool translations_equal(FiniteSemigroup const& S,
                          element_t              e,
                          element_t              u,
                          element_t              v) {
    for (element_t x = 0; x < S.size(); ++x) {
      element_t const y = S.product(x, e);  // runs over S e
      if (S.product(y, u) != S.product(y, v)) {
        return false;
      }
    }
    return true;
  }

  std::vector<crossconn::NormalCone>
  unpruned_cones(crossconn::NormalCategory const& C) {
    using crossconn::Morphism;
    auto const&       S       = C.base();
    auto const&       objects = C.objects();
    std::size_t const k       = objects.size();

    auto in_hom = [&](element_t e, element_t u, element_t f) {
      return S.product(S.product(e, u), f) == u;
    };
    auto contained = [&](element_t e, element_t f) {  // Se in Sf
      return S.product(e, f) == e;
    };
    // (e, u, f) invertible: some v in f S e with uv = e and vu = f
    auto invertible = [&](element_t e, element_t u, element_t f) {
      for (element_t v = 0; v < S.size(); ++v) {
        if (in_hom(f, v, e) && S.product(u, v) == e && S.product(v, u) == f) {
          return true;
        }
      }
      return false;
    };

    std::vector<crossconn::NormalCone> result;
    for (element_t apex : objects) {
      std::vector<element_t> u(k, 0);
      while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
          ok = in_hom(objects[i], u[i], apex);
        }
        for (std::size_t i = 0; i < k && ok; ++i) {
          for (std::size_t j = 0; j < k && ok; ++j) {
            if (contained(objects[i], objects[j])) {
              ok = S.product(objects[i], u[j]) == u[i];
            }
          }
        }
        bool iso = false;
        for (std::size_t i = 0; i < k && ok && !iso; ++i) {
          iso = invertible(objects[i], u[i], apex);
        }
        if (ok && iso) {
          crossconn::NormalCone cone{apex, {}};
          for (std::size_t i = 0; i < k; ++i) {
            cone.components.push_back(Morphism{objects[i], u[i], apex});
          }
          result.push_back(std::move(cone));
        }
        std::size_t i = 0;
        while (i < k && ++u[i] == S.size()) {
          u[i++] = 0;
        }
        if (i == k) {
          break;
        }
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

}  // namespace oracle

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

#include "crossconn/builders.hpp"

#include <algorithm>  // for max, next_permutation
#include <array>      // for array
#include <map>        // for map
#include <utility>    // for pair

#include <fmt/format.h>  // for fmt::format

#include "crossconn/error.hpp"  // for Error

namespace crossconn {

  FiniteSemigroup chain(std::size_t n) {
    Table t(n, std::vector<element_t>(n));
    for (element_t a = 0; a < n; ++a) {
      for (element_t b = 0; b < n; ++b) {
        t[a][b] = std::max(a, b);
      }
    }
    return FiniteSemigroup::from_table(t);
  }

  FiniteSemigroup diamond() {
    return FiniteSemigroup::from_table(
        {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}},
        {"t", "a", "b", "z"});
  }

  FiniteSemigroup cyclic_group(std::size_t n) {
    Table t(n, std::vector<element_t>(n));
    for (element_t a = 0; a < n; ++a) {
      for (element_t b = 0; b < n; ++b) {
        t[a][b] = (a + b) % n;
      }
    }
    return FiniteSemigroup::from_table(t);
  }

  FiniteSemigroup symmetric_group3() {
    using Perm = std::array<std::size_t, 3>;
    std::vector<Perm> perms;
    Perm              p = {0, 1, 2};
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::map<Perm, element_t> index;
    std::vector<std::string>  labels;
    for (element_t i = 0; i < perms.size(); ++i) {
      index[perms[i]] = i;
      labels.push_back(
          fmt::format("{}{}{}", perms[i][0], perms[i][1], perms[i][2]));
    }
    Table t(6, std::vector<element_t>(6));
    for (element_t i = 0; i < 6; ++i) {
      for (element_t j = 0; j < 6; ++j) {
        Perm pq;
        for (std::size_t x = 0; x < 3; ++x) {
          pq[x] = perms[i][perms[j][x]];
        }
        t[i][j] = index.at(pq);
      }
    }
    return FiniteSemigroup::from_table(t, labels);
  }

  FiniteSemigroup brandt_b2() {
    // 0 and the matrix units (1,1), (1,2), (2,1), (2,2)
    constexpr std::array<std::pair<int, int>, 5> unit
        = {{{0, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}}};
    Table t(5, std::vector<element_t>(5, 0));
    for (element_t a = 1; a < 5; ++a) {
      for (element_t b = 1; b < 5; ++b) {
        if (unit[a].second == unit[b].first) {
          std::pair<int, int> const ab{unit[a].first, unit[b].second};
          t[a][b] = std::find(unit.begin(), unit.end(), ab) - unit.begin();
        }
      }
    }
    return FiniteSemigroup::from_table(t, {"0", "11", "12", "21", "22"});
  }

  std::vector<std::size_t> slg_offsets(SLGSpec const& spec) {
    std::vector<std::size_t> offsets{0};
    for (auto const& G : spec.groups) {
      offsets.push_back(offsets.back() + G.size());
    }
    return offsets;
  }

  HomSpec trivial_hom(SLGSpec const& partial, element_t from, element_t to) {
    auto const id = identity_element(partial.groups.at(to));
    return HomSpec{
        from,
        to,
        std::vector<element_t>(partial.groups.at(from).size(), id.value_or(0))};
  }

  SLGSpec two_level_slg(FiniteSemigroup const& top,
                        FiniteSemigroup const& bottom,
                        std::vector<element_t> map) {
    SLGSpec spec{chain(2), {top, bottom}, {}};
    if (map.empty()) {
      spec.homs.push_back(trivial_hom(spec, 0, 1));
    } else {
      spec.homs.push_back(HomSpec{0, 1, std::move(map)});
    }
    return spec;
  }

  FiniteSemigroup strong_semilattice_of_groups(SLGSpec const& spec) {
    auto const&       Y = spec.semilattice;
    std::size_t const k = Y.size();
    if (!is_semilattice(Y)) {
      throw Error(ErrorCode::BadSemilattice,
                  is_commutative(Y)
                      ? "/semilattice: not every element is idempotent"
                      : "/semilattice: not commutative");
    }
    if (spec.groups.size() != k) {
      throw Error(ErrorCode::BadGroup,
                  fmt::format("/groups: {} groups for {} semilattice vertices",
                              spec.groups.size(),
                              k));
    }
    std::vector<element_t> identity(k);
    for (std::size_t alpha = 0; alpha < k; ++alpha) {
      if (!is_group(spec.groups[alpha])) {
        throw Error(ErrorCode::BadGroup,
                    fmt::format("/groups/{}: not a group", alpha));
      }
      identity[alpha] = *identity_element(spec.groups[alpha]);
    }

    auto above = [&Y](element_t alpha, element_t beta) {
      return Y.product(alpha, beta) == beta;
    };

    // phi[alpha][beta], empty when not given
    std::vector<std::vector<std::vector<element_t>>> phi(
        k, std::vector<std::vector<element_t>>(k));
    for (std::size_t i = 0; i < spec.homs.size(); ++i) {
      auto const& h    = spec.homs[i];
      auto const  path = fmt::format("/homs/{}", i);
      if (h.from >= k || h.to >= k) {
        throw Error(ErrorCode::BadHom,
                    fmt::format("{}: vertex out of range [0, {})", path, k));
      }
      if (!above(h.from, h.to)) {
        throw Error(ErrorCode::BadHom,
                    fmt::format("{}: vertex {} does not lie above vertex {}",
                                path,
                                h.from,
                                h.to));
      }
      if (!phi[h.from][h.to].empty()) {
        throw Error(ErrorCode::BadHom,
                    fmt::format("{}: duplicate homomorphism {} -> {}",
                                path,
                                h.from,
                                h.to));
      }
      auto const& G = spec.groups[h.from];
      auto const& H = spec.groups[h.to];
      if (h.map.size() != G.size()) {
        throw Error(ErrorCode::BadHom,
                    fmt::format("{}/map: {} entries, expected {}",
                                path,
                                h.map.size(),
                                G.size()));
      }
      for (std::size_t x = 0; x < h.map.size(); ++x) {
        if (h.map[x] >= H.size()) {
          throw Error(ErrorCode::BadHom,
                      fmt::format("{}/map/{}: {} is out of range [0, {})",
                                  path,
                                  x,
                                  h.map[x],
                                  H.size()));
        }
      }
      for (element_t x = 0; x < G.size(); ++x) {
        for (element_t y = 0; y < G.size(); ++y) {
          if (h.map[G.product(x, y)] != H.product(h.map[x], h.map[y])) {
            throw Error(
                ErrorCode::BadHom,
                fmt::format("{0}/map: not a homomorphism, phi({1}*{2}) != "
                            "phi({1})*phi({2})",
                            path,
                            x,
                            y));
          }
        }
      }
      if (h.map[identity[h.from]] != identity[h.to]) {
        throw Error(ErrorCode::BadHom,
                    fmt::format("{}/map: identity not preserved", path));
      }
      if (h.from == h.to) {
        for (element_t x = 0; x < G.size(); ++x) {
          if (h.map[x] != x) {
            throw Error(ErrorCode::BadHom,
                        fmt::format("{}/map: the homomorphism {} -> {} must "
                                    "be the identity",
                                    path,
                                    h.from,
                                    h.to));
          }
        }
      }
      phi[h.from][h.to] = h.map;
    }

    for (element_t alpha = 0; alpha < k; ++alpha) {
      if (phi[alpha][alpha].empty()) {
        auto& id = phi[alpha][alpha];
        id.resize(spec.groups[alpha].size());
        for (element_t x = 0; x < id.size(); ++x) {
          id[x] = x;
        }
      }
      for (element_t beta = 0; beta < k; ++beta) {
        if (above(alpha, beta) && phi[alpha][beta].empty()) {
          throw Error(ErrorCode::MissingHom,
                      fmt::format("/homs: no homomorphism from vertex {} to "
                                  "vertex {}",
                                  alpha,
                                  beta));
        }
      }
    }

    for (element_t alpha = 0; alpha < k; ++alpha) {
      for (element_t beta = 0; beta < k; ++beta) {
        if (!above(alpha, beta)) {
          continue;
        }
        for (element_t gamma = 0; gamma < k; ++gamma) {
          if (!above(beta, gamma)) {
            continue;
          }
          for (element_t x = 0; x < spec.groups[alpha].size(); ++x) {
            if (phi[beta][gamma][phi[alpha][beta][x]] != phi[alpha][gamma][x]) {
              throw Error(ErrorCode::IncoherentHoms,
                          fmt::format("/homs: composite {} -> {} -> {} differs "
                                      "from {} -> {} at element {}",
                                      alpha,
                                      beta,
                                      gamma,
                                      alpha,
                                      gamma,
                                      x));
            }
          }
        }
      }
    }

    auto const        offsets = slg_offsets(spec);
    std::size_t const n       = offsets.back();
    std::vector<element_t> vertex(n), local(n);
    for (element_t alpha = 0; alpha < k; ++alpha) {
      for (element_t x = 0; x < spec.groups[alpha].size(); ++x) {
        vertex[offsets[alpha] + x] = alpha;
        local[offsets[alpha] + x]  = x;
      }
    }

    Table t(n, std::vector<element_t>(n));
    for (element_t a = 0; a < n; ++a) {
      for (element_t b = 0; b < n; ++b) {
        element_t const alpha = vertex[a], beta = vertex[b];
        element_t const meet = Y.product(alpha, beta);
        auto const&     G    = spec.groups[meet];
        t[a][b]              = offsets[meet]
                  + G.product(phi[alpha][meet][local[a]],
                              phi[beta][meet][local[b]]);
      }
    }
    return FiniteSemigroup::from_table(t);
  }

}  // namespace crossconn

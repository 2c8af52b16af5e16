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

#include "crossconn/tl.hpp"

#include <fmt/format.h>  // for fmt::format

#include "crossconn/error.hpp"    // for Error
#include "crossconn/kernels.hpp"  // for cone_table_parallel

namespace crossconn {

  bool TLSemigroup::is_regular() const {
    for (auto const& w : regular_witness) {
      if (!w) {
        return false;
      }
    }
    return true;
  }

  TLSemigroup build_TL(NormalCategory const& C, EnumerationOptions opts) {
    auto              enumeration = enumerate_cones(C, opts);
    auto              cones       = std::move(enumeration.cones);
    ConeIndex         index(cones);
    std::size_t const m = cones.size();

    auto const flat = kernels::cone_table_parallel(C, cones, index);
    Table      t(m, std::vector<element_t>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (flat[i * m + j] == kernels::npos) {
          throw Error(ErrorCode::ClosureFailed,
                      fmt::format("the product of cones {} and {} is not a "
                                  "normal cone of the category",
                                  i,
                                  j));
        }
        t[i][j] = flat[i * m + j];
      }
    }
    auto table = FiniteSemigroup::from_table(t);

    std::vector<std::size_t> principal;
    for (element_t a = 0; a < C.base().size(); ++a) {
      auto const pos = index.find(principal_cone(C, a));
      if (!pos) {
        throw Error(ErrorCode::ClosureFailed,
                    fmt::format("the principal cone of {} was not enumerated",
                                a));
      }
      principal.push_back(*pos);
    }

    std::vector<std::optional<std::size_t>> witness(m);
    for (std::size_t g = 0; g < m; ++g) {
      for (std::size_t d = 0; d < m && !witness[g]; ++d) {
        if (table.product(table.product(g, d), g) == g) {
          witness[g] = d;
        }
      }
    }

    return TLSemigroup{std::move(cones),
                       std::move(index),
                       std::move(table),
                       std::move(principal),
                       std::move(enumeration.visited_per_apex),
                       std::move(witness)};
  }

  Prop4Report verify_prop4(TLSemigroup const& tl) {
    Prop4Report       r;
    std::vector<bool> principal(tl.cones.size(), false);
    for (auto p : tl.principal_index) {
      principal[p] = true;
    }
    r.num_cones = tl.cones.size();
    for (std::size_t i = 0; i < principal.size(); ++i) {
      if (principal[i]) {
        ++r.num_principal;
      } else if (!r.non_principal) {
        r.non_principal = i;
      }
    }
    r.holds = !r.non_principal.has_value();
    return r;
  }

  Prop5Report verify_prop5(TLSemigroup const& tl) {
    Prop5Report r;
    auto const& pi = tl.principal_index;
    for (element_t a = 0; a < pi.size() && !r.collision; ++a) {
      for (element_t b = a + 1; b < pi.size(); ++b) {
        if (pi[a] == pi[b]) {
          r.collision = std::make_pair(a, b);
          break;
        }
      }
    }
    r.holds = !r.collision.has_value();
    return r;
  }

  HomomorphismReport verify_homomorphism_law(NormalCategory const& C) {
    HomomorphismReport r;
    auto const&        S = C.base();
    std::vector<NormalCone> rho;
    for (element_t a = 0; a < S.size(); ++a) {
      rho.push_back(principal_cone(C, a));
    }
    for (element_t a = 0; a < S.size(); ++a) {
      for (element_t b = 0; b < S.size(); ++b) {
        if (cone_product(C, rho[a], rho[b]) != rho[S.product(a, b)]) {
          r.holds   = false;
          r.failure = std::make_pair(a, b);
          return r;
        }
      }
    }
    return r;
  }

  Theorem6Report verify_theorem6(FiniteSemigroup const& S,
                                 TLSemigroup const&     tl) {
    auto const& pi = tl.principal_index;

    Theorem6Report r;
    r.semigroup_order = S.size();
    r.tl_order        = tl.cones.size();

    r.homomorphism = true;
    for (element_t a = 0; a < S.size() && r.homomorphism; ++a) {
      for (element_t b = 0; b < S.size(); ++b) {
        if (pi[S.product(a, b)] != tl.table.product(pi[a], pi[b])) {
          r.homomorphism         = false;
          r.homomorphism_failure = std::make_pair(a, b);
          break;
        }
      }
    }
    auto const p5         = verify_prop5(tl);
    r.injective           = p5.holds;
    r.injectivity_failure = p5.collision;
    auto const p4         = verify_prop4(tl);
    r.surjective          = p4.holds;
    r.not_in_image        = p4.non_principal;
    r.isomorphism         = r.homomorphism && r.injective && r.surjective;
    return r;
  }

  Theorem6Report verify_theorem6(FiniteSemigroup const& S,
                                 EnumerationOptions     opts) {
    return verify_theorem6(S, build_TL(build_L(S), opts));
  }

  std::optional<std::vector<element_t>> rho_bar(TLSemigroup const& tl) {
    std::vector<bool> hit(tl.cones.size(), false);
    for (auto p : tl.principal_index) {
      if (hit[p]) {
        return std::nullopt;
      }
      hit[p] = true;
    }
    if (tl.principal_index.size() != tl.cones.size()) {
      return std::nullopt;
    }
    return tl.principal_index;
  }

}  // namespace crossconn

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

#include "doctest.h"

#include "crossconn/builders.hpp"
#include "crossconn/category.hpp"
#include "crossconn/duals.hpp"
#include "crossconn/error.hpp"
#include "crossconn/fixtures.hpp"
#include "crossconn/isomorphism.hpp"
#include "crossconn/tl.hpp"

using namespace crossconn;

namespace {

  ErrorCode code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::ParseError;
  }

  void check_witness(DualIsoReport const& r,
                     NormalCategory const& from,
                     NormalCategory const& to) {
    CHECK(r.holds);
    REQUIRE(r.witness);
    CHECK(r.witness->verified);
    auto const check = verify_category_iso(*r.witness, from, to);
    CHECK_MESSAGE(check.ok, check.failure);
  }

}  // namespace

TEST_CASE("normal duals on examples") {
  auto const c2 = normal_dual_L(chain(2));
  CHECK(c2.num_objects() == 2);
  CHECK(find_category_iso_exhaustive(c2, build_R(chain(2))).has_value());

  auto const z2 = normal_dual_L(cyclic_group(2));
  CHECK(z2.num_objects() == 1);
  CHECK(z2.num_morphisms() == 2);

  auto const cl5 = normal_dual_L(fixture("cl5"));
  auto const R   = build_R(fixture("cl5"));
  REQUIRE(cl5.num_objects() == 2);
  REQUIRE(R.num_objects() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(cl5.hom(cl5.objects()[i], cl5.objects()[j]).size()
            == R.hom(R.objects()[i], R.objects()[j]).size());
    }
  }
}

TEST_CASE("induced category isomorphisms") {
  SUBCASE("identity") {
    auto const C   = build_L(fixture("cl5"));
    ElementMap id  = {0, 1, 2, 3, 4};
    auto const iso = induced_category_iso(id, C, C);
    CHECK(iso.verified);
    for (auto const& [m, image] : iso.morphism_map) {
      CHECK(m == image);
    }
    CHECK(iso.object_map == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("inverse of rho-bar on C2") {
    auto const S   = chain(2);
    auto const tl  = build_TL(build_L(S));
    auto const rb  = rho_bar(tl);
    REQUIRE(rb);
    auto const iso = induced_category_iso(inverse_map(*rb), build_L(tl.table), build_L(S));
    CHECK(iso.verified);
  }
  SUBCASE("nontrivial automorphism of Z3") {
    auto const C   = build_L(cyclic_group(3));
    auto const iso = induced_category_iso(ElementMap{0, 2, 1}, C, C);
    CHECK(iso.verified);
    CHECK(iso.morphism_map.at(Morphism{0, 1, 0}) == Morphism{0, 2, 0});
    CHECK(iso.morphism_map.at(Morphism{0, 2, 0}) == Morphism{0, 1, 0});
  }
  SUBCASE("not an isomorphism") {
    auto const C = build_L(chain(2));
    CHECK(code_of([&] { induced_category_iso(ElementMap{0, 0}, C, C); })
          == ErrorCode::NotAnIsomorphism);
  }
}

TEST_CASE("verify_category_iso rejects broken witnesses") {
  auto const C   = build_L(cyclic_group(3));
  auto       iso = induced_category_iso(ElementMap{0, 2, 1}, C, C);
  iso.morphism_map[Morphism{0, 1, 0}] = Morphism{0, 1, 0};
  CHECK_FALSE(verify_category_iso(iso, C, C).ok);

  auto const D   = build_L(chain(3));
  auto       bad = induced_category_iso(ElementMap{0, 1, 2}, D, D);
  bad.object_map = {1, 0, 2};
  CHECK_FALSE(verify_category_iso(bad, D, D).ok);
}

TEST_CASE("verify_theorem7 and verify_theorem8 on examples") {
  for (auto const* name : {"c2", "cl5", "z3"}) {
    CAPTURE(name);
    auto const S  = fixture(name);
    auto const t7 = verify_theorem7(S);
    auto const t8 = verify_theorem8(S);
    CHECK(t7.holds);
    CHECK(t8.holds);
    CHECK(t8.anti_isomorphic);
  }
  CHECK(normal_dual_L(cyclic_group(3)).num_objects() == 1);
  CHECK(normal_dual_R(cyclic_group(3)).num_objects() == 1);
}

TEST_CASE("dual isomorphisms on the Clifford corpus") {
  for (auto const& f : clifford_corpus()) {
    CAPTURE(f.name);
    auto const& S  = f.semigroup;
    auto const  t7 = verify_theorem7(S);
    check_witness(t7.dual_iso, normal_dual_L(S), build_R(S));
    auto const t8 = verify_theorem8(S);
    CHECK(t8.anti_isomorphic);
    REQUIRE(t8.anti_iso);
    CHECK(verify_morphism(build_TL(build_R(S)).table, S, *t8.anti_iso, true));
    check_witness(t8.dual_iso, normal_dual_R(S), build_L(S));
    auto const dg = verify_degeneration(S);
    check_witness(dg.gamma, build_R(S), normal_dual_L(S));
    check_witness(dg.delta, build_L(S), normal_dual_R(S));
    CHECK(dg.holds);
  }
}

TEST_CASE("inverse transport verifies in the other direction") {
  for (auto const& f : clifford_corpus()) {
    CAPTURE(f.name);
    auto const tl  = build_TL(build_L(f.semigroup));
    auto const rb  = rho_bar(tl);
    REQUIRE(rb);
    auto const T   = build_L(tl.table);
    auto const S   = build_L(f.semigroup);
    auto const phi = inverse_map(*rb);
    CHECK(induced_category_iso(phi, T, S).verified);
    CHECK(induced_category_iso(inverse_map(phi), S, T).verified);
  }
}

TEST_CASE("semilattice specialisation") {
  for (auto const& f : semilattice_corpus()) {
    CAPTURE(f.name);
    auto const r = verify_semilattice_theorems(f.semigroup);
    CHECK(r.holds);
    CHECK(r.tl_commutative);
    CHECK(r.tl_idempotent);
    CHECK(r.same_order);
  }
  CHECK(code_of([] { verify_semilattice_theorems(cyclic_group(2)); })
        == ErrorCode::NotASemilattice);
}

TEST_CASE("B2 departs from the degenerate picture") {
  auto const b2 = brandt_b2();
  auto const nl = normal_dual_L(b2);
  auto const R  = build_R(b2);
  CHECK(nl.base().size() == 7);
  CHECK(nl.base().size() != R.base().size());
  auto const t7 = verify_theorem7(b2);
  CHECK_FALSE(t7.holds);
  CHECK_FALSE(t7.dual_iso.failure.empty());
  CHECK_FALSE(verify_degeneration(b2).holds);
  CHECK_FALSE(verify_theorem8(b2).holds);
}

TEST_CASE("transport agrees with the exhaustive functor search") {
  std::vector<std::pair<std::string, NormalCategory>> small;
  for (auto const& f : full_corpus()) {
    auto C = build_L(f.semigroup);
    if (C.num_objects() <= 3) {
      small.emplace_back(f.name, std::move(C));
    }
  }
  for (auto const& [a, C] : small) {
    for (auto const& [b, D] : small) {
      if (C.base().size() != D.base().size()) {
        continue;
      }
      CAPTURE(a);
      CAPTURE(b);
      auto const phi       = find_isomorphism(C.base(), D.base());
      bool const transport = phi && induced_category_iso(*phi, C, D).verified;
      auto const brute     = find_category_iso_exhaustive(C, D);
      CHECK(transport == brute.has_value());
      if (brute) {
        CHECK(brute->verified);
      }
    }
  }
  // the dual pairs themselves
  for (auto const& f : clifford_corpus()) {
    auto const R = build_R(f.semigroup);
    if (R.num_objects() > 3) {
      continue;
    }
    CAPTURE(f.name);
    auto const nl = normal_dual_L(f.semigroup);
    CHECK(find_category_iso_exhaustive(R, nl).has_value());
    CHECK(find_category_iso_exhaustive(build_L(f.semigroup),
                                       normal_dual_R(f.semigroup))
              .has_value());
  }
  // negative control: hom-set sizes differ
  CHECK_FALSE(find_category_iso_exhaustive(build_L(fixture("slg_z2_z1")),
                                           build_L(fixture("slg_z1_z2"))));
}

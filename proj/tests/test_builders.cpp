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

#include <map>  // for map

#include "doctest.h"

#include "crossconn/builders.hpp"
#include "crossconn/error.hpp"
#include "crossconn/fixtures.hpp"
#include "crossconn/isomorphism.hpp"
#include "crossconn/semigroup.hpp"
#include "crossconn/slg_json.hpp"

using namespace crossconn;
using nlohmann::json;

namespace {

  std::pair<ErrorCode, std::string> error_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return {e.code(), e.what()};
    }
    FAIL("no error thrown");
    return {ErrorCode::ParseError, ""};
  }

  // The strong semilattice product written out from the definition, with
  // every structure map looked up (or the identity on the diagonal).
  element_t slg_product_by_hand(SLGSpec const& spec, element_t a, element_t b) {
    std::vector<std::size_t> offset{0};
    for (auto const& g : spec.groups) {
      offset.push_back(offset.back() + g.size());
    }
    auto vertex = [&](element_t x) {
      std::size_t v = 0;
      while (x >= offset[v + 1]) {
        ++v;
      }
      return v;
    };
    auto phi = [&](std::size_t from, std::size_t to, element_t x) {
      if (from == to) {
        return x;
      }
      for (auto const& h : spec.homs) {
        if (h.from == from && h.to == to) {
          return h.map[x];
        }
      }
      FAIL("missing structure map");
      return x;
    };
    std::size_t const alpha = vertex(a), beta = vertex(b);
    std::size_t const gamma = spec.semilattice.product(alpha, beta);
    element_t const   x     = phi(alpha, gamma, a - offset[alpha]);
    element_t const   y     = phi(beta, gamma, b - offset[beta]);
    return offset[gamma] + spec.groups[gamma].product(x, y);
  }

  std::vector<SLGSpec> sample_specs() {
    std::vector<SLGSpec> specs;
    std::vector<FiniteSemigroup> groups{cyclic_group(1),
                                        cyclic_group(2),
                                        cyclic_group(3),
                                        symmetric_group3()};
    for (auto const& top : groups) {
      for (auto const& bottom : groups) {
        specs.push_back(two_level_slg(top, bottom));
      }
    }
    specs.push_back(two_level_slg(symmetric_group3(), cyclic_group(2), {0, 1, 1, 0, 0, 1}));
    specs.push_back(two_level_slg(cyclic_group(3), cyclic_group(3), {0, 1, 2}));
    specs.push_back(two_level_slg(cyclic_group(3), cyclic_group(3), {0, 2, 1}));
    SLGSpec three{chain(3), {symmetric_group3(), cyclic_group(2), cyclic_group(1)}, {}};
    three.homs.push_back(HomSpec{0, 1, {0, 1, 1, 0, 0, 1}});
    three.homs.push_back(trivial_hom(three, 0, 2));
    three.homs.push_back(trivial_hom(three, 1, 2));
    specs.push_back(three);
    SLGSpec wide{diamond(), {cyclic_group(2), cyclic_group(2), cyclic_group(1), cyclic_group(1)}, {}};
    wide.homs.push_back(trivial_hom(wide, 0, 1));
    wide.homs.push_back(trivial_hom(wide, 0, 2));
    wide.homs.push_back(trivial_hom(wide, 0, 3));
    wide.homs.push_back(trivial_hom(wide, 1, 3));
    wide.homs.push_back(trivial_hom(wide, 2, 3));
    specs.push_back(wide);
    return specs;
  }

}  // namespace

TEST_CASE("chain") {
  CHECK(chain(1).size() == 1);
  CHECK(chain(2) == FiniteSemigroup::from_table({{0, 1}, {1, 1}}));
  auto const c3 = chain(3);
  CHECK(c3.product(0, 2) == 2);
  CHECK(c3.product(1, 2) == 2);
  CHECK(c3.product(0, 1) == 1);
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const c = chain(n);
    for (element_t a = 0; a < n; ++a) {
      for (element_t b = 0; b < n; ++b) {
        CHECK(c.product(a, b) == std::max(a, b));
      }
    }
  }
}

TEST_CASE("diamond") {
  auto const d = diamond();
  element_t const t = 0, a = 1, b = 2, z = 3;
  CHECK(d.product(a, b) == z);
  CHECK(d.product(t, a) == a);
  CHECK(is_clifford(d));
  CHECK(is_semilattice(d));
}

TEST_CASE("groups") {
  CHECK(cyclic_group(1).size() == 1);
  CHECK(is_group(cyclic_group(1)));
  CHECK(cyclic_group(3).product(1, 2) == 0);
  auto const s3 = symmetric_group3();
  CHECK(s3.size() == 6);
  CHECK(idempotents(s3).size() == 1);
  CHECK_FALSE(is_commutative(s3));
  CHECK(is_group(s3));
}

TEST_CASE("brandt b2") {
  auto const b2 = brandt_b2();
  CHECK(b2.product(2, 3) == 1);
  CHECK(b2.product(2, 2) == 0);
  CHECK(is_inverse(b2));
  CHECK_FALSE(is_clifford(b2));
  // (i,j)(k,l) = (i,l) if j = k else 0, elements 1..4 = (1,1),(1,2),(2,1),(2,2)
  std::pair<int, int> const pairs[] = {{0, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}};
  auto index = [&](int i, int j) {
    for (element_t x = 1; x < 5; ++x) {
      if (pairs[x] == std::pair{i, j}) {
        return x;
      }
    }
    return element_t{0};
  };
  for (element_t x = 0; x < 5; ++x) {
    for (element_t y = 0; y < 5; ++y) {
      element_t expected = 0;
      if (x != 0 && y != 0 && pairs[x].second == pairs[y].first) {
        expected = index(pairs[x].first, pairs[y].second);
      }
      CHECK(b2.product(x, y) == expected);
    }
  }
}

TEST_CASE("cl5") {
  auto const spec = two_level_slg(cyclic_group(2), cyclic_group(3));
  auto const cl5  = strong_semilattice_of_groups(spec);
  CHECK(cl5.size() == 5);
  CHECK(is_clifford(cl5));
  // Z2 generator is 1, Z3 generator is 2 + 1
  CHECK(cl5.product(1, 3) == 3);
  CHECK(cl5 == fixture("cl5"));
}

TEST_CASE("degenerate strong semilattices") {
  CHECK(strong_semilattice_of_groups(two_level_slg(cyclic_group(1), cyclic_group(1)))
        == chain(2));
  SLGSpec one{chain(1), {cyclic_group(2)}, {}};
  CHECK(strong_semilattice_of_groups(one) == cyclic_group(2));
}

TEST_CASE("strong semilattice product matches the definition") {
  for (auto const& spec : sample_specs()) {
    auto const S = strong_semilattice_of_groups(spec);
    CHECK(is_clifford(S));
    CHECK(idempotents(S).size() == spec.semilattice.size());
    for (element_t a = 0; a < S.size(); ++a) {
      for (element_t b = 0; b < S.size(); ++b) {
        CHECK(S.product(a, b) == slg_product_by_hand(spec, a, b));
      }
    }
  }
}

TEST_CASE("grading, restriction and trivial groups") {
  for (auto const& spec : sample_specs()) {
    auto const S      = strong_semilattice_of_groups(spec);
    auto const offset = slg_offsets(spec);
    std::size_t total = 0;
    for (auto const& g : spec.groups) {
      total += g.size();
    }
    CHECK(S.size() == total);
    auto vertex = [&](element_t x) {
      std::size_t v = 0;
      while (x >= offset[v + 1]) {
        ++v;
      }
      return v;
    };
    for (element_t a = 0; a < S.size(); ++a) {
      for (element_t b = 0; b < S.size(); ++b) {
        CHECK(vertex(S.product(a, b))
              == spec.semilattice.product(vertex(a), vertex(b)));
      }
    }
    for (std::size_t v = 0; v < spec.groups.size(); ++v) {
      auto const& G = spec.groups[v];
      for (element_t x = 0; x < G.size(); ++x) {
        for (element_t y = 0; y < G.size(); ++y) {
          CHECK(S.product(offset[v] + x, offset[v] + y) == offset[v] + G.product(x, y));
        }
      }
    }
  }
  SLGSpec trivial{diamond(), std::vector<FiniteSemigroup>(4, cyclic_group(1)), {}};
  for (auto [from, to] : {std::pair{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}) {
    trivial.homs.push_back(trivial_hom(trivial, from, to));
  }
  auto const S = strong_semilattice_of_groups(trivial);
  CHECK(find_isomorphism(S, diamond()).has_value());
}

TEST_CASE("strong semilattice validation") {
  auto spec = two_level_slg(cyclic_group(2), cyclic_group(3));

  SUBCASE("not a semilattice") {
    spec.semilattice = cyclic_group(2);
    CHECK(error_of([&] { strong_semilattice_of_groups(spec); }).first
          == ErrorCode::BadSemilattice);
  }
  SUBCASE("not a group") {
    spec.groups[1] = chain(2);
    auto const [code, what] = error_of([&] { strong_semilattice_of_groups(spec); });
    CHECK(code == ErrorCode::BadGroup);
    CHECK(what.find("/groups/1") != std::string::npos);
  }
  SUBCASE("wrong direction") {
    spec.homs[0].from = 1;
    spec.homs[0].to   = 0;
    CHECK(error_of([&] { strong_semilattice_of_groups(spec); }).first
          == ErrorCode::BadHom);
  }
  SUBCASE("not a homomorphism") {
    spec.homs[0].map = {0, 1};  // Z2 -> Z3, 1 + 1 = 0 but 1 + 1 = 2 in Z3
    auto const [code, what] = error_of([&] { strong_semilattice_of_groups(spec); });
    CHECK(code == ErrorCode::BadHom);
    CHECK(what.find("/homs/0/map") != std::string::npos);
  }
  SUBCASE("out of range") {
    spec.homs[0].map = {0, 7};
    auto const [code, what] = error_of([&] { strong_semilattice_of_groups(spec); });
    CHECK(code == ErrorCode::BadHom);
    CHECK(what.find("/homs/0/map/1") != std::string::npos);
  }
  SUBCASE("missing") {
    spec.homs.clear();
    CHECK(error_of([&] { strong_semilattice_of_groups(spec); }).first
          == ErrorCode::MissingHom);
  }
  SUBCASE("non-identity diagonal") {
    auto s = two_level_slg(cyclic_group(3), cyclic_group(1));
    s.homs.push_back(HomSpec{0, 0, {0, 2, 1}});
    CHECK(error_of([&] { strong_semilattice_of_groups(s); }).first
          == ErrorCode::BadHom);
  }
}

TEST_CASE("incoherent structure maps are rejected") {
  SLGSpec three{chain(3), {cyclic_group(2), cyclic_group(2), cyclic_group(2)}, {}};
  three.homs.push_back(HomSpec{0, 1, {0, 1}});
  three.homs.push_back(HomSpec{1, 2, {0, 1}});
  three.homs.push_back(HomSpec{0, 2, {0, 0}});
  CHECK(error_of([&] { strong_semilattice_of_groups(three); }).first
        == ErrorCode::IncoherentHoms);
}

TEST_CASE("slg json") {
  json const j = {{"semilattice", {{0, 1}, {1, 1}}},
                  {"groups", {{{0, 1}, {1, 0}}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}}},
                  {"homs", {{{"from", 0}, {"to", 1}, {"map", {0, 0}}}}}};
  auto const spec = slg_from_json(j);
  CHECK(strong_semilattice_of_groups(spec) == fixture("cl5"));
  CHECK(slg_from_json(slg_to_json(spec)).groups.size() == 2);

  json bad = j;
  bad["homs"][0]["map"] = {0, 1};
  auto const [code, what] = error_of([&] { strong_semilattice_of_groups(slg_from_json(bad)); });
  CHECK(code == ErrorCode::BadHom);
  CHECK(what.find("/homs/0/map") != std::string::npos);

  json missing = j;
  missing.erase("groups");
  CHECK(error_of([&] { slg_from_json(missing); }).first == ErrorCode::ParseError);

  json ragged = j;
  ragged["groups"][1] = {{0, 1}, {1}};
  auto const [code2, what2] = error_of([&] { slg_from_json(ragged); });
  CHECK(code2 == ErrorCode::NotClosed);
  CHECK(what2.find("/groups/1") != std::string::npos);
}

TEST_CASE("fixtures") {
  for (auto const& name : fixture_names()) {
    CAPTURE(name);
    CHECK(fixture(name).size() > 0);
  }
  CHECK(error_of([] { fixture("nope"); }).first == ErrorCode::UnknownFixture);
  for (auto const& f : clifford_corpus()) {
    CAPTURE(f.name);
    CHECK(is_clifford(f.semigroup));
    CHECK(f.semigroup.size() <= 12);
  }
  for (auto const& f : semilattice_corpus()) {
    CHECK(is_semilattice(f.semigroup));
  }
  CHECK(fixture("c4") == chain(4));
  CHECK(fixture("slg_z3_s3").size() == 9);
}

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

#include "crossconn/category.hpp"
#include "crossconn/cones.hpp"
#include "crossconn/error.hpp"
#include "crossconn/fixtures.hpp"
#include "crossconn/kernels.hpp"

using namespace crossconn;

namespace {

  bool same(std::vector<ApexCones> const& x, std::vector<ApexCones> const& y) {
    if (x.size() != y.size()) {
      return false;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].cones != y[i].cones || x[i].visited != y[i].visited) {
        return false;
      }
    }
    return true;
  }

  struct JobsGuard {
    ~JobsGuard() {
      set_num_jobs(0);
    }
  };

}  // namespace

TEST_CASE("parallel kernels match the serial references") {
  JobsGuard guard;
  for (int jobs : {1, 2, 4}) {
    set_num_jobs(jobs);
    for (auto const& f : full_corpus()) {
      CAPTURE(jobs);
      CAPTURE(f.name);
      auto const& S = f.semigroup;
      CHECK(kernels::associativity_violation_serial(S.size(), S.flat())
            == kernels::associativity_violation_parallel(S.size(), S.flat()));

      auto const C = build_L(S);
      CHECK(kernels::hom_sets_serial(S, C.objects())
            == kernels::hom_sets_parallel(S, C.objects()));

      auto const serial   = kernels::cones_by_apex_serial(C, {});
      auto const parallel = kernels::cones_by_apex_parallel(C, {});
      CHECK(same(serial, parallel));

      auto const cones = enumerate_cones(C).cones;
      ConeIndex  index(cones);
      CHECK(kernels::cone_table_serial(C, cones, index)
            == kernels::cone_table_parallel(C, cones, index));
    }
  }
}

TEST_CASE("associativity kernels find the least violation") {
  // (0 0) 1 = 1 1 = 0 but 0 (0 1) = 0 0 = 1
  std::vector<element_t> const bad{1, 0, 0, 0};
  auto const                   s = kernels::associativity_violation_serial(2, bad);
  auto const                   p = kernels::associativity_violation_parallel(2, bad);
  REQUIRE(s);
  CHECK(*s == kernels::Triple{0, 0, 1});
  CHECK(s == p);
}

TEST_CASE("missing products are marked") {
  auto const C     = build_L(fixture("b2"));
  auto       cones = enumerate_cones(C).cones;
  cones.pop_back();
  ConeIndex  index(cones);
  auto const t = kernels::cone_table_parallel(C, cones, index);
  CHECK(std::find(t.begin(), t.end(), kernels::npos) != t.end());
  CHECK(t == kernels::cone_table_serial(C, cones, index));
}

TEST_CASE("the first failing apex is rethrown") {
  JobsGuard guard;
  set_num_jobs(2);
  auto const C = build_L(fixture("slg_s3_s3"));
  for (auto* f : {&kernels::cones_by_apex_serial, &kernels::cones_by_apex_parallel}) {
    try {
      f(C, EnumerationOptions{2});
      FAIL("no error");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::EnumerationBudgetExceeded);
      CHECK(std::string(e.what()).find("apex S0") != std::string::npos);
    }
  }
}

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

#ifndef CROSSCONN_FIXTURES_HPP_
#define CROSSCONN_FIXTURES_HPP_

#include <string>  // for string
#include <vector>  // for vector

#include "semigroup.hpp"  // for FiniteSemigroup

namespace crossconn {

  struct Fixture {
    std::string     name;
    FiniteSemigroup semigroup;
  };

  //! Looks up a builtin semigroup by name.
  //!
  //! Recognised names: c<N> (chain), z<N> (cyclic group), diamond, s3, b2,
  //! cl5, slg_<top>_<bottom> for top, bottom in {z1, z2, z3, s3} (trivial
  //! connecting map), slg_s3_z2_sign, slg_z2_z2_id, slg_z3_z3_id,
  //! slg_s3_s3_id and slg3_s3_z2_z1. Throws UnknownFixture otherwise.
  FiniteSemigroup fixture(std::string const& name);

  //! Names of the fixtures listed by `crossconn fixtures`.
  std::vector<std::string> fixture_names();

  //! The Clifford verification corpus: c1..c4, diamond, z2, z3, s3, cl5 and
  //! the SLGs over chain(2) built from {z1, z2, z3, s3}.
  std::vector<Fixture> clifford_corpus();

  //! c1..c4 and diamond.
  std::vector<Fixture> semilattice_corpus();

  //! clifford_corpus() plus the non-Clifford control b2.
  std::vector<Fixture> full_corpus();

}  // namespace crossconn

#endif  // CROSSCONN_FIXTURES_HPP_

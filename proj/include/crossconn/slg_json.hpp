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

#ifndef CROSSCONN_SLG_JSON_HPP_
#define CROSSCONN_SLG_JSON_HPP_

#include <string>  // for string

#include "json.hpp"  // for nlohmann::json

#include "builders.hpp"  // for SLGSpec

namespace crossconn {

  // { "semilattice": table,
  //   "groups": [table, ...],
  //   "homs": [{ "from": alpha, "to": beta, "map": [indices] }, ...] }
  //
  // Malformed input raises ParseError (or the from_table error) with the
  // JSON pointer of the offending value.

  SLGSpec        slg_from_json(nlohmann::json const& j);
  SLGSpec        read_slg_file(std::string const& path);
  nlohmann::json slg_to_json(SLGSpec const& spec);

}  // namespace crossconn

#endif  // CROSSCONN_SLG_JSON_HPP_

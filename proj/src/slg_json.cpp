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

#include "crossconn/slg_json.hpp"

#include <cstdint>  // for int64_t
#include <fstream>  // for ifstream

#include <fmt/format.h>  // for fmt::format

#include "crossconn/error.hpp"  // for Error

namespace crossconn {

  using nlohmann::json;

  namespace {

    [[noreturn]] void bad(std::string const& path, std::string const& what) {
      throw Error(ErrorCode::ParseError, fmt::format("{}: {}", path, what));
    }

    element_t index_at(json const& j, std::string const& path) {
      if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
        bad(path, "expected a non-negative integer");
      }
      return j.get<element_t>();
    }

    std::vector<element_t> indices_at(json const& j, std::string const& path) {
      if (!j.is_array()) {
        bad(path, "expected an array");
      }
      std::vector<element_t> result;
      for (std::size_t i = 0; i < j.size(); ++i) {
        result.push_back(index_at(j[i], fmt::format("{}/{}", path, i)));
      }
      return result;
    }

    FiniteSemigroup table_at(json const& j, std::string const& path) {
      if (!j.is_array()) {
        bad(path, "expected an array of rows");
      }
      Table t;
      for (std::size_t i = 0; i < j.size(); ++i) {
        t.push_back(indices_at(j[i], fmt::format("{}/{}", path, i)));
      }
      try {
        return FiniteSemigroup::from_table(t);
      } catch (Error const& e) {
        throw Error(e.code(), fmt::format("{}: {}", path, e.detail()));
      }
    }

    json const& member(json const& j, char const* key, std::string const& path) {
      if (!j.is_object()) {
        bad(path, "expected an object");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        bad(path, fmt::format("missing key \"{}\"", key));
      }
      return *it;
    }

  }  // namespace

  SLGSpec slg_from_json(json const& j) {
    auto Y = table_at(member(j, "semilattice", ""), "/semilattice");

    auto const& groups = member(j, "groups", "");
    if (!groups.is_array()) {
      bad("/groups", "expected an array of tables");
    }
    std::vector<FiniteSemigroup> G;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      G.push_back(table_at(groups[i], fmt::format("/groups/{}", i)));
    }

    std::vector<HomSpec> homs;
    if (j.contains("homs")) {
      auto const& hs = j["homs"];
      if (!hs.is_array()) {
        bad("/homs", "expected an array");
      }
      for (std::size_t i = 0; i < hs.size(); ++i) {
        auto const path = fmt::format("/homs/{}", i);
        homs.push_back(
            HomSpec{index_at(member(hs[i], "from", path), path + "/from"),
                    index_at(member(hs[i], "to", path), path + "/to"),
                    indices_at(member(hs[i], "map", path), path + "/map")});
      }
    }
    return SLGSpec{std::move(Y), std::move(G), std::move(homs)};
  }

  SLGSpec read_slg_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorCode::ParseError,
                  fmt::format("cannot open \"{}\"", path));
    }
    json j;
    try {
      in >> j;
    } catch (json::parse_error const& e) {
      throw Error(ErrorCode::ParseError,
                  fmt::format("\"{}\": {}", path, e.what()));
    }
    return slg_from_json(j);
  }

  json slg_to_json(SLGSpec const& spec) {
    json groups = json::array();
    for (auto const& G : spec.groups) {
      groups.push_back(G.table());
    }
    json homs = json::array();
    for (auto const& h : spec.homs) {
      homs.push_back({{"from", h.from}, {"to", h.to}, {"map", h.map}});
    }
    return {{"semilattice", spec.semilattice.table()},
            {"groups", groups},
            {"homs", homs}};
  }

}  // namespace crossconn

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

#include "crossconn/fixtures.hpp"

#include <charconv>  // for from_chars
#include <map>       // for map

#include <fmt/format.h>  // for fmt::format

#include "crossconn/builders.hpp"  // for chain, cyclic_group, ...
#include "crossconn/error.hpp"     // for Error

namespace crossconn {

  namespace {

    std::vector<std::string> const& group_names() {
      static std::vector<std::string> const names = {"z1", "z2", "z3", "s3"};
      return names;
    }

    std::optional<std::size_t> suffix_number(std::string const& name,
                                             std::size_t        prefix) {
      if (name.size() <= prefix) {
        return std::nullopt;
      }
      std::size_t n = 0;
      auto [ptr, ec] = std::from_chars(
          name.data() + prefix, name.data() + name.size(), n);
      if (ec != std::errc() || ptr != name.data() + name.size() || n == 0) {
        return std::nullopt;
      }
      return n;
    }

    FiniteSemigroup group(std::string const& name) {
      return name == "s3" ? symmetric_group3()
                          : cyclic_group(*suffix_number(name, 1));
    }

    // S3 -> Z2, the sign: transpositions are 021, 102 and 210.
    std::vector<element_t> sign_map() {
      return {0, 1, 1, 0, 0, 1};
    }

  }  // namespace

  FiniteSemigroup fixture(std::string const& name) {
    if (name == "diamond") {
      return diamond();
    }
    if (name == "s3") {
      return symmetric_group3();
    }
    if (name == "b2") {
      return brandt_b2();
    }
    if (name == "cl5") {
      return strong_semilattice_of_groups(
          two_level_slg(cyclic_group(2), cyclic_group(3)));
    }
    if (name == "slg_s3_z2_sign") {
      return strong_semilattice_of_groups(
          two_level_slg(symmetric_group3(), cyclic_group(2), sign_map()));
    }
    if (name == "slg_z2_z2_id") {
      return strong_semilattice_of_groups(
          two_level_slg(cyclic_group(2), cyclic_group(2), {0, 1}));
    }
    if (name == "slg_z3_z3_id") {
      return strong_semilattice_of_groups(
          two_level_slg(cyclic_group(3), cyclic_group(3), {0, 1, 2}));
    }
    if (name == "slg_s3_s3_id") {
      return strong_semilattice_of_groups(two_level_slg(
          symmetric_group3(), symmetric_group3(), {0, 1, 2, 3, 4, 5}));
    }
    if (name == "slg3_s3_z2_z1") {
      SLGSpec spec{chain(3),
                   {symmetric_group3(), cyclic_group(2), cyclic_group(1)},
                   {}};
      spec.homs.push_back(HomSpec{0, 1, sign_map()});
      spec.homs.push_back(trivial_hom(spec, 0, 2));
      spec.homs.push_back(trivial_hom(spec, 1, 2));
      return strong_semilattice_of_groups(spec);
    }
    if (name.starts_with("slg_")) {
      auto const rest = name.substr(4);
      auto const sep  = rest.find('_');
      if (sep != std::string::npos) {
        auto const top = rest.substr(0, sep), bottom = rest.substr(sep + 1);
        auto const& g  = group_names();
        if (std::find(g.begin(), g.end(), top) != g.end()
            && std::find(g.begin(), g.end(), bottom) != g.end()) {
          return strong_semilattice_of_groups(
              two_level_slg(group(top), group(bottom)));
        }
      }
    }
    if (name.starts_with("c")) {
      if (auto n = suffix_number(name, 1)) {
        return chain(*n);
      }
    }
    if (name.starts_with("z")) {
      if (auto n = suffix_number(name, 1)) {
        return cyclic_group(*n);
      }
    }
    throw Error(ErrorCode::UnknownFixture,
                fmt::format("no builtin semigroup named \"{}\"", name));
  }

  std::vector<std::string> fixture_names() {
    std::vector<std::string> names = {"c1",
                                      "c2",
                                      "c3",
                                      "c4",
                                      "diamond",
                                      "z1",
                                      "z2",
                                      "z3",
                                      "s3",
                                      "cl5",
                                      "b2"};
    for (auto const& top : group_names()) {
      for (auto const& bottom : group_names()) {
        names.push_back(fmt::format("slg_{}_{}", top, bottom));
      }
    }
    for (auto const* extra : {"slg_s3_z2_sign",
                              "slg_z2_z2_id",
                              "slg_z3_z3_id",
                              "slg_s3_s3_id",
                              "slg3_s3_z2_z1"}) {
      names.emplace_back(extra);
    }
    return names;
  }

  std::vector<Fixture> clifford_corpus() {
    std::vector<Fixture> result;
    for (auto const& name : fixture_names()) {
      if (name != "b2" && name != "z1") {
        result.push_back({name, fixture(name)});
      }
    }
    return result;
  }

  std::vector<Fixture> semilattice_corpus() {
    std::vector<Fixture> result;
    for (auto const* name : {"c1", "c2", "c3", "c4", "diamond"}) {
      result.push_back({name, fixture(name)});
    }
    return result;
  }

  std::vector<Fixture> full_corpus() {
    auto result = clifford_corpus();
    result.push_back({"b2", brandt_b2()});
    return result;
  }

}  // namespace crossconn

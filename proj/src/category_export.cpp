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

#include "crossconn/category_export.hpp"

#include <sstream>  // for ostringstream

namespace crossconn {

  using nlohmann::json;

  json to_json(Morphism const& m) {
    return json::array({m.src, m.u, m.dst});
  }

  json to_json(NormalCategory const& C) {
    json objects = json::array();
    for (element_t e : C.objects()) {
      objects.push_back({{"idempotent", e}, {"ideal_size", C.ideal_size(e)}});
    }
    json homs = json::array();
    json inclusions = json::array();
    for (element_t e : C.objects()) {
      for (element_t f : C.objects()) {
        auto const h = C.hom(e, f);
        homs.push_back({{"src", e},
                        {"dst", f},
                        {"u", std::vector<element_t>(h.begin(), h.end())}});
        if (e != f && C.included(e, f)) {
          inclusions.push_back(json::array({e, f}));
        }
      }
    }
    return {{"side", C.side() == Side::left ? "left" : "right"},
            {"base_order", C.base().size()},
            {"objects", objects},
            {"homs", homs},
            {"inclusions", inclusions},
            {"num_morphisms", C.num_morphisms()}};
  }

  std::string to_dot(NormalCategory const& C, std::string const& name) {
    bool const         left = C.side() == Side::left;
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n";
    for (element_t e : C.objects()) {
      out << "  e" << e << " [label=\"" << (left ? "S" : "") << e
          << (left ? "" : "S") << "\\n|" << C.ideal_size(e) << "|\"];\n";
    }
    for (auto const& m : C.morphisms()) {
      bool const inclusion = m.src != m.dst && m.u == m.src;
      out << "  e" << m.src << " -> e" << m.dst << " [label=\""
          << C.base().label(m.u) << "\"" << (inclusion ? ", style=dashed" : "")
          << "];\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace crossconn

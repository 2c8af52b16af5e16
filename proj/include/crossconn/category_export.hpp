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

#ifndef CROSSCONN_CATEGORY_EXPORT_HPP_
#define CROSSCONN_CATEGORY_EXPORT_HPP_

#include <string>  // for string

#include "json.hpp"  // for nlohmann::json

#include "category.hpp"  // for NormalCategory, Morphism

namespace crossconn {

  nlohmann::json to_json(Morphism const& m);
  nlohmann::json to_json(NormalCategory const& C);

  //! Graphviz digraph: one node per object, one edge per morphism labelled
  //! by its translation element, inclusions drawn dashed.
  std::string to_dot(NormalCategory const& C, std::string const& name);

}  // namespace crossconn

#endif  // CROSSCONN_CATEGORY_EXPORT_HPP_

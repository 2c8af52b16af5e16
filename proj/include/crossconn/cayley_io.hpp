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

#ifndef CROSSCONN_CAYLEY_IO_HPP_
#define CROSSCONN_CAYLEY_IO_HPP_

#include <iosfwd>  // for istream, ostream
#include <string>  // for string

#include "semigroup.hpp"  // for FiniteSemigroup

namespace crossconn {

  // Cayley table text format:
  //
  //   n
  //   t00 t01 ... t0(n-1)
  //   ...
  //   t(n-1)0 ... t(n-1)(n-1)
  //   #labels l0 l1 ... l(n-1)      (optional)
  //
  // Entries are separated by single spaces and every line ends in '\n'.
  // Blank lines are ignored on input.

  void            write_cayley(std::ostream& out, FiniteSemigroup const& S);
  std::string     to_cayley_string(FiniteSemigroup const& S);
  FiniteSemigroup read_cayley(std::istream& in);
  FiniteSemigroup read_cayley_string(std::string const& text);
  FiniteSemigroup read_cayley_file(std::string const& path);

}  // namespace crossconn

#endif  // CROSSCONN_CAYLEY_IO_HPP_

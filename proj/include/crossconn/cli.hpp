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

#ifndef CROSSCONN_CLI_HPP_
#define CROSSCONN_CLI_HPP_

#include <iosfwd>  // for ostream
#include <string>  // for string
#include <vector>  // for vector

namespace crossconn {

  //! Process exit codes.
  enum ExitCode : int {
    exit_ok           = 0,
    exit_input_error  = 2,
    exit_budget       = 3,
    exit_verification = 4,
  };

  //! Runs the command line \p args (without the program name).
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

}  // namespace crossconn

#endif  // CROSSCONN_CLI_HPP_

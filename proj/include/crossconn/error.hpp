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

#ifndef CROSSCONN_ERROR_HPP_
#define CROSSCONN_ERROR_HPP_

#include <stdexcept>    // for runtime_error
#include <string>       // for string
#include <string_view>  // for string_view

namespace crossconn {

  enum class ErrorCode {
    ParseError,
    NotClosed,
    NotAssociative,
    NotRegular,
    NotIdempotent,
    NotInHom,
    NotComposable,
    NotIncluded,
    NotInDomain,
    MixedApex,
    ClosureFailed,
    SearchBudgetExceeded,
    EnumerationBudgetExceeded,
    BadSemilattice,
    BadGroup,
    BadHom,
    MissingHom,
    IncoherentHoms,
    NotAnIsomorphism,
    FunctorialityFailed,
    NotASemilattice,
    UnknownFixture,
  };

  std::string_view to_string(ErrorCode code) noexcept;

  //! Every failure raised by the library. what() is "<Code>: <detail>".
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail),
          _code(code),
          _detail(detail) {}

    ErrorCode code() const noexcept {
      return _code;
    }

    std::string const& detail() const noexcept {
      return _detail;
    }

    bool is_budget() const noexcept {
      return _code == ErrorCode::SearchBudgetExceeded
             || _code == ErrorCode::EnumerationBudgetExceeded;
    }

   private:
    ErrorCode   _code;
    std::string _detail;
  };

}  // namespace crossconn

#endif  // CROSSCONN_ERROR_HPP_

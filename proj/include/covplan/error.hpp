/*
 * Copyright 2026  The covplan Authors
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
 * limitations under the License
*/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace covplan {

enum class ErrorCode {
  InvalidGeometry,
  NonConvex,
  InvalidArgument,
  InvalidRoute,
  Radius,
  EmptyMainland,
  NoSwaths,
  Parse,
  Io,
};

/// Stable identifier printed by the CLI, e.g. "E_NONCONVEX".
inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGeometry: return "E_GEOMETRY";
    case ErrorCode::NonConvex: return "E_NONCONVEX";
    case ErrorCode::InvalidArgument: return "E_ARGUMENT";
    case ErrorCode::InvalidRoute: return "E_ROUTE";
    case ErrorCode::Radius: return "E_RADIUS";
    case ErrorCode::EmptyMainland: return "E_EMPTY_MAINLAND";
    case ErrorCode::NoSwaths: return "E_NO_SWATHS";
    case ErrorCode::Parse: return "E_PARSE";
    case ErrorCode::Io: return "E_IO";
  }
  return "E_UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace covplan

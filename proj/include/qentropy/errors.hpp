#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The qentropy Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <stdexcept>
#include <string>
#include <string_view>

namespace qentropy {

enum class ErrorCode
{
  EmptyInput,
  NegativeWeight,
  ZeroMass,
  NotNormalized,
  ShapeMismatch,
  ConditionOnNullEvent,
  EscortUndefined,
  NonPositiveArgument,
  CutoffViolation,
  DomainViolation,
  InvalidParameters,
  NegativeEntropyForDeltaRule,
  OutOfRange,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept
{
  switch (code)
  {
  case ErrorCode::EmptyInput:
    return "EmptyInput";
  case ErrorCode::NegativeWeight:
    return "NegativeWeight";
  case ErrorCode::ZeroMass:
    return "ZeroMass";
  case ErrorCode::NotNormalized:
    return "NotNormalized";
  case ErrorCode::ShapeMismatch:
    return "ShapeMismatch";
  case ErrorCode::ConditionOnNullEvent:
    return "ConditionOnNullEvent";
  case ErrorCode::EscortUndefined:
    return "EscortUndefined";
  case ErrorCode::NonPositiveArgument:
    return "NonPositiveArgument";
  case ErrorCode::CutoffViolation:
    return "CutoffViolation";
  case ErrorCode::DomainViolation:
    return "DomainViolation";
  case ErrorCode::InvalidParameters:
    return "InvalidParameters";
  case ErrorCode::NegativeEntropyForDeltaRule:
    return "NegativeEntropyForDeltaRule";
  case ErrorCode::OutOfRange:
    return "OutOfRange";
  case ErrorCode::ParseError:
    return "ParseError";
  }
  return "Unknown";
}

/// Single exception type for the library; the code identifies the failure.
class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, std::string const &what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what)
    , code_(code)
  {}

  ErrorCode code() const noexcept
  {
    return code_;
  }

  /// True for failures caused by bad parameters rather than bad input data.
  bool is_parameter_error() const noexcept
  {
    return code_ == ErrorCode::InvalidParameters || code_ == ErrorCode::CutoffViolation ||
           code_ == ErrorCode::DomainViolation || code_ == ErrorCode::OutOfRange ||
           code_ == ErrorCode::EscortUndefined || code_ == ErrorCode::NegativeEntropyForDeltaRule;
  }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, std::string const &what)
{
  throw Error(code, what);
}

}  // namespace qentropy

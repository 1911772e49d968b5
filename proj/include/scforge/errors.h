// Copyright 2026 The scforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCFORGE_ERRORS_H_
#define SCFORGE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace scforge {

// Base of every error raised by the toolkit. The CLI maps subclasses to exit
// codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(int line, int col, const std::string& expected,
              const std::string& found)
      : Error(std::to_string(line) + ":" + std::to_string(col) +
              ": expected " + expected + ", found " + found),
        line_(line),
        col_(col),
        expected_(expected) {}

  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& expected() const { return expected_; }

 private:
  int line_;
  int col_;
  std::string expected_;
};

class LexError : public Error {
 public:
  LexError(int line, int col, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + what),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

#define SCFORGE_DEFINE_ERROR(Name) \
  class Name : public Error {      \
   public:                         \
    using Error::Error;            \
  }

SCFORGE_DEFINE_ERROR(ReservedIdentifier);
SCFORGE_DEFINE_ERROR(UnboundVariable);
SCFORGE_DEFINE_ERROR(ConflictingValuation);
SCFORGE_DEFINE_ERROR(ActionConditionViolated);
SCFORGE_DEFINE_ERROR(TypeMismatch);
SCFORGE_DEFINE_ERROR(BindingStale);
SCFORGE_DEFINE_ERROR(NonTermination);
SCFORGE_DEFINE_ERROR(IllFormedInput);
SCFORGE_DEFINE_ERROR(NotSimplifiable);
SCFORGE_DEFINE_ERROR(BadInitialState);
SCFORGE_DEFINE_ERROR(UnknownTargetName);
SCFORGE_DEFINE_ERROR(NotGuardFree);
SCFORGE_DEFINE_ERROR(UnboundedValueDomain);
SCFORGE_DEFINE_ERROR(StateSpaceBound);
SCFORGE_DEFINE_ERROR(IncompleteProjection);
SCFORGE_DEFINE_ERROR(UnknownObject);
SCFORGE_DEFINE_ERROR(FormatError);

#undef SCFORGE_DEFINE_ERROR

}  // namespace scforge

#endif  // SCFORGE_ERRORS_H_

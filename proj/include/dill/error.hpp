// Copyright 2026 The dill Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DILL_ERROR_HPP
#define DILL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dill {

// Every failure raised by the library derives from Error. The kind string is
// stable and used by the command line front end and by tests.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

#define DILL_ERROR_KIND(Name)                                   \
  class Name : public Error {                                   \
  public:                                                       \
    explicit Name(const std::string& message)                   \
        : Error(#Name, message) {}                              \
  };

DILL_ERROR_KIND(SubsetViolation)
DILL_ERROR_KIND(MarginalMismatch)
DILL_ERROR_KIND(ModeViolation)
DILL_ERROR_KIND(NegativeCoefficient)
DILL_ERROR_KIND(NotLinear)
DILL_ERROR_KIND(MalformedNet)
DILL_ERROR_KIND(RuleViolation)
DILL_ERROR_KIND(NotARedex)
DILL_ERROR_KIND(SideConditionBlocked)
DILL_ERROR_KIND(UnknownAtom)
DILL_ERROR_KIND(WebMismatch)
DILL_ERROR_KIND(SymmetryViolation)
DILL_ERROR_KIND(NotLinearInH)
DILL_ERROR_KIND(DegreeExceedsBound)
DILL_ERROR_KIND(UsageError)
DILL_ERROR_KIND(NotDerivable)
DILL_ERROR_KIND(BudgetExceeded)

#undef DILL_ERROR_KIND

class ParseError : public Error {
public:
  ParseError(int line, int column, const std::string& message)
      : Error("ParseError", std::to_string(line) + ":" +
                                std::to_string(column) + ": " + message),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace dill

#endif

// Copyright 2026 The tpg authors
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

#ifndef TPG_ERRORS_HPP
#define TPG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tpg {

/// Input text could not be parsed. Carries the 1-based physical line number.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// An exhaustive search or oracle would exceed its configured budget, or an
/// input is too large for the pseudo-polynomial path. Never a wrong answer.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& message) : std::runtime_error(message) {}
};

/// The requested operation is outside the regime the construction covers.
class unsupported_error : public std::runtime_error {
 public:
  explicit unsupported_error(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace tpg

#endif  // TPG_ERRORS_HPP

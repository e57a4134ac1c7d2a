// Copyright 2026 The gbd Authors.
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

#ifndef GBD_ERRORS_H_
#define GBD_ERRORS_H_

#include <stdexcept>
#include <string>

namespace gbd {

// Inconsistent vector or matrix sizes in a problem or function argument.
class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what)
      : std::invalid_argument("dimension mismatch: " + what) {}
};

// The simplex basis became singular and could not be repaired.
class NumericalBreakdown : public std::runtime_error {
 public:
  explicit NumericalBreakdown(const std::string& what)
      : std::runtime_error("numerical breakdown: " + what) {}
};

// An operation that needs an optimal certificate was handed something else.
class NotOptimal : public std::logic_error {
 public:
  explicit NotOptimal(const std::string& what)
      : std::logic_error("not optimal: " + what) {}
};

class EmptyTree : public std::logic_error {
 public:
  explicit EmptyTree(const std::string& what)
      : std::logic_error("empty tree: " + what) {}
};

class BadRange : public std::invalid_argument {
 public:
  explicit BadRange(const std::string& what)
      : std::invalid_argument("bad range: " + what) {}
};

// Malformed instance data: schema violations, failed validation, parse
// errors. `field` names the offending JSON field when known.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& field, const std::string& what)
      : std::runtime_error(field.empty() ? what : field + ": " + what),
        field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class BoxTooLarge : public std::runtime_error {
 public:
  explicit BoxTooLarge(const std::string& what)
      : std::runtime_error("box too large: " + what) {}
};

}  // namespace gbd

#endif  // GBD_ERRORS_H_

// Copyright 2026 The Orlicz Toolkit Authors
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

#ifndef ORLICZ_ERRORS_HPP_
#define ORLICZ_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace orlicz {

// kPrecondition covers violated inputs and failed hypotheses (CLI exit 2).
// kInternal covers broken invariants that indicate a bug (CLI exit 1).
enum class ErrorClass { kPrecondition, kInternal };

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, std::string kind, const std::string& detail)
      : std::runtime_error(detail), class_(cls), kind_(std::move(kind)) {}

  ErrorClass error_class() const { return class_; }
  // Machine-readable tag, e.g. "range", "eq11-sup-finite".
  const std::string& kind() const { return kind_; }

 private:
  ErrorClass class_;
  std::string kind_;
};

inline Error PreconditionError(std::string kind, const std::string& detail) {
  return Error(ErrorClass::kPrecondition, std::move(kind), detail);
}

inline Error RangeError(const std::string& detail) {
  return Error(ErrorClass::kPrecondition, "range", detail);
}

inline Error InternalError(std::string kind, const std::string& detail) {
  return Error(ErrorClass::kInternal, std::move(kind), detail);
}

}  // namespace orlicz

#endif  // ORLICZ_ERRORS_HPP_

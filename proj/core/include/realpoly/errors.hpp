/*
   Copyright 2026 the realpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef REALPOLY_ERRORS_HPP
#define REALPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace realpoly {

/// Base class for all realpoly-specific failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// The a_{n-2} < 0 gate of the all-real-roots builder was violated.
class GateViolationError : public PreconditionError {
 public:
  explicit GateViolationError(const std::string& what) : PreconditionError(what) {}
};

/// A bracket or enclosure handed in as a certificate does not certify
/// what it claims (e.g. an interval said to isolate one root isolates
/// zero or several).
class CertificateError : public Error {
 public:
  explicit CertificateError(const std::string& what) : Error(what) {}
};

/// choose_coefficient was asked to pick from an empty interval.
class NoAdmissibleChoiceError : public Error {
 public:
  explicit NoAdmissibleChoiceError(const std::string& what) : Error(what) {}
};

/// The recursive builder hit a certified-empty (or point) interval at
/// some stage. `stage` is the degree being built when it failed.
class ConstructionFailedError : public Error {
 public:
  ConstructionFailedError(const std::string& what, int stage)
      : Error(what), stage_(stage) {}
  int stage() const noexcept { return stage_; }

 private:
  int stage_;
};

}  // namespace realpoly

#endif  // REALPOLY_ERRORS_HPP

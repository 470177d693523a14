// Copyright 2026 The mhgr Authors
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

#ifndef MHGR_ERROR_HPP_
#define MHGR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace mhgr {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad indices, violated preconditions, parse failures.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A size cap (vertices, group order, search space) would be exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An exhaustive search that is guaranteed to succeed under its precondition
// came back empty, i.e. the precondition did not hold.
class NotFound : public Error {
 public:
  using Error::Error;
};

// A transcribed construction failed a mechanical check it is documented to
// satisfy (set sizes, valency pattern, automorphism order). Never patched
// silently; the message names the construction and the failed clause.
class DiscrepancyError : public Error {
 public:
  explicit DiscrepancyError(const std::string& what)
      : Error("DISCREPANCY: " + what) {}
};

// A produced witness did not survive independent re-verification.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace mhgr

#endif  // MHGR_ERROR_HPP_

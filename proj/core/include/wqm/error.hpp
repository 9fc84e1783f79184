// Copyright 2026 The wqm Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace wqm {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filter order outside the tabulated set, or an order too rough for the
// requested operation (derivatives need K = 3).
class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

// An eigen-subspace that should be one-dimensional is not. Signals a broken
// filter bank rather than a user error.
class DegenerateSubspace : public Error {
 public:
  using Error::Error;
};

// Arguments violate an operation's precondition (negative depth, refining
// below an element's own scale, mismatched tables, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

// Iterative eigensolver hit its sweep cap.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

}  // namespace wqm

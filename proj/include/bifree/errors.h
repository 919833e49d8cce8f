// Copyright 2026 The bifree Authors
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

#ifndef BIFREE_ERRORS_H
#define BIFREE_ERRORS_H

#include <stdexcept>
#include <string>

namespace bifree {

/// Malformed or inconsistent arguments (size mismatch, wrong family, bad text form).
class ArgumentError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A computation needs more moment/cumulant orders than were supplied.
class InsufficientDataError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A request exceeds a configured size bound; the message names the bound.
class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace bifree

#endif

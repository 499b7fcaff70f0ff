// Copyright 2026 The Parley Authors
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

#ifndef PARLEY_ERROR_HPP_
#define PARLEY_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace parley {

/// Base for all parley exceptions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input document (survey file, distribution file, model output).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input violates a documented invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Network / remote-service failure after retries were exhausted.
class TransportError : public Error {
 public:
  using Error::Error;
};

/// Remote service rejected the request (auth, 4xx, field errors).
class ServiceError : public Error {
 public:
  using Error::Error;
};

/// Looked-up entity does not exist (e.g. unknown call id).
class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Remote payload contradicts itself (e.g. completed call, no transcript)
/// or an observed state transition is illegal.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure while persisting artifacts.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace parley

#endif  // PARLEY_ERROR_HPP_

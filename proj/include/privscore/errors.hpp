// Copyright 2026 The PrivScore Authors
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

#ifndef PRIVSCORE_ERRORS_HPP_
#define PRIVSCORE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace privscore {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A value does not fit the requested fixed-point encoding.
class RangeError : public Error {
 public:
  explicit RangeError(const std::string& msg) : Error(msg) {}
};

// Mismatched vector widths, feature counts, or input bit counts.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// Structurally invalid model, circuit, or file content.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& msg) : Error(msg) {}
};

// An argument violates a documented precondition.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// The threshold mechanism has answered its k-th query already.
class BudgetExhausted : public Error {
 public:
  explicit BudgetExhausted(const std::string& msg) : Error(msg) {}
};

// The parameter solver could not bracket a solution.
class NoSolutionError : public Error {
 public:
  explicit NoSolutionError(const std::string& msg) : Error(msg) {}
};

// Session setup failed: session id, party id, or circuit hash mismatch.
class HandshakeError : public Error {
 public:
  explicit HandshakeError(const std::string& msg) : Error(msg) {}
};

// A link failed or delivered a malformed or out-of-order frame.
class TransportError : public Error {
 public:
  explicit TransportError(const std::string& msg) : Error(msg) {}
};

// Protocol-level inconsistency, e.g. mismatched replicated components.
class ProtocolError : public Error {
 public:
  explicit ProtocolError(const std::string& msg) : Error(msg) {}
};

}  // namespace privscore

#endif  // PRIVSCORE_ERRORS_HPP_

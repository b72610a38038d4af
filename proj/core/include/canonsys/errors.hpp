/*
 * Copyright 2026 The canonsys Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>

namespace canonsys {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed literal, JSON document, or group reference.
struct ParseError : Error {
  using Error::Error;
};

/// Operands live in different ambient dimensions (variable counts, sizes).
struct DimensionMismatch : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

/// An arithmetic step would need a cyclotomic field beyond the configured cap.
struct ConductorCapExceeded : Error {
  using Error::Error;
};

/// Group closure grew past the requested element cap.
struct ClosureCapExceeded : Error {
  using Error::Error;
};

struct NotUnitary : Error {
  using Error::Error;
};

/// Raised only when strict irreducibility checking is requested.
struct ReducibleGroup : Error {
  using Error::Error;
};

/// Invariant-degree bookkeeping failed; the input is not a reflection group.
struct NotReflectionGroup : Error {
  using Error::Error;
};

/// Basic-invariant generation exhausted its retry budget.
struct GenerationFailure : Error {
  using Error::Error;
};

/// A candidate polynomial vanished or the candidate set is dependent.
struct DegenerateCandidate : Error {
  using Error::Error;
};

/// Gram-Schmidt met a zero vector inside an equal-degree block.
struct ZeroVectorInBlock : Error {
  using Error::Error;
};

/// A theory-guaranteed identity failed; indicates a bug, not bad input.
struct InternalInconsistency : Error {
  using Error::Error;
};

}  // namespace canonsys

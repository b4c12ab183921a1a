// Copyright 2026 The qweyl authors
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

#ifndef QWEYL_ERRORS_HPP
#define QWEYL_ERRORS_HPP

#include <stdexcept>

namespace qweyl {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input matrix fails the unitarity check.
struct NotUnitary : Error {
  using Error::Error;
};

/// Matrix exponential input is not antihermitian.
struct BadGenerator : Error {
  using Error::Error;
};

/// Matrix dimension or qubit count outside the supported range.
struct BadDim : Error {
  using Error::Error;
};

/// Malformed gate specification (missing or extraneous parameters).
struct BadSpec : Error {
  using Error::Error;
};

/// Tensor-product factor is not a 2x2 special unitary.
struct BadFactor : Error {
  using Error::Error;
};

/// The G2 invariant came out with a non-negligible imaginary part,
/// which signals a numerically non-unitary input.
struct ImaginaryG2 : Error {
  using Error::Error;
};

/// A W-matrix entry came out with a non-negligible imaginary part.
struct ImaginaryW : Error {
  using Error::Error;
};

/// No eigenphase assignment reproduces the gate's Makhlin invariants.
struct NoConsistentAssignment : Error {
  using Error::Error;
};

/// Canonical parameters were expected in reduced (Weyl-chamber) form.
struct NotReduced : Error {
  using Error::Error;
};

/// Weyl reduction exceeded its iteration bound.
struct ReductionDiverged : Error {
  using Error::Error;
};

/// eta = 0: the gate commutes with every local family and admits no
/// finite gate-count lower bound.
struct UnboundedGate : Error {
  using Error::Error;
};

/// Gate file could not be parsed against the expected schema.
struct FileFormatError : Error {
  using Error::Error;
};

}  // namespace qweyl

#endif  // QWEYL_ERRORS_HPP

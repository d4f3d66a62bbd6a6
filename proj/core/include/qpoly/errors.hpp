// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#pragma once

#include <stdexcept>
#include <string>

namespace qpoly {

// Every failure raised by the library derives from Error so callers can map
// the subclass onto an exit code without string matching.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A claimed exact division left a remainder.
struct NotDivisible : Error {
    using Error::Error;
};

// A parameter substitution hit a pole that could not be cancelled.
struct DenominatorVanishes : Error {
    using Error::Error;
};

// Input to an expansion or operator is not invariant under the declared group.
struct NotInvariant : Error {
    using Error::Error;
};

// Two eigenvalues collide during triangular back-substitution.
struct ZeroDenominator : Error {
    using Error::Error;
};

// Gram-Schmidt met a vanishing norm.
struct DegenerateNorm : Error {
    using Error::Error;
};

// An operator image is not proportional to its input.
struct NotEigenfunction : Error {
    using Error::Error;
};

// A precondition on the arguments was violated.
struct ContractViolation : Error {
    using Error::Error;
};

// Malformed textual input (ParamRat strings, weights, JSON payloads).
struct ParseError : Error {
    using Error::Error;
};

} // namespace qpoly

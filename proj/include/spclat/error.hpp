//  Copyright 2026 The spclat authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace spclat {

// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed user input: bad schema, duplicate labels, unknown labels,
// relations that fail to be a lattice, unsaturated sets, and the like.
struct InvalidInput : Error {
  using Error::Error;
};

// The transitive closure of a claimed order relation identified two
// distinct labels (antisymmetry failure).
struct CycleDetected : InvalidInput {
  using InvalidInput::InvalidInput;
};

// A pair of a claimed join-semilattice has no least upper bound.
struct NoJoin : InvalidInput {
  using InvalidInput::InvalidInput;
};

// A claimed join-semilattice has no least element.
struct NoBottom : InvalidInput {
  using InvalidInput::InvalidInput;
};

// An element required to lie in the positive cone does not.
struct NotInCone : InvalidInput {
  using InvalidInput::InvalidInput;
};

// A construction would exceed a hard size cap (e.g. closing a set of
// subsets past 2^16 members). Raising the cap is the only remedy.
struct CapacityExceeded : Error {
  using Error::Error;
};

// An exhaustive search was asked to run past its configured bound.
struct SizeGuard : Error {
  using Error::Error;
};

// A bounded cone search could neither confirm nor refute a query.
// The message names the offending query. Honest indecision, not a bug.
struct Inconclusive : Error {
  using Error::Error;
};

// A join required by a theorem hypothesis does not exist (or could not
// be certified) inside the search box.
struct JoinsMissing : Error {
  using Error::Error;
};

}  // namespace spclat

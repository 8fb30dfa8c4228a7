//
// Project TreeDock - Copyright 2026 TreeDock Contributors
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <stdexcept>
#include <string>

namespace treedock {

// Base of every error thrown by the library. CLI maps these to exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define TREEDOCK_ERROR(Name) \
  struct Name : Error {      \
    using Error::Error;      \
  };

// geom
TREEDOCK_ERROR(DegenerateInput)

// data
TREEDOCK_ERROR(InvalidSequence)
TREEDOCK_ERROR(GenerationFailed)
TREEDOCK_ERROR(ParseError)
TREEDOCK_ERROR(SchemaError)

// env
TREEDOCK_ERROR(EpisodeFinished)
TREEDOCK_ERROR(EpisodeUnfinished)
TREEDOCK_ERROR(IllegalAction)
TREEDOCK_ERROR(MissingDimer)

// nn
TREEDOCK_ERROR(ShapeMismatch)
TREEDOCK_ERROR(IndexOutOfRange)
TREEDOCK_ERROR(KeyMismatch)

// adversary / trainer
TREEDOCK_ERROR(EmptyBatch)
TREEDOCK_ERROR(NonFiniteLoss)
TREEDOCK_ERROR(IncompatibleCheckpoint)

// search
TREEDOCK_ERROR(DomainError)
TREEDOCK_ERROR(TooLarge)

#undef TREEDOCK_ERROR

}  // namespace treedock

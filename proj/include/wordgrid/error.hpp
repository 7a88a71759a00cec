//
// wordgrid/error.hpp
//
// Copyright 2026 the wordgrid authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
//

#pragma once
#include <stdexcept>
#include <string>

namespace wordgrid {

/// Base class of everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numeric input outside its documented domain (bad coordinates, box indices
/// out of range, invalid parameters). Caller-input class: the CLI maps these
/// to its usage exit code.
class RangeError : public Error {
public:
    using Error::Error;
};

/// A word or address that does not exist in the active word list / layout.
/// Caller-input class, like RangeError.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Invalid configuration: non-invertible congruence multiplier, overlapping
/// cell offsets, malformed config file, empty word list after filtering.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Failure while reading a data file (missing file, malformed record).
class IngestError : public Error {
public:
    using Error::Error;
};

/// The encoding pipeline produced a value it cannot represent as words
/// (an index value m at or beyond band_size^3).
class CodecError : public Error {
public:
    using Error::Error;
};

} // namespace wordgrid

// Copyright 2026 The Janus Metrology Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace janus {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// The two constituents of a span are (numerically) linearly dependent, so
/// the span is one-dimensional and the two-state optimization is undefined.
class DegenerateSpanError : public Error {
  public:
    using Error::Error;
};

/// The truncated Fock representation cannot reach the tail threshold below
/// the configured hard cutoff.
class CutoffError : public Error {
  public:
    using Error::Error;
};

} // namespace janus

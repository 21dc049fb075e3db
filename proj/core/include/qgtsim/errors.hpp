// Copyright 2026 The qgtsim Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qgtsim {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix failed a structural precondition (Hermiticity, rank, PSD, ...).
class LinalgError : public Error {
 public:
  using Error::Error;
};

/// Exponentials whose exponent exceeds the double range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// The Hamiltonian is gapless (|d| below threshold) at the requested point.
class GaplessPointError : public Error {
 public:
  using Error::Error;
};

/// No (or too few) shots survived ancilla post-selection.
class PostSelectionError : public Error {
 public:
  using Error::Error;
};

/// Invalid user configuration or malformed input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace qgtsim

// Copyright 2026 The sympdd Authors
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

namespace sympdd {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
 public:
  using Error::Error;
};

/// Non-finite or otherwise malformed numeric input.
class NumericInputError : public Error {
 public:
  using Error::Error;
};

/// Matrix paired with a symplectic form of the other basis layout.
class BasisError : public Error {
 public:
  using Error::Error;
};

/// Asymmetric, indefinite or badly shaped model input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A finite group too large to be listed; callers should sample instead.
class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

/// Graph or cycle that violates a structural precondition.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sympdd

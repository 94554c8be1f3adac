// Copyright 2026 The qdyn Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qdyn {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state or operator has the wrong dimension for the requested operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// Input violates a Ket or DensityMatrix invariant (normalization, trace,
/// Hermiticity, positivity, finiteness).
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

class InvalidOverlapError : public Error {
 public:
  using Error::Error;
};

class GeometryError : public Error {
 public:
  using Error::Error;
};

/// A parameter lies outside the domain of the function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Integration step too coarse for the frequencies or rates involved.
class StepSizeError : public Error {
 public:
  using Error::Error;
};

/// Sample grid cannot resolve the signal (Nyquist violation).
class SamplingError : public Error {
 public:
  using Error::Error;
};

/// A trajectory left the set of physical states during integration.
class NumericalInstabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace qdyn

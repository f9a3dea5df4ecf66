/* Copyright 2026-present the bitnic authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace bitnic {

// Base of the library's error hierarchy. The CLI maps any Error to exit
// code 2; usage errors are handled by the argument parser and exit with 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameter or configuration value (bad block size, bad profile, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Shape mismatch between a model and its input, or between chained layers.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed serialized artifact (model file, profile JSON, CSV, ...).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Target resources are insufficient to lower a model.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A model does not fit the selected memory area.
class PlacementError : public Error {
 public:
  using Error::Error;
};

// A lowered program is self-inconsistent (read-before-write, field
// overflow); indicates a compiler bug rather than a user mistake.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Malformed or out-of-contract input data (dataset rows, packet traces).
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace bitnic

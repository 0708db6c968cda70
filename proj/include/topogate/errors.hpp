// Copyright 2026 The Topogate Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace topogate {

/// Base class for every domain error thrown by the library. Constructor
/// preconditions (bad sizes, non-finite numbers, broken invariants) throw
/// std::invalid_argument instead.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A query point lies on (or within tolerance of) a 2D path segment.
class PointOnPath : public Error {
  public:
    explicit PointOnPath(const std::string& msg, std::size_t index = 0)
        : Error(msg), index_(index) {}
    /// Index of the offending puncture in a bulk query; 0 for scalar queries.
    std::size_t index() const { return index_; }

  private:
    std::size_t index_;
};

/// The apex of a solid-angle query lies on a 3D path segment.
class ApexOnPath : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

/// A move path passes closer to an occupied or occupiable site than the
/// register clearance allows.
class ClearanceViolation : public Error {
  public:
    using Error::Error;
};

class InvalidQubit : public Error {
  public:
    using Error::Error;
};

/// No loop satisfying the winding and clearance requirements exists for the
/// register layout.
class LayoutInfeasible : public Error {
  public:
    using Error::Error;
};

class SameQubit : public Error {
  public:
    using Error::Error;
};

/// A requested phase is not an integer multiple of the register base phase
/// within the search bound.
class IncommensuratePhase : public Error {
  public:
    using Error::Error;
};

/// A spin segment breaks the structural constraint of its architecture.
class ArchitectureViolation : public Error {
  public:
    using Error::Error;
};

class ZeroCoupling : public Error {
  public:
    using Error::Error;
};

/// The backend cannot realize the requested gate kind.
class UnsupportedGate : public Error {
  public:
    using Error::Error;
};

class TooLarge : public Error {
  public:
    using Error::Error;
};

} // namespace topogate

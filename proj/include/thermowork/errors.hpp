// Copyright 2026 The thermowork Authors
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

namespace thermowork {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define THERMOWORK_DEFINE_ERROR(Name)        \
  class Name : public Error {                \
   public:                                   \
    explicit Name(const std::string& what)   \
        : Error(#Name ": " + what) {}        \
  }

THERMOWORK_DEFINE_ERROR(NonSquare);
THERMOWORK_DEFINE_ERROR(NonHermitian);
THERMOWORK_DEFINE_ERROR(DimensionMismatch);
THERMOWORK_DEFINE_ERROR(NegativeEigenvalue);
THERMOWORK_DEFINE_ERROR(InvalidState);
THERMOWORK_DEFINE_ERROR(InvalidBeta);
THERMOWORK_DEFINE_ERROR(InvalidRank);
THERMOWORK_DEFINE_ERROR(InvalidDistribution);
THERMOWORK_DEFINE_ERROR(InvalidPovm);
THERMOWORK_DEFINE_ERROR(WrongDimension);
THERMOWORK_DEFINE_ERROR(NotPure);
THERMOWORK_DEFINE_ERROR(LambdaOutOfRange);
THERMOWORK_DEFINE_ERROR(DimensionTooLarge);

#undef THERMOWORK_DEFINE_ERROR

}  // namespace thermowork

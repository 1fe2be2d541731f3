// Copyright 2026 The fglog Authors.
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

#ifndef FGLOG_ERRORS_HPP
#define FGLOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fglog {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FGLOG_DEFINE_ERROR(Name)           \
  class Name : public Error {              \
   public:                                 \
    explicit Name(const std::string &what) \
        : Error(#Name ": " + what) {}      \
  }

// Input and structure errors.
FGLOG_DEFINE_ERROR(SpecError);
FGLOG_DEFINE_ERROR(ParseError);
FGLOG_DEFINE_ERROR(DegreeOverflow);
FGLOG_DEFINE_ERROR(AlgebraMismatch);
FGLOG_DEFINE_ERROR(ArityMismatch);
FGLOG_DEFINE_ERROR(ShapeMismatch);

// Series preconditions.
FGLOG_DEFINE_ERROR(NonNilpotentConstantTerm);
FGLOG_DEFINE_ERROR(NonInvertibleConstantTerm);
FGLOG_DEFINE_ERROR(NonZeroConstantTerm);

// Raised when the truncation pair (N, D) cannot certify a requested identity.
FGLOG_DEFINE_ERROR(TruncationInsufficient);

// Mathematical violations.
FGLOG_DEFINE_ERROR(ResidualNonConstant);
FGLOG_DEFINE_ERROR(CocycleViolation);
FGLOG_DEFINE_ERROR(AxiomViolation);
FGLOG_DEFINE_ERROR(NoInverse);
FGLOG_DEFINE_ERROR(NotAugmented);

#undef FGLOG_DEFINE_ERROR

}  // namespace fglog

#endif  // FGLOG_ERRORS_HPP

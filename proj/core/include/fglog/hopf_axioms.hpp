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

#ifndef FGLOG_HOPF_AXIOMS_HPP
#define FGLOG_HOPF_AXIOMS_HPP

#include <string>

#include "fglog/hopf_algebra.hpp"

namespace fglog {

struct HopfAxiomReport {
  bool pass = true;
  std::string axiom;     // empty on pass
  std::string monomial;  // first failing basis monomial, e.g. "t^2"
  std::string detail;
};

// Checks, for every basis monomial in graded order: connectedness,
// coassociativity, counit, commutativity, multiplicativity of Δ and ε, and
// both antipode identities. Stops at the first failure.
HopfAxiomReport verify_hopf_axioms(const AlgebraPtr &alg);

}  // namespace fglog

#endif  // FGLOG_HOPF_AXIOMS_HPP

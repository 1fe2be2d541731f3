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

#ifndef FGLOG_FORMAL_GROUP_HPP
#define FGLOG_FORMAL_GROUP_HPP

#include <string>
#include <vector>

#include "fglog/series.hpp"
#include "fglog/tensor.hpp"

namespace fglog {

// F(X, Y) with X = x⊗1 and Y = 1⊗x: a two-variable series with arity-2
// coefficients. Construction checks only the shape and that the constant
// term is killed by ε⊗ε; the axioms are checked by check_axioms.
class FormalGroupLaw {
 public:
  explicit FormalGroupLaw(Series f);

  [[nodiscard]] const Series &series() const { return f_; }
  [[nodiscard]] const AlgebraPtr &algebra() const { return f_.algebra(); }
  [[nodiscard]] int order() const { return f_.order(); }

  friend bool operator==(const FormalGroupLaw &a, const FormalGroupLaw &b) {
    return a.f_ == b.f_;
  }

 private:
  Series f_;
};

// A cobar 2-cocycle c in H⊗H. The constructor enforces both conditions and
// throws CocycleViolation otherwise.
class Cocycle {
 public:
  explicit Cocycle(TensorElement c);

  [[nodiscard]] const TensorElement &element() const { return c_; }
  [[nodiscard]] const AlgebraPtr &algebra() const { return c_.algebra(); }

  friend bool operator==(const Cocycle &a, const Cocycle &b) { return a.c_ == b.c_; }

 private:
  TensorElement c_;
};

// g(x) = b0 x + b1 x^2 + ... over H with ε(b0) = 1.
class Logarithm {
 public:
  explicit Logarithm(Series g);

  [[nodiscard]] const Series &series() const { return g_; }
  [[nodiscard]] const AlgebraPtr &algebra() const { return g_.algebra(); }
  [[nodiscard]] int order() const { return g_.order(); }

  friend bool operator==(const Logarithm &a, const Logarithm &b) { return a.g_ == b.g_; }

 private:
  Series g_;
};

struct Violation {
  std::string axiom;
  Series defect;
};

struct Report {
  bool pass = true;
  std::vector<Violation> violations;
  // Highest variable order through which every defect is certified
  // (Series::exact_order), or kExact when nothing was compared.
  int certified_order = kExact;
};

// Axiom names used in reports.
namespace axiom {
inline constexpr const char *kUnitRight = "unit-right";        // (id⊗ε̃)F - X
inline constexpr const char *kUnitLeft = "unit-left";          // (ε̃⊗id)F - Y
inline constexpr const char *kSymmetry = "symmetry";
inline constexpr const char *kAssociativity = "associativity";
inline constexpr const char *kCocycle = "cocycle";             // condition (i)
inline constexpr const char *kCounitRight = "counit-right";    // (id⊗ε)c
inline constexpr const char *kCounitLeft = "counit-left";      // (ε⊗id)c
inline constexpr const char *kLogEquation = "log-equation";
inline constexpr const char *kDifferential = "differential";
inline constexpr const char *kInverse = "inverse";
inline constexpr const char *kClassicalLog = "classical-log";
}  // namespace axiom

// Unit, symmetry and associativity. Associativity is checked in H⊗H⊗H as
// ((id⊗Δ)F)(X, F(Y,Z)) - ((Δ⊗id)F)(F(X,Y), Z). Defects are nonzero only in
// certified degrees; when every defect vanishes but some order below N is
// not certified, throws TruncationInsufficient.
Report check_axioms(const FormalGroupLaw &F);

// ω̃(x) = (id⊗ε̃) ∂F/∂Y.
Series invariant_differential(const FormalGroupLaw &F);
// g = ∫ dx / ω̃(x).
Logarithm logarithm(const FormalGroupLaw &F);

// G = (Δg)(F) - (g⊗1)(X) - (1⊗g)(Y) must be a constant c.
// ResidualNonConstant when it is not; CocycleViolation when c is not a
// cocycle; TruncationInsufficient when c is not certified.
Cocycle extract_cocycle(const FormalGroupLaw &F, const Logarithm &g);

// (id⊗Δ)c + 1⊗c - (Δ⊗id)c - c⊗1 together with both one-sided counits.
// Defects are reported as constant series.
Report check_cocycle(const TensorElement &c);
// The defect of condition (i) alone.
TensorElement cocycle_defect(const TensorElement &c);

// c + X + Y.
FormalGroupLaw additive_cocycle_group(const Cocycle &c, int order);
FormalGroupLaw additive_cocycle_group(const TensorElement &c, int order);

// True when F = c + X + Y for some constant c.
bool is_additive_cocycle_form(const FormalGroupLaw &F);
// Θ(x) = -(μ∘(id⊗S))c - x.
Series additive_cocycle_inverse(const TensorElement &c, int order);
// Θ with ((μ∘(id⊗S))F)(x, Θ(x)) = 0, by the closed formula for c + X + Y
// and by a coefficient-wise solve otherwise. Verified before return;
// throws NoInverse when no solution is found.
Series inverse_series(const FormalGroupLaw &F);
// ((μ∘(id⊗S))F)(x, Θ(x)).
Series inverse_residual(const FormalGroupLaw &F, const Series &theta);

// F = (Δg)^{-1}(c + (g⊗1)(X) + (1⊗g)(Y)), checked with check_axioms before
// return; AxiomViolation when the result is not a formal group law.
FormalGroupLaw reconstruct(const Logarithm &g, const Cocycle &c);
// The same series without the final axiom check.
Series reconstruct_series(const Logarithm &g, const TensorElement &c);

// (Δg)(F) = c + (g⊗1)(X) + (1⊗g)(Y).
Report verify_log_equation(const FormalGroupLaw &F, const Logarithm &g, const Cocycle &c);
Report verify_log_equation(const FormalGroupLaw &F, const Logarithm &g,
                           const TensorElement &c);

// (Δω̃)(F(X,Y)) = ∂F/∂Y · (1⊗ω̃)(Y). The derivative loses one order, so
// only orders below N need to be certified.
Report verify_differential_equation(const FormalGroupLaw &F);

struct ClassicalSpecialization {
  Series law;        // (ε⊗ε)F: two variables, coefficients multiples of 1
  Series logarithm;  // εg: one variable
  Report identity;   // (εg)(F_cl(x,y)) = (εg)(x) + (εg)(y)
};
ClassicalSpecialization specialize_classical(const FormalGroupLaw &F, const Logarithm &g);

// dh = Δh - h⊗1 - 1⊗h; NotAugmented unless ε(h) = 0.
Cocycle coboundary(const HopfElement &h);

}  // namespace fglog

#endif  // FGLOG_FORMAL_GROUP_HPP

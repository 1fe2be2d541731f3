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

#ifndef FGLOG_SERIES_HPP
#define FGLOG_SERIES_HPP

#include <array>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

#include "fglog/tensor.hpp"

namespace fglog {

// Dense index of exponent vectors of total degree <= order in nvars
// variables, in graded order: total degree ascending, then lexicographically
// descending (X before Y before Z). Shared and immutable.
struct SeriesLayout {
  int nvars = 1;
  int order = 0;
  std::vector<std::array<int, 3>> exps;
  std::vector<int> total;        // total degree per index
  std::vector<int> order_begin;  // first index of each total degree, plus end
  std::vector<int> lookup;       // mixed radix (order+1)^nvars -> index or -1

  [[nodiscard]] int size() const { return static_cast<int>(exps.size()); }
  [[nodiscard]] int index(const std::array<int, 3> &e) const;

  static std::shared_ptr<const SeriesLayout> get(int nvars, int order);
};

// Truncated power series in 1-3 variables with TensorElement coefficients of
// a fixed arity, stored densely by exponent and sparsely by coefficient.
//
// Alongside its terms a series carries an exactness profile: for each
// variable order j <= N the highest total H-degree e(j) in which the stored
// order-j terms are certified, and a tail value covering the unstored
// orders above N. kExact means "every degree", kUnknown means "nothing".
// The profile is non-increasing in j and terms above it are pruned, so
// truncation artifacts never masquerade as results. A second, lower profile
// records how far each order survives a coproduct (see
// TensorElement::stable_degree); map_slot with Δ turns it into exactness.
class Series {
 public:
  using Term = TensorElement::Term;

  // The zero series, known through order N and unknown beyond.
  Series(AlgebraPtr alg, int arity, int nvars, int order);

  static Series variable(AlgebraPtr alg, int arity, int nvars, int order, int var);
  static Series constant(const TensorElement &c, int nvars, int order);

  [[nodiscard]] const AlgebraPtr &algebra() const { return alg_; }
  [[nodiscard]] int arity() const { return arity_; }
  [[nodiscard]] int nvars() const { return layout_->nvars; }
  [[nodiscard]] int order() const { return layout_->order; }
  [[nodiscard]] const SeriesLayout &layout() const { return *layout_; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] TensorElement coefficient(std::span<const int> exps) const;
  [[nodiscard]] TensorElement coefficient(std::initializer_list<int> exps) const {
    return coefficient(std::span<const int>(exps.begin(), exps.size()));
  }
  [[nodiscard]] TensorElement coefficient_at(int index) const;
  [[nodiscard]] const std::vector<Term> &terms_at(int index) const { return coeffs_[index]; }
  [[nodiscard]] TensorElement constant_term() const { return coefficient_at(0); }
  // Largest order holding a nonzero coefficient, or -1 for zero.
  [[nodiscard]] int max_nonzero_order() const;

  void set_coefficient(std::span<const int> exps, const TensorElement &c);
  void set_coefficient(std::initializer_list<int> exps, const TensorElement &c) {
    set_coefficient(std::span<const int>(exps.begin(), exps.size()), c);
  }
  void add_to_coefficient(std::initializer_list<int> exps, const TensorElement &c);

  // Exactness profile.
  [[nodiscard]] int exact_degree(int order) const;
  [[nodiscard]] int tail_exact() const { return tail_; }
  [[nodiscard]] const std::vector<int> &exact_profile() const { return exact_; }
  [[nodiscard]] int stable_degree(int order) const;
  [[nodiscard]] const std::vector<int> &stable_profile() const { return stable_; }
  // Largest j such that orders 0..j are certified in degree 0 at least;
  // -1 when even the constant term is unknown.
  [[nodiscard]] int exact_order() const;
  [[nodiscard]] bool is_polynomial() const { return tail_ >= kExact; }
  // Declares the stored terms to be the whole series (zero above order N).
  void set_polynomial() { tail_ = kExact; normalize(); }
  void set_tail_exact(int e) { tail_ = e; normalize(); }
  // Both lower the profile at `order`; orders above N lower the tail.
  void restrict_exactness(int order, int degree);
  void restrict_stability(int order, int degree);

  // Re-truncates or extends to another order bound. Extension certifies the
  // new orders only as far as the tail did.
  [[nodiscard]] Series with_order(int order) const;
  // Result variable i is source variable perm[i].
  [[nodiscard]] Series permuted_variables(std::span<const int> perm) const;

  Series operator-() const;
  Series &operator+=(const Series &rhs);
  Series &operator-=(const Series &rhs);
  friend Series operator+(Series a, const Series &b) { return a += b; }
  friend Series operator-(Series a, const Series &b) { return a -= b; }
  // series_mul: Cauchy product.
  friend Series operator*(const Series &a, const Series &b);
  friend Series operator*(const TensorElement &c, const Series &s);
  friend Series operator*(const Rational &c, const Series &s);

  // Term-wise equality of shape and coefficients; the profile is not compared.
  friend bool operator==(const Series &a, const Series &b);

  // Kernel access.
  std::vector<Term> &mutable_terms_at(int index) { return coeffs_[index]; }
  void normalize();

 private:
  friend Series series_mul_impl(const Series &, const Series &);

  AlgebraPtr alg_;
  std::shared_ptr<const SeriesLayout> layout_;
  int arity_ = 1;
  std::vector<std::vector<Term>> coeffs_;
  std::vector<int> exact_;
  std::vector<int> stable_;
  int tail_ = kUnknown;
};

Series series_add(const Series &f, const Series &g);
Series series_mul(const Series &f, const Series &g);

// Replaces variable i of f by assignments[i]. Every assignment must share
// f's algebra and arity and one variable count, which becomes the result's.
// Constant terms must have zero full counit (nilpotent); otherwise
// NonNilpotentConstantTerm.
Series substitute(const Series &f, std::span<const Series> assignments);
inline Series substitute(const Series &f, std::initializer_list<Series> assignments) {
  return substitute(f, std::span<const Series>(assignments.begin(), assignments.size()));
}

// Renames variables: variable i of f becomes variable vars[i] of a series in
// target_nvars variables. Equivalent to substituting plain variables.
Series relabel_variables(const Series &f, int target_nvars, std::span<const int> vars);
inline Series relabel_variables(const Series &f, int target_nvars,
                                std::initializer_list<int> vars) {
  return relabel_variables(f, target_nvars, std::span<const int>(vars.begin(), vars.size()));
}

Series derivative(const Series &f, int var);
// Integration from 0 in `var`.
Series integrate(const Series &f, int var);

// 1/f, requiring (ε⊗...⊗ε) of the constant term to be 1.
Series mul_inverse(const Series &f);
// Compositional inverse h with f(h(x)) = x, for one-variable f with zero
// constant term and linear coefficient of full counit 1.
Series comp_inverse(const Series &f);

using CoefficientMap = std::function<TensorElement(const TensorElement &)>;
Series map_coefficients(const Series &f, const CoefficientMap &fn);
Series map_slot(const Series &f, int slot, SlotMap map);
Series embed_coefficients(const Series &f, int target_arity, std::span<const int> slots);
inline Series embed_coefficients(const Series &f, int target_arity,
                                 std::initializer_list<int> slots) {
  return embed_coefficients(f, target_arity,
                            std::span<const int>(slots.begin(), slots.size()));
}

}  // namespace fglog

#endif  // FGLOG_SERIES_HPP

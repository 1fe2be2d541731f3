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

#ifndef FGLOG_TENSOR_HPP
#define FGLOG_TENSOR_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "fglog/hopf_algebra.hpp"
#include "fglog/rational.hpp"

namespace fglog {

// Degree bookkeeping sentinels. An element is "exact through degree e" when
// every stored term of total degree <= e agrees with the untruncated value.
inline constexpr int kExact = 1 << 28;
inline constexpr int kUnknown = -1;

namespace detail {

inline constexpr int kSlotBits = 21;
inline constexpr std::uint64_t kSlotMask = (std::uint64_t{1} << kSlotBits) - 1;

// Slot 0 occupies the most significant field so key order is slot-wise
// lexicographic order.
inline int key_slot(std::uint64_t key, int arity, int s) {
  return static_cast<int>((key >> (kSlotBits * (arity - 1 - s))) & kSlotMask);
}

inline std::uint64_t make_key(std::span<const int> slots) {
  std::uint64_t k = 0;
  for (int b : slots) k = (k << kSlotBits) | static_cast<std::uint64_t>(b);
  return k;
}

}  // namespace detail

// Element of the k-fold tensor power H^⊗k, k in {1, 2, 3}: a sparse rational
// combination of k-tuples of basis monomials, each slot within the degree
// bound. Terms are kept sorted by slot-wise lexicographic key with no zero
// coefficients, so equality is term-wise.
class TensorElement {
 public:
  struct Term {
    std::uint64_t key = 0;
    Rational coef;
  };

  TensorElement(AlgebraPtr alg, int arity);

  static TensorElement unit(AlgebraPtr alg, int arity);
  static TensorElement scalar(AlgebraPtr alg, int arity, const Rational &c);
  // A single basis tensor given by slot basis indices.
  static TensorElement basis(AlgebraPtr alg, std::initializer_list<int> slots,
                             const Rational &c = Rational(1));
  static TensorElement basis(AlgebraPtr alg, std::span<const int> slots,
                             const Rational &c = Rational(1));
  // Throws DegreeOverflow when a monomial exceeds the degree bound.
  static TensorElement from_monomials(
      AlgebraPtr alg, int arity,
      const std::vector<std::pair<std::vector<Monomial>, Rational>> &terms);

  [[nodiscard]] const AlgebraPtr &algebra() const { return alg_; }
  [[nodiscard]] int arity() const { return arity_; }
  [[nodiscard]] const std::vector<Term> &terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  // Highest total degree in which the stored value is certified.
  [[nodiscard]] int exact_degree() const { return exact_; }
  // Highest total degree through which the value stays certified after a
  // coproduct. Slot-wise truncation commutes with products, ε and S but not
  // with Δ: a dropped term of total degree d feeds slot-bounded terms of
  // degree d under Δ. Never above exact_degree().
  [[nodiscard]] int stable_degree() const { return stable_; }

  [[nodiscard]] int slot(const Term &t, int s) const {
    return detail::key_slot(t.key, arity_, s);
  }
  [[nodiscard]] int total_degree(const Term &t) const;
  [[nodiscard]] int min_total_degree() const;
  [[nodiscard]] Rational coefficient(std::span<const int> slots) const;
  [[nodiscard]] Rational coefficient(std::initializer_list<int> slots) const {
    return coefficient(std::span<const int>(slots.begin(), slots.size()));
  }

  // (ε⊗...⊗ε) applied to every slot.
  [[nodiscard]] Rational full_counit() const;

  // Drop every term of total degree above d.
  [[nodiscard]] TensorElement truncated_above(int d) const;
  // Permute slots: result slot i holds source slot perm[i].
  [[nodiscard]] TensorElement permuted(std::span<const int> perm) const;
  [[nodiscard]] TensorElement swapped() const;

  TensorElement operator-() const;
  TensorElement &operator+=(const TensorElement &rhs);
  TensorElement &operator-=(const TensorElement &rhs);
  TensorElement &operator*=(const Rational &c);
  friend TensorElement operator+(TensorElement a, const TensorElement &b) {
    return a += b;
  }
  friend TensorElement operator-(TensorElement a, const TensorElement &b) {
    return a -= b;
  }
  friend TensorElement operator*(TensorElement a, const Rational &c) {
    return a *= c;
  }
  friend TensorElement operator*(const Rational &c, TensorElement a) {
    return a *= c;
  }
  // tensor_mul.
  friend TensorElement operator*(const TensorElement &a, const TensorElement &b);

  friend bool operator==(const TensorElement &a, const TensorElement &b);

  // Construction from already canonical terms; used by the kernels.
  static TensorElement from_sorted_terms(AlgebraPtr alg, int arity,
                                         std::vector<Term> terms,
                                         int exact = kExact, int stable = kExact);
  void set_exact_degree(int e) {
    exact_ = e;
    stable_ = std::min(stable_, e);
  }
  void set_stable_degree(int e) { stable_ = std::min(e, exact_); }

 private:
  AlgebraPtr alg_;
  int arity_ = 1;
  std::vector<Term> terms_;
  int exact_ = kExact;
  int stable_ = kExact;
};

// An element of H is an arity-1 tensor.
using HopfElement = TensorElement;

enum class SlotMap {
  kIdentity,
  kCoproduct,   // Δ: raises arity by one
  kCounit,      // ε: lowers arity by one
  kAntipode,    // S
  kUnitCounit,  // η∘ε: keeps arity, projects onto the unit
};

// Structure maps of H. Arguments must be arity-1 elements of one algebra.
HopfElement mul(const HopfElement &a, const HopfElement &b);
TensorElement comul(const HopfElement &a);
Rational counit(const HopfElement &a);
HopfElement antipode(const HopfElement &a);

TensorElement tensor_mul(const TensorElement &a, const TensorElement &b);
// Applies `map` in slot `slot` (0-based) and the identity elsewhere.
TensorElement apply_slot(const TensorElement &a, int slot, SlotMap map);
// Multiplies slots `first` and `first + 1` through μ.
TensorElement contract_mul(const TensorElement &a, int first);
// Places slot i of `a` at target slot slots[i]; other slots hold 1.
TensorElement embed(const TensorElement &a, int target_arity,
                    std::span<const int> slots);
inline TensorElement embed(const TensorElement &a, int target_arity,
                           std::initializer_list<int> slots) {
  return embed(a, target_arity, std::span<const int>(slots.begin(), slots.size()));
}

}  // namespace fglog

#endif  // FGLOG_TENSOR_HPP

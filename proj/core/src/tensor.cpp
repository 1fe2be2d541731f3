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

#include "fglog/tensor.hpp"

#include <algorithm>

#include "fglog/errors.hpp"
#include "kernels.hpp"

namespace fglog {
namespace {

void require_arity(int arity) {
  if (arity < 1 || arity > 3) {
    throw ArityMismatch("tensor arity must be 1, 2 or 3 (got " + std::to_string(arity) + ")");
  }
}

void require_same(const TensorElement &a, const TensorElement &b) {
  if (a.algebra() != b.algebra()) throw AlgebraMismatch("operands live in different algebras");
  if (a.arity() != b.arity()) {
    throw ArityMismatch("arity " + std::to_string(a.arity()) + " vs " +
                        std::to_string(b.arity()));
  }
}

void require_element(const HopfElement &a) {
  if (a.arity() != 1) throw ArityMismatch("expected an element of H (arity 1)");
}

}  // namespace

TensorElement::TensorElement(AlgebraPtr alg, int arity) : alg_(std::move(alg)), arity_(arity) {
  require_arity(arity);
  if (!alg_) throw AlgebraMismatch("null algebra");
}

TensorElement TensorElement::unit(AlgebraPtr alg, int arity) {
  return scalar(std::move(alg), arity, Rational(1));
}

TensorElement TensorElement::scalar(AlgebraPtr alg, int arity, const Rational &c) {
  TensorElement t(std::move(alg), arity);
  if (!c.is_zero()) t.terms_.push_back({0, c});
  return t;
}

TensorElement TensorElement::basis(AlgebraPtr alg, std::initializer_list<int> slots,
                                   const Rational &c) {
  return basis(std::move(alg), std::span<const int>(slots.begin(), slots.size()), c);
}

TensorElement TensorElement::basis(AlgebraPtr alg, std::span<const int> slots,
                                   const Rational &c) {
  TensorElement t(std::move(alg), static_cast<int>(slots.size()));
  for (int b : slots) {
    if (b < 0 || b >= t.alg_->dimension()) throw SpecError("basis index out of range");
  }
  if (!c.is_zero()) t.terms_.push_back({detail::make_key(slots), c});
  return t;
}

TensorElement TensorElement::from_monomials(
    AlgebraPtr alg, int arity,
    const std::vector<std::pair<std::vector<Monomial>, Rational>> &terms) {
  TensorElement t(alg, arity);
  detail::TermBuffer buf(*alg, arity);
  std::array<int, 3> sl{};
  for (const auto &[mons, c] : terms) {
    if (static_cast<int>(mons.size()) != arity) {
      throw ArityMismatch("term has " + std::to_string(mons.size()) + " slots, expected " +
                          std::to_string(arity));
    }
    for (int s = 0; s < arity; ++s) {
      if (mons[s].exponents.size() != alg->generators().size()) {
        throw SpecError("monomial has wrong number of exponents");
      }
      auto idx = alg->index_of(mons[s]);
      if (!idx) {
        throw DegreeOverflow("monomial of degree " + std::to_string(alg->degree_of(mons[s])) +
                             " exceeds bound " + std::to_string(alg->degree_bound()));
      }
      sl[s] = *idx;
    }
    buf.add(detail::make_key(std::span<const int>(sl.data(), arity)), c);
  }
  t.terms_ = buf.finish();
  return t;
}

TensorElement TensorElement::from_sorted_terms(AlgebraPtr alg, int arity,
                                               std::vector<Term> terms, int exact,
                                               int stable) {
  TensorElement t(std::move(alg), arity);
  t.terms_ = std::move(terms);
  t.exact_ = exact;
  t.stable_ = std::min(stable, exact);
  return t;
}

int TensorElement::total_degree(const Term &t) const {
  return detail::total_degree(*alg_, arity_, t.key);
}

int TensorElement::min_total_degree() const {
  int d = kExact;
  for (const Term &t : terms_) d = std::min(d, total_degree(t));
  return d;
}

Rational TensorElement::coefficient(std::span<const int> slots) const {
  if (static_cast<int>(slots.size()) != arity_) throw ArityMismatch("coefficient lookup");
  const std::uint64_t key = detail::make_key(slots);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term &t, std::uint64_t k) { return t.key < k; });
  if (it == terms_.end() || it->key != key) return Rational(0);
  return it->coef;
}

Rational TensorElement::full_counit() const {
  const auto &eps = alg_->tables().counit;
  Rational r;
  for (const Term &t : terms_) {
    Rational c = t.coef;
    for (int s = 0; s < arity_ && !c.is_zero(); ++s) c *= eps[slot(t, s)];
    r += c;
  }
  return r;
}

TensorElement TensorElement::truncated_above(int d) const {
  TensorElement r(alg_, arity_);
  for (const Term &t : terms_) {
    if (total_degree(t) <= d) r.terms_.push_back(t);
  }
  r.exact_ = exact_;
  r.stable_ = stable_;
  return r;
}

TensorElement TensorElement::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != arity_) throw ArityMismatch("permutation size");
  std::vector<int> p(perm.begin(), perm.end());
  std::vector<int> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < arity_; ++i) {
    if (sorted[i] != i) throw ArityMismatch("not a permutation");
  }
  return from_sorted_terms(alg_, arity_, detail::permute_terms(arity_, terms_, p), exact_,
                           stable_);
}

TensorElement TensorElement::swapped() const {
  if (arity_ != 2) throw ArityMismatch("swap needs arity 2");
  static constexpr int kSwap[] = {1, 0};
  return permuted(kSwap);
}

TensorElement TensorElement::operator-() const {
  TensorElement r(*this);
  for (Term &t : r.terms_) t.coef = -t.coef;
  return r;
}

TensorElement &TensorElement::operator+=(const TensorElement &rhs) {
  require_same(*this, rhs);
  terms_ = detail::add_terms(terms_, rhs.terms_, false);
  exact_ = std::min(exact_, rhs.exact_);
  stable_ = std::min(stable_, rhs.stable_);
  return *this;
}

TensorElement &TensorElement::operator-=(const TensorElement &rhs) {
  require_same(*this, rhs);
  terms_ = detail::add_terms(terms_, rhs.terms_, true);
  exact_ = std::min(exact_, rhs.exact_);
  stable_ = std::min(stable_, rhs.stable_);
  return *this;
}

TensorElement &TensorElement::operator*=(const Rational &c) {
  terms_ = detail::scale_terms(terms_, c);
  return *this;
}

TensorElement operator*(const TensorElement &a, const TensorElement &b) {
  require_same(a, b);
  detail::TermBuffer buf(*a.alg_, a.arity_);
  const int dropped = detail::multiply_into(buf, *a.alg_, a.arity_, a.terms_, b.terms_);
  int stable = std::min(a.stable_, b.stable_);
  if (dropped != kExact) stable = std::min(stable, dropped - 1);
  return TensorElement::from_sorted_terms(a.alg_, a.arity_, buf.finish(),
                                          std::min(a.exact_, b.exact_), stable);
}

bool operator==(const TensorElement &a, const TensorElement &b) {
  if (a.alg_ != b.alg_ || a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].key != b.terms_[i].key || !(a.terms_[i].coef == b.terms_[i].coef)) {
      return false;
    }
  }
  return true;
}

HopfElement mul(const HopfElement &a, const HopfElement &b) {
  require_element(a);
  require_element(b);
  return a * b;
}

TensorElement comul(const HopfElement &a) {
  require_element(a);
  return apply_slot(a, 0, SlotMap::kCoproduct);
}

Rational counit(const HopfElement &a) {
  require_element(a);
  return a.full_counit();
}

HopfElement antipode(const HopfElement &a) {
  require_element(a);
  return apply_slot(a, 0, SlotMap::kAntipode);
}

TensorElement tensor_mul(const TensorElement &a, const TensorElement &b) { return a * b; }

TensorElement apply_slot(const TensorElement &a, int slot, SlotMap map) {
  if (slot < 0 || slot >= a.arity()) {
    throw ArityMismatch("slot " + std::to_string(slot) + " out of range for arity " +
                        std::to_string(a.arity()));
  }
  int out_arity = a.arity();
  if (map == SlotMap::kCoproduct) out_arity += 1;
  if (map == SlotMap::kCounit) out_arity -= 1;
  if (out_arity < 1 || out_arity > 3) {
    throw ArityMismatch("slot map would produce arity " + std::to_string(out_arity));
  }
  const int exact = map == SlotMap::kCoproduct ? a.stable_degree() : a.exact_degree();
  return TensorElement::from_sorted_terms(
      a.algebra(), out_arity,
      detail::apply_slot_terms(*a.algebra(), a.arity(), a.terms(), slot, map), exact,
      a.stable_degree());
}

TensorElement contract_mul(const TensorElement &a, int first) {
  if (a.arity() < 2 || first < 0 || first + 1 >= a.arity()) {
    throw ArityMismatch("contract_mul needs adjacent slots inside arity " +
                        std::to_string(a.arity()));
  }
  int dropped = kExact;
  auto terms = detail::contract_terms(*a.algebra(), a.arity(), a.terms(), first, dropped);
  int stable = a.stable_degree();
  if (dropped != kExact) stable = std::min(stable, dropped - 1);
  return TensorElement::from_sorted_terms(a.algebra(), a.arity() - 1, std::move(terms),
                                          a.exact_degree(), stable);
}

TensorElement embed(const TensorElement &a, int target_arity, std::span<const int> slots) {
  if (target_arity < a.arity() || target_arity > 3 ||
      static_cast<int>(slots.size()) != a.arity()) {
    throw ArityMismatch("embedding arity " + std::to_string(a.arity()) + " into " +
                        std::to_string(target_arity));
  }
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i] < 0 || slots[i] >= target_arity || (i > 0 && slots[i] <= slots[i - 1])) {
      throw ArityMismatch("embedding slots must be increasing and inside the target");
    }
  }
  return TensorElement::from_sorted_terms(
      a.algebra(), target_arity,
      detail::embed_terms(a.arity(), a.terms(), target_arity,
                          std::vector<int>(slots.begin(), slots.end())),
      a.exact_degree(), a.stable_degree());
}

}  // namespace fglog

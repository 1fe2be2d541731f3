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

#include "kernels.hpp"

#include <algorithm>

#include "fglog/errors.hpp"

namespace fglog::detail {
namespace {

constexpr std::size_t kDenseLimit = std::size_t{1} << 16;

}  // namespace

TermBuffer::TermBuffer(const HopfAlgebra &alg, int arity, bool dense)
    : arity_(arity), dim_(alg.dimension()) {
  std::size_t space = 1;
  for (int i = 0; i < arity; ++i) space *= static_cast<std::size_t>(dim_);
  if (dense && space <= kDenseLimit) {
    dense_ = true;
    dense_vals_.resize(space);
    dense_used_.assign(space, 0);
  }
}

std::size_t TermBuffer::dense_index(std::uint64_t key) const {
  std::size_t idx = 0;
  for (int s = 0; s < arity_; ++s) {
    idx = idx * static_cast<std::size_t>(dim_) +
          static_cast<std::size_t>(key_slot(key, arity_, s));
  }
  return idx;
}

void TermBuffer::add(std::uint64_t key, const Rational &c) {
  if (c.is_zero()) return;
  if (!dense_) {
    raw_.push_back({key, c});
    return;
  }
  const std::size_t i = dense_index(key);
  if (!dense_used_[i]) {
    dense_used_[i] = 1;
    touched_.push_back(key);
    dense_vals_[i] = c;
  } else {
    dense_vals_[i] += c;
  }
}

void TermBuffer::add_product(std::uint64_t key, const Rational &a, const Rational &b) {
  if (!dense_) {
    raw_.push_back({key, a * b});
    return;
  }
  const std::size_t i = dense_index(key);
  if (!dense_used_[i]) {
    dense_used_[i] = 1;
    touched_.push_back(key);
    dense_vals_[i] = a * b;
  } else {
    fglog::add_product(dense_vals_[i], a, b);
  }
}

std::vector<Term> TermBuffer::finish() {
  std::vector<Term> out;
  if (dense_) {
    std::sort(touched_.begin(), touched_.end());
    out.reserve(touched_.size());
    for (std::uint64_t key : touched_) {
      const std::size_t i = dense_index(key);
      if (!dense_vals_[i].is_zero()) out.push_back({key, std::move(dense_vals_[i])});
      dense_vals_[i] = Rational();
      dense_used_[i] = 0;
    }
    touched_.clear();
    return out;
  }
  std::sort(raw_.begin(), raw_.end(),
            [](const Term &x, const Term &y) { return x.key < y.key; });
  for (std::size_t i = 0; i < raw_.size();) {
    std::size_t j = i + 1;
    Rational c = std::move(raw_[i].coef);
    while (j < raw_.size() && raw_[j].key == raw_[i].key) {
      c += raw_[j].coef;
      ++j;
    }
    if (!c.is_zero()) out.push_back({raw_[i].key, std::move(c)});
    i = j;
  }
  raw_.clear();
  return out;
}

int total_degree(const HopfAlgebra &alg, int arity, std::uint64_t key) {
  int d = 0;
  for (int s = 0; s < arity; ++s) d += alg.degree(key_slot(key, arity, s));
  return d;
}

int multiply_into(TermBuffer &buf, const HopfAlgebra &alg, int arity,
                  const std::vector<Term> &a, const std::vector<Term> &b) {
  int dropped = kExact;
  if (a.empty() || b.empty()) return dropped;
  const bool plain = alg.monomial_products();
  // Decode b once.
  std::vector<std::array<int, 3>> bs(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    for (int s = 0; s < arity; ++s) bs[j][s] = key_slot(b[j].key, arity, s);
  }
  std::array<int, 3> as{};
  for (const Term &ta : a) {
    for (int s = 0; s < arity; ++s) as[s] = key_slot(ta.key, arity, s);
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t key = 0;
      bool ok = true;
      Rational extra(1);
      for (int s = 0; s < arity; ++s) {
        const auto &p = alg.product(as[s], bs[j][s]);
        if (p.index < 0) {
          ok = false;
          break;
        }
        if (!plain) extra *= p.coef;
        key = (key << kSlotBits) | static_cast<std::uint64_t>(p.index);
      }
      if (!ok) {
        int d = 0;
        for (int s = 0; s < arity; ++s) d += alg.degree(as[s]) + alg.degree(bs[j][s]);
        dropped = std::min(dropped, d);
        continue;
      }
      if (plain) {
        buf.add_product(key, ta.coef, b[j].coef);
      } else {
        buf.add_product(key, ta.coef * extra, b[j].coef);
      }
    }
  }
  return dropped;
}

std::vector<Term> add_terms(const std::vector<Term> &a, const std::vector<Term> &b,
                            bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].key < b[j].key)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].key < a[i].key) {
      out.push_back({b[j].key, subtract ? -b[j].coef : b[j].coef});
      ++j;
    } else {
      Rational c = subtract ? a[i].coef - b[j].coef : a[i].coef + b[j].coef;
      if (!c.is_zero()) out.push_back({a[i].key, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<Term> scale_terms(const std::vector<Term> &a, const Rational &c) {
  if (c.is_zero()) return {};
  std::vector<Term> out = a;
  if (!c.is_one()) {
    for (Term &t : out) t.coef *= c;
  }
  return out;
}

std::vector<Term> apply_slot_terms(const HopfAlgebra &alg, int arity,
                                   const std::vector<Term> &a, int slot, SlotMap map) {
  if (map == SlotMap::kIdentity) return a;
  const HopfTables &tab = alg.tables();
  std::array<int, 4> sl{};
  const int out_arity = map == SlotMap::kCoproduct ? arity + 1
                        : map == SlotMap::kCounit ? arity - 1
                                                  : arity;
  TermBuffer buf(alg, out_arity);
  for (const Term &t : a) {
    for (int s = 0; s < arity; ++s) sl[s] = key_slot(t.key, arity, s);
    const int b = sl[slot];
    switch (map) {
      case SlotMap::kCoproduct: {
        std::array<int, 4> out{};
        for (const auto &e : tab.coproduct[b]) {
          int k = 0;
          for (int s = 0; s < arity; ++s) {
            if (s == slot) {
              out[k++] = e.left;
              out[k++] = e.right;
            } else {
              out[k++] = sl[s];
            }
          }
          buf.add_product(make_key(std::span<const int>(out.data(), out_arity)), t.coef,
                          e.coef);
        }
        break;
      }
      case SlotMap::kCounit: {
        const Rational &e = tab.counit[b];
        if (e.is_zero()) break;
        std::array<int, 4> out{};
        int k = 0;
        for (int s = 0; s < arity; ++s) {
          if (s != slot) out[k++] = sl[s];
        }
        buf.add_product(make_key(std::span<const int>(out.data(), out_arity)), t.coef, e);
        break;
      }
      case SlotMap::kUnitCounit: {
        const Rational &e = tab.counit[b];
        if (e.is_zero()) break;
        sl[slot] = 0;
        buf.add_product(make_key(std::span<const int>(sl.data(), arity)), t.coef, e);
        break;
      }
      case SlotMap::kAntipode: {
        for (const auto &e : tab.antipode[b]) {
          sl[slot] = e.index;
          buf.add_product(make_key(std::span<const int>(sl.data(), arity)), t.coef,
                          e.coef);
        }
        break;
      }
      case SlotMap::kIdentity:
        break;
    }
  }
  return buf.finish();
}

std::vector<Term> contract_terms(const HopfAlgebra &alg, int arity,
                                 const std::vector<Term> &a, int first, int &dropped) {
  dropped = kExact;
  TermBuffer buf(alg, arity - 1);
  std::array<int, 3> sl{};
  std::array<int, 3> out{};
  for (const Term &t : a) {
    for (int s = 0; s < arity; ++s) sl[s] = key_slot(t.key, arity, s);
    const auto &p = alg.product(sl[first], sl[first + 1]);
    if (p.index < 0) {
      dropped = std::min(dropped, total_degree(alg, arity, t.key));
      continue;
    }
    int k = 0;
    for (int s = 0; s < arity; ++s) {
      if (s == first) {
        out[k++] = p.index;
      } else if (s != first + 1) {
        out[k++] = sl[s];
      }
    }
    buf.add_product(make_key(std::span<const int>(out.data(), arity - 1)), t.coef, p.coef);
  }
  return buf.finish();
}

std::vector<Term> embed_terms(int arity, const std::vector<Term> &a, int target_arity,
                              const std::vector<int> &slots) {
  std::vector<Term> out;
  out.reserve(a.size());
  std::array<int, 3> sl{};
  for (const Term &t : a) {
    sl.fill(0);
    for (int s = 0; s < arity; ++s) sl[slots[s]] = key_slot(t.key, arity, s);
    out.push_back({make_key(std::span<const int>(sl.data(), target_arity)), t.coef});
  }
  // Order-preserving slot placement keeps keys sorted.
  return out;
}

std::vector<Term> permute_terms(int arity, const std::vector<Term> &a,
                                const std::vector<int> &perm) {
  std::vector<Term> out;
  out.reserve(a.size());
  std::array<int, 3> sl{};
  for (const Term &t : a) {
    for (int s = 0; s < arity; ++s) sl[s] = key_slot(t.key, arity, perm[s]);
    out.push_back({make_key(std::span<const int>(sl.data(), arity)), t.coef});
  }
  std::sort(out.begin(), out.end(),
            [](const Term &x, const Term &y) { return x.key < y.key; });
  return out;
}

}  // namespace fglog::detail

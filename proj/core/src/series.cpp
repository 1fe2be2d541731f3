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

#include "fglog/series.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "fglog/errors.hpp"
#include "kernels.hpp"

namespace fglog {
namespace {

int sat_add(int a, int b) {
  const long long s = static_cast<long long>(a) + b;
  return s >= kExact ? kExact : static_cast<int>(s);
}

int sat_mul(int a, int b) {
  const long long s = static_cast<long long>(a) * b;
  return s >= kExact ? kExact : static_cast<int>(s);
}

void require_same_shape(const Series &a, const Series &b) {
  if (a.algebra() != b.algebra()) throw AlgebraMismatch("series over different algebras");
  if (a.arity() != b.arity() || a.nvars() != b.nvars() || a.order() != b.order()) {
    throw ShapeMismatch("series shapes differ: arity " + std::to_string(a.arity()) + "/" +
                        std::to_string(b.arity()) + ", variables " +
                        std::to_string(a.nvars()) + "/" + std::to_string(b.nvars()) +
                        ", order " + std::to_string(a.order()) + "/" +
                        std::to_string(b.order()));
  }
}

bool fully_exact(const Series &s) {
  return s.tail_exact() >= kExact && s.exact_degree(s.order()) >= kExact;
}

std::vector<int> nonzero_indices(const Series &s) {
  std::vector<int> out;
  for (int i = 0; i < s.layout().size(); ++i) {
    if (!s.terms_at(i).empty()) out.push_back(i);
  }
  return out;
}

}  // namespace

int SeriesLayout::index(const std::array<int, 3> &e) const {
  int idx = 0;
  int tot = 0;
  for (int v = 0; v < nvars; ++v) {
    if (e[v] < 0) return -1;
    tot += e[v];
    idx = idx * (order + 1) + e[v];
  }
  if (tot > order) return -1;
  return lookup[idx];
}

std::shared_ptr<const SeriesLayout> SeriesLayout::get(int nvars, int order) {
  if (nvars < 1 || nvars > 3) throw ShapeMismatch("series need 1 to 3 variables");
  if (order < 0) throw ShapeMismatch("negative series order");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const SeriesLayout>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto &slot = cache[{nvars, order}];
  if (slot) return slot;

  auto l = std::make_shared<SeriesLayout>();
  l->nvars = nvars;
  l->order = order;
  for (int t = 0; t <= order; ++t) {
    l->order_begin.push_back(static_cast<int>(l->exps.size()));
    if (nvars == 1) {
      l->exps.push_back({t, 0, 0});
    } else if (nvars == 2) {
      for (int a = t; a >= 0; --a) l->exps.push_back({a, t - a, 0});
    } else {
      for (int a = t; a >= 0; --a) {
        for (int b = t - a; b >= 0; --b) l->exps.push_back({a, b, t - a - b});
      }
    }
  }
  l->order_begin.push_back(static_cast<int>(l->exps.size()));
  std::size_t radix = 1;
  for (int v = 0; v < nvars; ++v) radix *= static_cast<std::size_t>(order + 1);
  l->lookup.assign(radix, -1);
  for (std::size_t i = 0; i < l->exps.size(); ++i) {
    const auto &e = l->exps[i];
    l->total.push_back(e[0] + e[1] + e[2]);
    int idx = 0;
    for (int v = 0; v < nvars; ++v) idx = idx * (order + 1) + e[v];
    l->lookup[idx] = static_cast<int>(i);
  }
  slot = l;
  return slot;
}

Series::Series(AlgebraPtr alg, int arity, int nvars, int order)
    : alg_(std::move(alg)), layout_(SeriesLayout::get(nvars, order)), arity_(arity) {
  if (!alg_) throw AlgebraMismatch("null algebra");
  if (arity < 1 || arity > 3) throw ArityMismatch("series coefficient arity must be 1-3");
  coeffs_.resize(layout_->size());
  exact_.assign(order + 1, kExact);
  stable_.assign(order + 1, kExact);
}

Series Series::variable(AlgebraPtr alg, int arity, int nvars, int order, int var) {
  if (var < 0 || var >= nvars) throw ShapeMismatch("variable index out of range");
  Series s(alg, arity, nvars, order);
  if (order >= 1) {
    std::array<int, 3> e{0, 0, 0};
    e[var] = 1;
    s.coeffs_[s.layout_->index(e)] = TensorElement::unit(alg, arity).terms();
  }
  s.tail_ = order >= 1 ? kExact : kUnknown;
  return s;
}

Series Series::constant(const TensorElement &c, int nvars, int order) {
  Series s(c.algebra(), c.arity(), nvars, order);
  s.coeffs_[0] = c.terms();
  s.tail_ = kExact;
  for (int &e : s.exact_) e = c.exact_degree();
  for (int &e : s.stable_) e = c.stable_degree();
  s.normalize();
  return s;
}

bool Series::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const std::vector<Term> &t) { return t.empty(); });
}

TensorElement Series::coefficient(std::span<const int> exps) const {
  if (static_cast<int>(exps.size()) != nvars()) throw ShapeMismatch("exponent length");
  std::array<int, 3> e{0, 0, 0};
  std::copy(exps.begin(), exps.end(), e.begin());
  const int idx = layout_->index(e);
  if (idx < 0) return TensorElement(alg_, arity_);
  return coefficient_at(idx);
}

TensorElement Series::coefficient_at(int index) const {
  return TensorElement::from_sorted_terms(alg_, arity_, coeffs_[index]);
}

int Series::max_nonzero_order() const {
  for (int i = layout_->size() - 1; i >= 0; --i) {
    if (!coeffs_[i].empty()) return layout_->total[i];
  }
  return -1;
}

void Series::set_coefficient(std::span<const int> exps, const TensorElement &c) {
  if (c.algebra() != alg_) throw AlgebraMismatch("coefficient from another algebra");
  if (c.arity() != arity_) throw ArityMismatch("coefficient arity");
  if (static_cast<int>(exps.size()) != nvars()) throw ShapeMismatch("exponent length");
  std::array<int, 3> e{0, 0, 0};
  std::copy(exps.begin(), exps.end(), e.begin());
  const int idx = layout_->index(e);
  if (idx < 0) throw ShapeMismatch("exponent beyond the series order");
  coeffs_[idx] = c.terms();
  if (c.exact_degree() < kExact) restrict_exactness(layout_->total[idx], c.exact_degree());
  if (c.stable_degree() < kExact) restrict_stability(layout_->total[idx], c.stable_degree());
}

void Series::add_to_coefficient(std::initializer_list<int> exps, const TensorElement &c) {
  TensorElement cur = coefficient(std::span<const int>(exps.begin(), exps.size()));
  cur += c;
  set_coefficient(std::span<const int>(exps.begin(), exps.size()), cur);
}

int Series::exact_degree(int order) const {
  if (order < 0) return kExact;
  if (order <= this->order()) return exact_[order];
  return tail_;
}

int Series::stable_degree(int order) const {
  if (order < 0) return kExact;
  if (order <= this->order()) return stable_[order];
  return std::min(tail_, stable_[this->order()]);
}

int Series::exact_order() const {
  int j = -1;
  while (j + 1 <= order() && exact_[j + 1] >= 0) ++j;
  return j;
}

void Series::restrict_exactness(int order, int degree) {
  if (order > this->order()) {
    tail_ = std::min(tail_, degree);
  } else {
    exact_[order] = std::min(exact_[order], degree);
  }
  normalize();
}

void Series::restrict_stability(int order, int degree) {
  if (order > this->order()) {
    // Orders above N share the tail; stability there follows stable_[N].
    if (degree < stable_degree(order)) stable_[this->order()] = std::min(stable_[this->order()], degree);
  } else {
    stable_[order] = std::min(stable_[order], degree);
  }
  normalize();
}

void Series::normalize() {
  const int n = order();
  for (int j = 1; j <= n; ++j) exact_[j] = std::min(exact_[j], exact_[j - 1]);
  tail_ = std::min(tail_, exact_[n]);
  for (int j = 0; j <= n; ++j) {
    stable_[j] = std::min(stable_[j], exact_[j]);
    if (j > 0) stable_[j] = std::min(stable_[j], stable_[j - 1]);
  }
  for (int i = 0; i < layout_->size(); ++i) {
    auto &terms = coeffs_[i];
    if (terms.empty()) continue;
    const int e = exact_[layout_->total[i]];
    if (e >= kExact) continue;
    if (e < 0) {
      terms.clear();
      continue;
    }
    std::erase_if(terms, [&](const Term &t) {
      return detail::total_degree(*alg_, arity_, t.key) > e;
    });
  }
}

Series Series::with_order(int order) const {
  Series r(alg_, arity_, nvars(), order);
  bool dropped = false;
  for (int i = 0; i < layout_->size(); ++i) {
    if (coeffs_[i].empty()) continue;
    if (layout_->total[i] > order) {
      dropped = true;
      continue;
    }
    r.coeffs_[r.layout_->index(layout_->exps[i])] = coeffs_[i];
  }
  for (int j = 0; j <= order; ++j) {
    r.exact_[j] = exact_degree(j);
    r.stable_[j] = stable_degree(j);
  }
  r.tail_ = tail_;
  for (int j = order + 1; j <= this->order(); ++j) r.tail_ = std::min(r.tail_, exact_[j]);
  if (dropped) r.tail_ = kUnknown;
  r.normalize();
  return r;
}

Series Series::permuted_variables(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != nvars()) throw ShapeMismatch("permutation size");
  Series r(*this);
  for (auto &c : r.coeffs_) c.clear();
  for (int i = 0; i < layout_->size(); ++i) {
    if (coeffs_[i].empty()) continue;
    std::array<int, 3> e{0, 0, 0};
    for (int v = 0; v < nvars(); ++v) e[v] = layout_->exps[i][perm[v]];
    r.coeffs_[layout_->index(e)] = coeffs_[i];
  }
  return r;
}

Series Series::operator-() const {
  Series r(*this);
  for (auto &c : r.coeffs_) {
    for (Term &t : c) t.coef = -t.coef;
  }
  return r;
}

Series &Series::operator+=(const Series &rhs) {
  require_same_shape(*this, rhs);
  for (int i = 0; i < layout_->size(); ++i) {
    if (rhs.coeffs_[i].empty()) continue;
    coeffs_[i] = detail::add_terms(coeffs_[i], rhs.coeffs_[i], false);
  }
  for (int j = 0; j <= order(); ++j) {
    exact_[j] = std::min(exact_[j], rhs.exact_[j]);
    stable_[j] = std::min(stable_[j], rhs.stable_[j]);
  }
  tail_ = std::min(tail_, rhs.tail_);
  normalize();
  return *this;
}

Series &Series::operator-=(const Series &rhs) {
  require_same_shape(*this, rhs);
  for (int i = 0; i < layout_->size(); ++i) {
    if (rhs.coeffs_[i].empty()) continue;
    coeffs_[i] = detail::add_terms(coeffs_[i], rhs.coeffs_[i], true);
  }
  for (int j = 0; j <= order(); ++j) {
    exact_[j] = std::min(exact_[j], rhs.exact_[j]);
    stable_[j] = std::min(stable_[j], rhs.stable_[j]);
  }
  tail_ = std::min(tail_, rhs.tail_);
  normalize();
  return *this;
}

Series series_mul_impl(const Series &a, const Series &b) {
  require_same_shape(a, b);
  const SeriesLayout &L = *a.layout_;
  const HopfAlgebra &alg = *a.alg_;
  Series r(a.alg_, a.arity_, L.nvars, L.order);
  const std::vector<int> nza = nonzero_indices(a);
  const std::vector<int> nzb = nonzero_indices(b);
  detail::TermBuffer buf(alg, a.arity_, true);
  std::vector<char> b_nonzero(L.size(), 0);
  for (int i : nzb) b_nonzero[i] = 1;
  const int max_b = b.max_nonzero_order();
  const int max_a = a.max_nonzero_order();
  if (!nza.empty() && !nzb.empty()) {
    for (int t = 0; t < L.size(); ++t) {
      const auto &et = L.exps[t];
      const int tt = L.total[t];
      if (tt > max_a + max_b) break;
      int dropped = kExact;
      bool any = false;
      for (int ia : nza) {
        const int ta = L.total[ia];
        if (ta > tt) break;
        if (tt - ta > max_b) continue;
        const auto &ea = L.exps[ia];
        if (ea[0] > et[0] || ea[1] > et[1] || ea[2] > et[2]) continue;
        const int ib = L.index({et[0] - ea[0], et[1] - ea[1], et[2] - ea[2]});
        if (!b_nonzero[ib]) continue;
        any = true;
        dropped = std::min(dropped, detail::multiply_into(buf, alg, a.arity_, a.coeffs_[ia],
                                                          b.coeffs_[ib]));
      }
      if (!any) continue;
      r.coeffs_[t] = buf.finish();
      if (dropped < kExact) r.stable_[tt] = std::min(r.stable_[tt], dropped - 1);
    }
  }
  for (int j = 0; j <= L.order; ++j) {
    r.exact_[j] = std::min({r.exact_[j], a.exact_[j], b.exact_[j]});
    r.stable_[j] = std::min({r.stable_[j], a.stable_[j], b.stable_[j]});
  }
  r.tail_ = std::min(a.tail_, b.tail_);
  if (max_a >= 0 && max_b >= 0 && max_a + max_b > L.order) r.tail_ = kUnknown;
  r.normalize();
  return r;
}

Series operator*(const Series &a, const Series &b) { return series_mul_impl(a, b); }

Series operator*(const TensorElement &c, const Series &s) {
  if (c.algebra() != s.alg_) throw AlgebraMismatch("scaling by a foreign element");
  if (c.arity() != s.arity_) throw ArityMismatch("scaling arity");
  Series r(s);
  detail::TermBuffer buf(*s.alg_, s.arity_, true);
  for (int i = 0; i < s.layout_->size(); ++i) {
    if (s.coeffs_[i].empty()) continue;
    const int dropped = detail::multiply_into(buf, *s.alg_, s.arity_, c.terms(), s.coeffs_[i]);
    r.coeffs_[i] = buf.finish();
    if (dropped < kExact) {
      const int j = s.layout_->total[i];
      r.stable_[j] = std::min(r.stable_[j], dropped - 1);
    }
  }
  if (c.exact_degree() < kExact) {
    for (int &e : r.exact_) e = std::min(e, c.exact_degree());
    r.tail_ = std::min(r.tail_, c.exact_degree());
  }
  for (int &e : r.stable_) e = std::min(e, c.stable_degree());
  r.normalize();
  return r;
}

Series operator*(const Rational &c, const Series &s) {
  Series r(s);
  for (auto &terms : r.coeffs_) terms = detail::scale_terms(terms, c);
  return r;
}

bool operator==(const Series &a, const Series &b) {
  if (a.alg_ != b.alg_ || a.arity_ != b.arity_ || a.nvars() != b.nvars() ||
      a.order() != b.order()) {
    return false;
  }
  for (int i = 0; i < a.layout_->size(); ++i) {
    const auto &x = a.coeffs_[i];
    const auto &y = b.coeffs_[i];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k].key != y[k].key || !(x[k].coef == y[k].coef)) return false;
    }
  }
  return true;
}

Series series_add(const Series &f, const Series &g) { return f + g; }
Series series_mul(const Series &f, const Series &g) { return f * g; }

Series substitute(const Series &f, std::span<const Series> assignments) {
  if (static_cast<int>(assignments.size()) != f.nvars()) {
    throw ShapeMismatch("substitution needs one assignment per variable");
  }
  const int n = f.order();
  const int vr = assignments[0].nvars();
  std::vector<Series> s;
  s.reserve(assignments.size());
  int delta = kExact;
  for (const Series &a : assignments) {
    if (a.algebra() != f.algebra()) throw AlgebraMismatch("assignment over another algebra");
    if (a.arity() != f.arity()) throw ShapeMismatch("assignment coefficient arity differs");
    if (a.nvars() != vr) throw ShapeMismatch("assignments use different variable counts");
    const TensorElement k = a.constant_term();
    if (!k.full_counit().is_zero()) {
      throw NonNilpotentConstantTerm("assigned series has constant term with counit " +
                                     k.full_counit().str());
    }
    if (!k.is_zero()) delta = std::min(delta, k.min_total_degree());
    s.push_back(a.order() == n ? a : a.with_order(n));
  }

  const SeriesLayout &L = f.layout();
  const int vf = f.nvars();
  std::array<int, 3> maxexp{0, 0, 0};
  for (int i = 0; i < L.size(); ++i) {
    if (f.terms_at(i).empty()) continue;
    for (int v = 0; v < vf; ++v) maxexp[v] = std::max(maxexp[v], L.exps[i][v]);
  }
  const AlgebraPtr &alg = f.algebra();
  const TensorElement unit = TensorElement::unit(alg, f.arity());

  std::vector<std::vector<Series>> powers(vf);
  for (int v = 0; v < vf; ++v) {
    powers[v].push_back(Series::constant(unit, vr, n));
    for (int k = 1; k <= maxexp[v]; ++k) {
      const Series &prev = powers[v].back();
      if (prev.is_zero()) {
        powers[v].push_back(prev);
      } else {
        powers[v].push_back(prev * s[v]);
      }
    }
  }

  Series zero(alg, f.arity(), vr, n);
  zero.set_polynomial();

  // Horner-style nesting: sum_k P_v[k] * (inner sum over later variables).
  std::array<int, 3> e{0, 0, 0};
  auto eval = [&](auto &&self, int level, int used) -> Series {
    Series acc = zero;
    if (level == vf - 1) {
      for (int k = 0; k + used <= n && k <= maxexp[level]; ++k) {
        e[level] = k;
        const int idx = L.index(e);
        if (f.terms_at(idx).empty()) continue;
        acc += f.coefficient_at(idx) * powers[level][k];
      }
      e[level] = 0;
      return acc;
    }
    for (int k = 0; k + used <= n && k <= maxexp[level]; ++k) {
      e[level] = k;
      Series inner = self(self, level + 1, used + k);
      e[level] = k;
      if (inner.is_zero() && fully_exact(inner)) continue;
      if (k == 0) {
        acc += inner;
      } else {
        acc += powers[level][k] * inner;
      }
    }
    e[level] = 0;
    return acc;
  };
  Series result = eval(eval, 0, 0);

  // Unstored or uncertified terms of f at order K reach order j only through
  // K - j nilpotent constant factors, each of degree >= delta.
  // The same bound applies to the stable profile of f.
  for (int j = 0; j <= n; ++j) {
    int bound = kExact;
    int sbound = kExact;
    for (int k = 0; k <= n; ++k) {
      const int ef = f.exact_degree(k);
      const int sf = f.stable_degree(k);
      if (k <= j) {
        bound = std::min(bound, ef);
        sbound = std::min(sbound, sf);
      } else if (delta < kExact) {
        bound = std::min(bound, sat_add(ef, sat_mul(k - j, delta)));
        sbound = std::min(sbound, sat_add(sf, sat_mul(k - j, delta)));
      }
    }
    if (f.tail_exact() < kExact && delta < kExact) {
      bound = std::min(bound, sat_add(f.tail_exact(), sat_mul(n + 1 - j, delta)));
    }
    if (delta < kExact) {
      sbound = std::min(sbound, sat_add(f.stable_degree(n + 1), sat_mul(n + 1 - j, delta)));
    }
    if (bound < kExact) result.restrict_exactness(j, bound);
    if (sbound < kExact) result.restrict_stability(j, sbound);
  }
  if (f.tail_exact() < kExact) result.set_tail_exact(kUnknown);
  return result;
}

Series relabel_variables(const Series &f, int target_nvars, std::span<const int> vars) {
  if (static_cast<int>(vars.size()) != f.nvars()) throw ShapeMismatch("relabel map size");
  for (int v : vars) {
    if (v < 0 || v >= target_nvars) throw ShapeMismatch("relabel target out of range");
  }
  const SeriesLayout &L = f.layout();
  Series r(f.algebra(), f.arity(), target_nvars, f.order());
  for (int i = 0; i < L.size(); ++i) {
    if (f.terms_at(i).empty()) continue;
    std::array<int, 3> e{0, 0, 0};
    for (int v = 0; v < f.nvars(); ++v) e[vars[v]] += L.exps[i][v];
    r.mutable_terms_at(r.layout().index(e)) = f.terms_at(i);
  }
  for (int j = 0; j <= f.order(); ++j) {
    r.restrict_exactness(j, f.exact_degree(j));
    r.restrict_stability(j, f.stable_degree(j));
  }
  r.set_tail_exact(f.tail_exact());
  return r;
}

Series derivative(const Series &f, int var) {
  if (var < 0 || var >= f.nvars()) throw ShapeMismatch("derivative variable out of range");
  const SeriesLayout &L = f.layout();
  Series r(f.algebra(), f.arity(), f.nvars(), f.order());
  for (int i = 0; i < L.size(); ++i) {
    const auto &terms = f.terms_at(i);
    if (terms.empty() || L.exps[i][var] == 0) continue;
    std::array<int, 3> e = L.exps[i];
    const int k = e[var];
    e[var] -= 1;
    r.mutable_terms_at(L.index(e)) = detail::scale_terms(terms, Rational(k));
  }
  std::vector<int> prof(f.order() + 1);
  for (int j = 0; j <= f.order(); ++j) prof[j] = f.exact_degree(j + 1);
  for (int j = 0; j <= f.order(); ++j) r.restrict_exactness(j, prof[j]);
  for (int j = 0; j <= f.order(); ++j) r.restrict_stability(j, f.stable_degree(j + 1));
  r.set_tail_exact(f.tail_exact());
  return r;
}

Series integrate(const Series &f, int var) {
  if (var < 0 || var >= f.nvars()) throw ShapeMismatch("integration variable out of range");
  const SeriesLayout &L = f.layout();
  Series r(f.algebra(), f.arity(), f.nvars(), f.order());
  bool dropped = false;
  for (int i = 0; i < L.size(); ++i) {
    const auto &terms = f.terms_at(i);
    if (terms.empty()) continue;
    if (L.total[i] + 1 > f.order()) {
      dropped = true;
      continue;
    }
    std::array<int, 3> e = L.exps[i];
    const int k = e[var] + 1;
    e[var] += 1;
    r.mutable_terms_at(L.index(e)) = detail::scale_terms(terms, Rational(1, k));
  }
  for (int j = 1; j <= f.order(); ++j) {
    r.restrict_exactness(j, f.exact_degree(j - 1));
    r.restrict_stability(j, f.stable_degree(j - 1));
  }
  r.set_tail_exact(dropped ? kUnknown : std::min(f.tail_exact(), f.exact_degree(f.order())));
  return r;
}

namespace {

// Inverse of a constant with full counit 1 via the finite geometric series
// in its nilpotent part.
TensorElement unipotent_inverse(const TensorElement &k) {
  const AlgebraPtr &alg = k.algebra();
  const TensorElement one = TensorElement::unit(alg, k.arity());
  const TensorElement u = one - k;
  TensorElement inv = one;
  TensorElement pw = one;
  const int limit = k.arity() * alg->degree_bound() / std::max(1, alg->min_generator_degree()) + 2;
  for (int i = 0; i < limit && !pw.is_zero(); ++i) {
    pw = pw * u;
    inv += pw;
  }
  if (!pw.is_zero()) {
    throw NonInvertibleConstantTerm("constant term is not unipotent");
  }
  return inv;
}

}  // namespace

Series mul_inverse(const Series &f) {
  const TensorElement k = f.constant_term();
  const Rational fc = k.full_counit();
  if (!fc.is_one()) {
    throw NonInvertibleConstantTerm("full counit of the constant term is " + fc.str() +
                                    ", expected 1");
  }
  const TensorElement inv0 = unipotent_inverse(k);
  const int n = f.order();
  const Series neg_w = inv0 * (Series::constant(k, f.nvars(), n) - f);
  Series acc = Series::constant(TensorElement::unit(f.algebra(), f.arity()), f.nvars(), n);
  Series pw = acc;
  for (int i = 1; i <= n; ++i) {
    pw = pw * neg_w;
    acc += pw;
    if (pw.is_zero()) break;
  }
  return inv0 * acc;
}

Series comp_inverse(const Series &f) {
  if (f.nvars() != 1) throw ShapeMismatch("comp_inverse needs a one-variable series");
  if (!f.constant_term().is_zero()) {
    throw NonZeroConstantTerm("compositional inverse needs a zero constant term");
  }
  const int n = f.order();
  if (n < 1) throw ShapeMismatch("comp_inverse needs order >= 1");
  const TensorElement b0 = f.coefficient({1});
  const Rational fc = b0.full_counit();
  if (!fc.is_one()) {
    throw NonInvertibleConstantTerm("linear coefficient has full counit " + fc.str() +
                                    ", expected 1");
  }
  const TensorElement b0inv = unipotent_inverse(b0);
  Series h(f.algebra(), f.arity(), 1, n);
  h.set_coefficient({1}, b0inv);
  h.set_polynomial();
  for (int j = 1; j <= n; ++j) {
    h.restrict_exactness(j, f.exact_degree(j));
    h.restrict_stability(j, f.stable_degree(j));
  }
  for (int k = 2; k <= n; ++k) {
    const Series comp = substitute(f, {h});
    const TensorElement r = comp.coefficient({k});
    h.set_coefficient({k}, -(b0inv * r));
    h.restrict_exactness(k, comp.exact_degree(k));
    h.restrict_stability(k, comp.stable_degree(k));
  }
  const bool linear = f.max_nonzero_order() <= 1;
  if (!(linear && f.is_polynomial())) h.set_tail_exact(kUnknown);
  return h;
}

Series map_coefficients(const Series &f, const CoefficientMap &fn) {
  const TensorElement probe = fn(TensorElement(f.algebra(), f.arity()));
  Series r(f.algebra(), probe.arity(), f.nvars(), f.order());
  const SeriesLayout &L = f.layout();
  // Coefficients enter fn carrying the profile of their order, so a
  // coproduct in fn reports how far its output is certified.
  std::vector<int> exact(f.order() + 1, kExact);
  std::vector<int> stable(f.order() + 1, kExact);
  for (int j = 0; j <= f.order(); ++j) {
    TensorElement z(f.algebra(), f.arity());
    z.set_exact_degree(f.exact_degree(j));
    z.set_stable_degree(f.stable_degree(j));
    const TensorElement out = fn(z);
    exact[j] = std::min(f.exact_degree(j), out.exact_degree());
    stable[j] = std::min(f.stable_degree(j), out.stable_degree());
  }
  for (int i = 0; i < L.size(); ++i) {
    if (f.terms_at(i).empty()) continue;
    const int j = L.total[i];
    TensorElement c = f.coefficient_at(i);
    c.set_exact_degree(f.exact_degree(j));
    c.set_stable_degree(f.stable_degree(j));
    const TensorElement out = fn(c);
    if (out.arity() != probe.arity()) throw ArityMismatch("coefficient map changes arity");
    r.mutable_terms_at(i) = out.terms();
    exact[j] = std::min(exact[j], out.exact_degree());
    stable[j] = std::min(stable[j], out.stable_degree());
  }
  for (int j = 0; j <= f.order(); ++j) {
    r.restrict_exactness(j, exact[j]);
    r.restrict_stability(j, stable[j]);
  }
  r.set_tail_exact(f.tail_exact());
  if (f.tail_exact() < kExact) {
    TensorElement z(f.algebra(), f.arity());
    z.set_exact_degree(f.tail_exact());
    z.set_stable_degree(f.stable_degree(f.order() + 1));
    r.set_tail_exact(std::min(f.tail_exact(), fn(z).exact_degree()));
  }
  return r;
}

Series map_slot(const Series &f, int slot, SlotMap map) {
  return map_coefficients(f, [slot, map](const TensorElement &c) {
    return apply_slot(c, slot, map);
  });
}

Series embed_coefficients(const Series &f, int target_arity, std::span<const int> slots) {
  std::vector<int> sl(slots.begin(), slots.end());
  return map_coefficients(f, [target_arity, sl](const TensorElement &c) {
    return embed(c, target_arity, sl);
  });
}

}  // namespace fglog

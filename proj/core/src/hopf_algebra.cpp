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

#include "fglog/hopf_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fglog/errors.hpp"

namespace fglog {
namespace {

using Coproduct = std::map<std::pair<int, int>, Rational>;

void add_into(Coproduct &acc, int l, int r, const Rational &c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace({l, r}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

std::vector<HopfTables::CoproductEntry> to_entries(const Coproduct &acc) {
  std::vector<HopfTables::CoproductEntry> out;
  out.reserve(acc.size());
  for (const auto &[k, c] : acc) out.push_back({k.first, k.second, c});
  return out;
}

}  // namespace

int HopfAlgebra::degree_of(const Monomial &m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    d += m.exponents[i] * spec_.generators[i].degree;
  }
  return d;
}

std::optional<int> HopfAlgebra::index_of(const Monomial &m) const {
  if (m.exponents.size() != spec_.generators.size()) return std::nullopt;
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> HopfAlgebra::generator_index(const std::string &name) const {
  for (std::size_t i = 0; i < spec_.generators.size(); ++i) {
    if (spec_.generators[i].name == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::string HopfAlgebra::monomial_name(int i) const {
  const Monomial &m = basis_[i];
  std::ostringstream os;
  bool first = true;
  for (std::size_t g = 0; g < m.exponents.size(); ++g) {
    if (m.exponents[g] == 0) continue;
    if (!first) os << "·";
    first = false;
    os << spec_.generators[g].name;
    if (m.exponents[g] > 1) os << '^' << m.exponents[g];
  }
  if (first) return "1";
  return os.str();
}

void HopfAlgebra::enumerate_basis() {
  const std::size_t n = spec_.generators.size();
  std::vector<Monomial> all;
  Monomial cur{std::vector<int>(n, 0)};
  // Depth-first enumeration of exponent vectors under the degree bound.
  auto rec = [&](auto &&self, std::size_t g, int budget) -> void {
    if (g == n) {
      all.push_back(cur);
      return;
    }
    const int d = spec_.generators[g].degree;
    for (int e = 0; e * d <= budget; ++e) {
      cur.exponents[g] = e;
      self(self, g + 1, budget - e * d);
    }
    cur.exponents[g] = 0;
  };
  rec(rec, 0, spec_.degree_bound);
  // Graded order: degree ascending, then lexicographically descending
  // exponents, so t precedes u and t^2 precedes t·u.
  std::sort(all.begin(), all.end(), [&](const Monomial &a, const Monomial &b) {
    const int da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db;
    return a.exponents > b.exponents;
  });
  basis_ = std::move(all);
  degrees_.clear();
  index_.clear();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    degrees_.push_back(degree_of(basis_[i]));
    index_.emplace(basis_[i], static_cast<int>(i));
  }
  min_gen_degree_ = 1;
  if (n > 0) {
    min_gen_degree_ = spec_.generators[0].degree;
    for (const auto &g : spec_.generators) {
      min_gen_degree_ = std::min(min_gen_degree_, g.degree);
    }
  }
}

AlgebraPtr HopfAlgebra::from_tables(AlgebraSpec spec, HopfTables tables) {
  std::shared_ptr<HopfAlgebra> h(new HopfAlgebra());
  h->spec_ = std::move(spec);
  h->enumerate_basis();
  const auto dim = static_cast<std::size_t>(h->dimension());
  if (tables.product.size() != dim * dim || tables.coproduct.size() != dim ||
      tables.counit.size() != dim || tables.antipode.size() != dim) {
    throw SpecError("structure tables do not match the basis dimension");
  }
  h->monomial_products_ = std::all_of(
      tables.product.begin(), tables.product.end(),
      [](const HopfTables::Product &p) { return p.index < 0 || p.coef.is_one(); });
  h->tables_ = std::move(tables);
  return h;
}

AlgebraPtr HopfAlgebra::build(const AlgebraSpec &spec) {
  if (spec.degree_bound < 0) throw SpecError("degree bound must be non-negative");
  std::set<std::string> names;
  for (const auto &g : spec.generators) {
    if (g.name.empty() || g.name == "1") {
      throw SpecError("invalid generator name '" + g.name + "'");
    }
    if (!names.insert(g.name).second) {
      throw SpecError("duplicate generator '" + g.name + "'");
    }
    if (g.degree < 1) {
      throw SpecError("generator '" + g.name + "' must have positive degree");
    }
    if (g.degree > spec.degree_bound) {
      throw DegreeOverflow("generator '" + g.name + "' of degree " +
                           std::to_string(g.degree) + " exceeds bound " +
                           std::to_string(spec.degree_bound));
    }
  }
  for (const auto &[name, terms] : spec.coproduct) {
    if (!names.count(name)) {
      throw SpecError("coproduct given for unknown generator '" + name + "'");
    }
  }

  std::shared_ptr<HopfAlgebra> h(new HopfAlgebra());
  h->spec_ = spec;
  h->enumerate_basis();
  const int dim = h->dimension();
  const std::size_t ngen = spec.generators.size();
  HopfTables &t = h->tables_;

  t.product.resize(static_cast<std::size_t>(dim) * dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      Monomial m = h->basis_[i];
      for (std::size_t g = 0; g < ngen; ++g) m.exponents[g] += h->basis_[j].exponents[g];
      auto idx = h->index_of(m);
      t.product[static_cast<std::size_t>(i) * dim + j] = {idx ? *idx : -1, Rational(1)};
    }
  }

  t.counit.assign(dim, Rational(0));
  t.counit[0] = Rational(1);

  // Coproducts of generators, validated.
  std::vector<Coproduct> gen_coproduct(ngen);
  for (std::size_t g = 0; g < ngen; ++g) {
    const Generator &gen = spec.generators[g];
    Monomial unit{std::vector<int>(ngen, 0)};
    Monomial self = unit;
    self.exponents[g] = 1;
    const int self_idx = *h->index_of(self);
    Coproduct &cp = gen_coproduct[g];
    auto it = spec.coproduct.find(gen.name);
    if (it == spec.coproduct.end()) {
      add_into(cp, self_idx, 0, Rational(1));
      add_into(cp, 0, self_idx, Rational(1));
    } else {
      for (const CoproductTerm &term : it->second) {
        if (term.left.exponents.size() != ngen || term.right.exponents.size() != ngen) {
          throw SpecError("coproduct term of '" + gen.name + "' has wrong exponent length");
        }
        const int dl = h->degree_of(term.left), dr = h->degree_of(term.right);
        if (dl + dr != gen.degree) {
          throw SpecError("coproduct of '" + gen.name + "' is not degree-homogeneous");
        }
        auto li = h->index_of(term.left), ri = h->index_of(term.right);
        if (!li || !ri) {
          throw DegreeOverflow("coproduct of '" + gen.name + "' leaves the degree bound");
        }
        add_into(cp, *li, *ri, term.coef);
      }
    }
    // Counit axiom: (ε⊗id)Δg = g = (id⊗ε)Δg.
    Coproduct left, right;
    for (const auto &[k, c] : cp) {
      if (k.first == 0) add_into(left, 0, k.second, c);
      if (k.second == 0) add_into(right, k.first, 0, c);
    }
    const bool ok_left = left.size() == 1 && left.begin()->first.second == self_idx &&
                         left.begin()->second.is_one();
    const bool ok_right = right.size() == 1 && right.begin()->first.first == self_idx &&
                          right.begin()->second.is_one();
    if (!ok_left || !ok_right) {
      throw SpecError("coproduct of '" + gen.name + "' is not counital");
    }
  }

  // Extend Δ multiplicatively along the graded basis order.
  std::vector<Coproduct> cop(dim);
  add_into(cop[0], 0, 0, Rational(1));
  std::vector<std::pair<int, int>> split(dim, {-1, -1});  // (generator, cofactor)
  for (int i = 1; i < dim; ++i) {
    const Monomial &m = h->basis_[i];
    std::size_t g = 0;
    while (m.exponents[g] == 0) ++g;
    Monomial rest = m;
    rest.exponents[g] -= 1;
    const int rest_idx = *h->index_of(rest);
    split[i] = {static_cast<int>(g), rest_idx};
    for (const auto &[a, ca] : gen_coproduct[g]) {
      for (const auto &[b, cb] : cop[rest_idx]) {
        const auto &pl = h->product(a.first, b.first);
        const auto &pr = h->product(a.second, b.second);
        if (pl.index < 0 || pr.index < 0) continue;  // cannot happen: homogeneous
        add_into(cop[i], pl.index, pr.index, ca * cb);
      }
    }
  }
  t.coproduct.resize(dim);
  for (int i = 0; i < dim; ++i) t.coproduct[i] = to_entries(cop[i]);

  // Antipode solved from μ(S⊗id)Δg = 0 for each generator g, extended
  // multiplicatively. Every S(a) needed has lower degree than g.
  std::vector<std::map<int, Rational>> anti(dim);
  anti[0][0] = Rational(1);
  auto mul_into = [&](std::map<int, Rational> &acc, const std::map<int, Rational> &x,
                      int y_idx, const Rational &scale) {
    for (const auto &[xi, xc] : x) {
      const auto &p = h->product(xi, y_idx);
      if (p.index < 0) continue;
      Rational c = xc * scale;
      auto [it, ins] = acc.try_emplace(p.index, c);
      if (!ins) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  };
  for (int i = 1; i < dim; ++i) {
    const auto [g, rest_idx] = split[i];
    if (rest_idx == 0) {
      std::map<int, Rational> s;
      for (const auto &[k, c] : gen_coproduct[g]) {
        if (k.first == i) continue;  // the g⊗1 term, coefficient 1
        mul_into(s, anti[k.first], k.second, -c);
      }
      anti[i] = std::move(s);
    } else {
      std::map<int, Rational> s;
      Monomial gm{std::vector<int>(ngen, 0)};
      gm.exponents[g] = 1;
      const int gi = *h->index_of(gm);
      for (const auto &[a, ca] : anti[gi]) mul_into(s, anti[rest_idx], a, ca);
      anti[i] = std::move(s);
    }
  }
  t.antipode.resize(dim);
  for (int i = 0; i < dim; ++i) {
    for (const auto &[k, c] : anti[i]) t.antipode[i].push_back({k, c});
  }
  h->monomial_products_ = true;
  return h;
}

namespace builtin {

AlgebraSpec trivial_spec(int degree_bound) {
  AlgebraSpec s;
  s.degree_bound = degree_bound;
  return s;
}

AlgebraSpec primitive_spec(const std::vector<Generator> &generators, int degree_bound) {
  AlgebraSpec s;
  s.generators = generators;
  s.degree_bound = degree_bound;
  return s;
}

AlgebraSpec divided_square_spec(int degree_bound) {
  AlgebraSpec s;
  s.generators = {{"t1", 1}, {"t2", 2}};
  s.degree_bound = degree_bound;
  s.coproduct["t2"] = {
      {Monomial{{0, 1}}, Monomial{{0, 0}}, Rational(1)},
      {Monomial{{1, 0}}, Monomial{{1, 0}}, Rational(1)},
      {Monomial{{0, 0}}, Monomial{{0, 1}}, Rational(1)},
  };
  return s;
}

std::optional<AlgebraSpec> lookup(const std::string &name, int degree_bound) {
  if (name == "trivial") return trivial_spec(degree_bound);
  if (name == "qt1") return primitive_spec({{"t", 1}}, degree_bound);
  if (name == "qt2") return primitive_spec({{"t", 2}}, degree_bound);
  if (name == "qtu") return primitive_spec({{"t", 1}, {"u", 2}}, degree_bound);
  if (name == "qt12") return divided_square_spec(degree_bound);
  return std::nullopt;
}

}  // namespace builtin
}  // namespace fglog

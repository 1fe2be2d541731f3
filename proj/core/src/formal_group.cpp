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

#include "fglog/formal_group.hpp"

#include <algorithm>

#include "fglog/errors.hpp"
#include "fglog/io.hpp"

namespace fglog {
namespace {

const Series &require_group_shape(const Series &f) {
  if (f.nvars() != 2) throw ShapeMismatch("a group law needs two variables");
  if (f.arity() != 2) throw ArityMismatch("a group law needs arity-2 coefficients");
  return f;
}

Series zero_series(const AlgebraPtr &alg, int arity, int nvars, int order) {
  Series z(alg, arity, nvars, order);
  z.set_polynomial();
  return z;
}

// One-variable series over H placed in tensor slot `slot` and variable
// `slot` of a two-variable series: (g⊗1)(X) for slot 0, (1⊗g)(Y) for 1.
Series lift(const Series &g, int slot) {
  return relabel_variables(embed_coefficients(g, 2, {slot}), 2, {slot});
}

// ε̃ in tensor slot `slot`: that variable set to 0, ε applied in the slot.
Series eps_tilde(const Series &f, int slot) {
  const Series x = Series::variable(f.algebra(), f.arity(), 1, f.order(), 0);
  const Series z = zero_series(f.algebra(), f.arity(), 1, f.order());
  const Series s = slot == 1 ? substitute(f, {x, z}) : substitute(f, {z, x});
  return map_slot(s, slot, SlotMap::kCounit);
}

TensorElement mu_id_s(const TensorElement &c) {
  return contract_mul(apply_slot(c, 1, SlotMap::kAntipode), 0);
}

class ReportBuilder {
 public:
  void add(const char *name, Series defect) {
    report_.certified_order = std::min(report_.certified_order, defect.exact_order());
    if (!defect.is_zero()) {
      report_.pass = false;
      report_.violations.push_back({name, std::move(defect)});
    }
  }
  // Throws TruncationInsufficient when everything vanished but some order
  // up to `needed` is uncertified.
  Report finish(int needed, const char *what) {
    if (report_.pass && report_.certified_order < needed) {
      throw TruncationInsufficient(std::string(what) + " certified only through order " +
                                   std::to_string(report_.certified_order) +
                                   ", need order " + std::to_string(needed));
    }
    return std::move(report_);
  }

 private:
  Report report_;
};

Series constant_defect(const TensorElement &d) { return Series::constant(d, 1, 0); }

Series associativity_defect(const Series &f) {
  const AlgebraPtr &alg = f.algebra();
  const int n = f.order();
  const Series f12 = embed_coefficients(relabel_variables(f, 3, {0, 1}), 3, {0, 1});
  const Series f23 = embed_coefficients(relabel_variables(f, 3, {1, 2}), 3, {1, 2});
  const Series x = Series::variable(alg, 3, 3, n, 0);
  const Series z = Series::variable(alg, 3, 3, n, 2);
  const Series lhs = substitute(map_slot(f, 1, SlotMap::kCoproduct), {x, f23});
  const Series rhs = substitute(map_slot(f, 0, SlotMap::kCoproduct), {f12, z});
  return lhs - rhs;
}

TensorElement unipotent_inverse(const TensorElement &a) {
  return mul_inverse(Series::constant(a, 1, 0)).constant_term();
}

}  // namespace

FormalGroupLaw::FormalGroupLaw(Series f) : f_(std::move(f)) {
  require_group_shape(f_);
  const Rational k = f_.constant_term().full_counit();
  if (!k.is_zero()) {
    throw NonNilpotentConstantTerm("constant term of a group law has full counit " + k.str());
  }
}

Cocycle::Cocycle(TensorElement c) : c_(std::move(c)) {
  const Report r = check_cocycle(c_);
  if (!r.pass) {
    const Violation &v = r.violations.front();
    throw CocycleViolation(v.axiom + " condition fails with defect " +
                           format_element(v.defect.constant_term()));
  }
}

Logarithm::Logarithm(Series g) : g_(std::move(g)) {
  if (g_.nvars() != 1) throw ShapeMismatch("a logarithm has one variable");
  if (g_.arity() != 1) throw ArityMismatch("a logarithm has arity-1 coefficients");
  if (!g_.constant_term().is_zero()) {
    throw NonZeroConstantTerm("a logarithm has zero constant term");
  }
  const Rational e = g_.order() >= 1 ? counit(g_.coefficient({1})) : Rational(0);
  if (!e.is_one()) {
    throw NonInvertibleConstantTerm("linear coefficient of a logarithm has counit " + e.str() +
                                    ", expected 1");
  }
}

Report check_axioms(const FormalGroupLaw &F) {
  const Series &f = F.series();
  const AlgebraPtr &alg = f.algebra();
  const int n = f.order();
  const Series x = Series::variable(alg, 1, 1, n, 0);
  ReportBuilder b;
  b.add(axiom::kUnitRight, eps_tilde(f, 1) - x);
  b.add(axiom::kUnitLeft, eps_tilde(f, 0) - x);
  const Series swapped = map_coefficients(
      f.permuted_variables(std::array<int, 2>{1, 0}),
      [](const TensorElement &c) { return c.swapped(); });
  b.add(axiom::kSymmetry, swapped - f);
  b.add(axiom::kAssociativity, associativity_defect(f));
  return b.finish(n, "axiom check");
}

Series invariant_differential(const FormalGroupLaw &F) {
  return eps_tilde(derivative(F.series(), 1), 1);
}

Logarithm logarithm(const FormalGroupLaw &F) {
  return Logarithm(integrate(mul_inverse(invariant_differential(F)), 0));
}

Cocycle extract_cocycle(const FormalGroupLaw &F, const Logarithm &lg) {
  const Series &f = F.series();
  if (lg.algebra() != F.algebra()) throw AlgebraMismatch("logarithm over another algebra");
  const int n = f.order();
  const Series g = lg.order() == n ? lg.series() : lg.series().with_order(n);
  const Series dg = map_slot(g, 0, SlotMap::kCoproduct);
  const Series G = substitute(dg, {f}) - lift(g, 0) - lift(g, 1);
  const SeriesLayout &L = G.layout();
  for (int i = 1; i < L.size(); ++i) {
    if (G.terms_at(i).empty()) continue;
    throw ResidualNonConstant("coefficient of X^" + std::to_string(L.exps[i][0]) + "·Y^" +
                              std::to_string(L.exps[i][1]) + " is " +
                              format_element(G.coefficient_at(i)));
  }
  const int full = 2 * F.algebra()->degree_bound();
  if (G.exact_order() < n || G.exact_degree(0) < full) {
    throw TruncationInsufficient("cocycle certified only through degree " +
                                 std::to_string(G.exact_degree(0)) + " and order " +
                                 std::to_string(G.exact_order()));
  }
  // Both ε̃-projections of G must vanish; this catches slot mix-ups that
  // the constancy test alone would miss.
  for (int slot : {1, 0}) {
    const Series p = eps_tilde(G, slot);
    if (!p.is_zero()) {
      throw CocycleViolation(std::string(slot == 1 ? "(id⊗ε̃)" : "(ε̃⊗id)") +
                             " projection of the cocycle is " + format_series(p));
    }
  }
  return Cocycle(G.constant_term());
}

TensorElement cocycle_defect(const TensorElement &c) {
  if (c.arity() != 2) throw ArityMismatch("a 2-cochain has arity 2");
  return apply_slot(c, 1, SlotMap::kCoproduct) + embed(c, 3, {1, 2}) -
         apply_slot(c, 0, SlotMap::kCoproduct) - embed(c, 3, {0, 1});
}

Report check_cocycle(const TensorElement &c) {
  ReportBuilder b;
  b.add(axiom::kCocycle, constant_defect(cocycle_defect(c)));
  b.add(axiom::kCounitRight, constant_defect(apply_slot(c, 1, SlotMap::kCounit)));
  b.add(axiom::kCounitLeft, constant_defect(apply_slot(c, 0, SlotMap::kCounit)));
  return b.finish(0, "cocycle check");
}

FormalGroupLaw additive_cocycle_group(const TensorElement &c, int order) {
  if (c.arity() != 2) throw ArityMismatch("a 2-cochain has arity 2");
  const AlgebraPtr &alg = c.algebra();
  return FormalGroupLaw(Series::constant(c, 2, order) + Series::variable(alg, 2, 2, order, 0) +
                        Series::variable(alg, 2, 2, order, 1));
}

FormalGroupLaw additive_cocycle_group(const Cocycle &c, int order) {
  return additive_cocycle_group(c.element(), order);
}

bool is_additive_cocycle_form(const FormalGroupLaw &F) {
  const Series &f = F.series();
  if (f.order() < 1) return false;
  const TensorElement one = TensorElement::unit(f.algebra(), 2);
  const SeriesLayout &L = f.layout();
  for (int i = 1; i < L.size(); ++i) {
    if (L.total[i] == 1) {
      if (!(f.coefficient_at(i) == one)) return false;
    } else if (!f.terms_at(i).empty()) {
      return false;
    }
  }
  return true;
}

Series additive_cocycle_inverse(const TensorElement &c, int order) {
  const AlgebraPtr &alg = c.algebra();
  return -Series::constant(mu_id_s(c), 1, order) - Series::variable(alg, 1, 1, order, 0);
}

Series inverse_residual(const FormalGroupLaw &F, const Series &theta) {
  const Series &f = F.series();
  const Series p = map_coefficients(f, mu_id_s);
  const Series x = Series::variable(f.algebra(), 1, 1, f.order(), 0);
  return substitute(p, {x, theta});
}

namespace {

Series verified_inverse(const FormalGroupLaw &F, Series theta) {
  const Series r = inverse_residual(F, theta);
  if (!r.is_zero()) {
    throw NoInverse("inverse residual does not vanish: " + format_series(r));
  }
  if (r.exact_order() < F.order()) {
    throw TruncationInsufficient("inverse residual certified only through order " +
                                 std::to_string(r.exact_order()));
  }
  return theta;
}

}  // namespace

Series inverse_series(const FormalGroupLaw &F) {
  const Series &f = F.series();
  const AlgebraPtr &alg = f.algebra();
  const int n = f.order();
  if (is_additive_cocycle_form(F)) return verified_inverse(F, additive_cocycle_inverse(f.constant_term(), n));

  const Series p = map_coefficients(f, mu_id_s);
  std::vector<TensorElement> p0;  // coefficients of P(0, v)
  for (int j = 0; j <= n; ++j) p0.push_back(p.coefficient({0, j}));
  const auto eval = [&](const TensorElement &v) {
    TensorElement acc(alg, 1);
    for (int j = n; j >= 0; --j) acc = acc * v + p0[j];
    return acc;
  };
  TensorElement j0inv(alg, 1);
  try {
    j0inv = unipotent_inverse(p0.size() > 1 ? p0[1] : TensorElement(alg, 1));
  } catch (const NonInvertibleConstantTerm &e) {
    throw NoInverse(std::string("linear coefficient is not invertible: ") + e.what());
  }

  // Constant term: P(0, θ0) = 0. Each step gains at least one degree since
  // θ0 stays in the augmentation ideal.
  TensorElement theta0(alg, 1);
  const int steps = alg->degree_bound() / std::max(1, alg->min_generator_degree()) + 2;
  for (int i = 0; i < steps; ++i) {
    const TensorElement r = eval(theta0);
    if (r.is_zero()) break;
    theta0 -= j0inv * r;
  }
  if (!eval(theta0).is_zero()) throw NoInverse("no constant term solves P(0, v) = 0");

  TensorElement jac(alg, 1);
  TensorElement pw = TensorElement::unit(alg, 1);
  for (int j = 1; j <= n; ++j) {
    jac += Rational(j) * (p0[j] * pw);
    pw = pw * theta0;
  }
  TensorElement jinv(alg, 1);
  try {
    jinv = unipotent_inverse(jac);
  } catch (const NonInvertibleConstantTerm &e) {
    throw NoInverse(std::string("Jacobian is not invertible: ") + e.what());
  }

  Series theta(alg, 1, 1, n);
  theta.set_coefficient({0}, theta0);
  theta.set_polynomial();
  const Series x = Series::variable(alg, 1, 1, n, 0);
  for (int k = 1; k <= n; ++k) {
    const Series r = substitute(p, {x, theta});
    theta.set_coefficient({k}, -(jinv * r.coefficient({k})));
    theta.restrict_exactness(k, r.exact_degree(k));
    theta.restrict_stability(k, r.stable_degree(k));
  }
  theta.set_tail_exact(kUnknown);
  return verified_inverse(F, std::move(theta));
}

Series reconstruct_series(const Logarithm &lg, const TensorElement &c) {
  if (c.arity() != 2) throw ArityMismatch("a 2-cochain has arity 2");
  if (c.algebra() != lg.algebra()) throw AlgebraMismatch("cocycle over another algebra");
  const int n = lg.order();
  const int d = lg.algebra()->degree_bound();
  // A nilpotent constant c pulls high orders of (Δg)^{-1} down to low ones;
  // for polynomial g, invert to an order where that spill-over exceeds the
  // top degree 2D of H⊗H.
  int m = n;
  if (!c.is_zero() && lg.series().is_polynomial()) {
    const int delta = std::max(1, c.min_total_degree());
    m = std::max(n, n - 1 + (2 * d + delta) / delta);
  }
  const Series g = lg.series().with_order(m);
  const Series h = comp_inverse(map_slot(g, 0, SlotMap::kCoproduct));
  const Series arg = Series::constant(c, 2, m) + lift(g, 0) + lift(g, 1);
  return substitute(h, {arg}).with_order(n);
}

FormalGroupLaw reconstruct(const Logarithm &g, const Cocycle &c) {
  FormalGroupLaw F(reconstruct_series(g, c.element()));
  const Report r = check_axioms(F);
  if (!r.pass) {
    const Violation &v = r.violations.front();
    throw AxiomViolation("reconstructed series fails " + v.axiom + " with defect " +
                         format_series(v.defect));
  }
  return F;
}

Report verify_log_equation(const FormalGroupLaw &F, const Logarithm &lg,
                           const TensorElement &c) {
  const Series &f = F.series();
  const int n = f.order();
  const Series g = lg.order() == n ? lg.series() : lg.series().with_order(n);
  const Series lhs = substitute(map_slot(g, 0, SlotMap::kCoproduct), {f});
  const Series rhs = Series::constant(c, 2, n) + lift(g, 0) + lift(g, 1);
  ReportBuilder b;
  b.add(axiom::kLogEquation, lhs - rhs);
  return b.finish(n, "log equation");
}

Report verify_log_equation(const FormalGroupLaw &F, const Logarithm &g, const Cocycle &c) {
  return verify_log_equation(F, g, c.element());
}

Report verify_differential_equation(const FormalGroupLaw &F) {
  const Series &f = F.series();
  const Series w = invariant_differential(F);
  const Series lhs = substitute(map_slot(w, 0, SlotMap::kCoproduct), {f});
  const Series rhs = derivative(f, 1) * lift(w, 1);
  ReportBuilder b;
  b.add(axiom::kDifferential, lhs - rhs);
  return b.finish(f.order() - 1, "differential identity");
}

ClassicalSpecialization specialize_classical(const FormalGroupLaw &F, const Logarithm &lg) {
  const Series &f = F.series();
  const int n = f.order();
  Series law = map_slot(map_slot(f, 1, SlotMap::kCounit), 0, SlotMap::kUnitCounit);
  Series lgc = map_slot(lg.order() == n ? lg.series() : lg.series().with_order(n), 0,
                        SlotMap::kUnitCounit);
  const Series defect = substitute(lgc, {law}) - relabel_variables(lgc, 2, {0}) -
                        relabel_variables(lgc, 2, {1});
  ReportBuilder b;
  b.add(axiom::kClassicalLog, defect);
  return {std::move(law), std::move(lgc), b.finish(-1, "classical identity")};
}

Cocycle coboundary(const HopfElement &h) {
  if (h.arity() != 1) throw ArityMismatch("coboundary takes an element of H");
  const Rational e = counit(h);
  if (!e.is_zero()) throw NotAugmented("ε(h) = " + e.str() + ", expected 0");
  return Cocycle(comul(h) - embed(h, 2, {0}) - embed(h, 2, {1}));
}

}  // namespace fglog

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

#include "fglog/hopf_axioms.hpp"

#include "fglog/io.hpp"
#include "fglog/tensor.hpp"

namespace fglog {
namespace {

HopfAxiomReport fail(const HopfAlgebra &alg, int m, std::string axiom, std::string detail) {
  return {false, std::move(axiom), alg.monomial_name(m), std::move(detail)};
}

std::string mismatch(const TensorElement &lhs, const TensorElement &rhs) {
  return format_element(lhs) + " != " + format_element(rhs);
}

}  // namespace

HopfAxiomReport verify_hopf_axioms(const AlgebraPtr &alg) {
  const HopfAlgebra &h = *alg;
  const int dim = h.dimension();
  const TensorElement one = TensorElement::unit(alg, 1);
  for (int m = 0; m < dim; ++m) {
    const TensorElement e = TensorElement::basis(alg, {m});
    const Rational eps = counit(e);
    const Rational expected_eps(m == 0 ? 1 : 0);
    if (!(eps == expected_eps) || (m != 0 && h.degree(m) == 0)) {
      return fail(h, m, "connectedness", "ε = " + eps.str());
    }

    const TensorElement d = comul(e);
    const TensorElement left = apply_slot(d, 0, SlotMap::kCoproduct);
    const TensorElement right = apply_slot(d, 1, SlotMap::kCoproduct);
    if (!(left == right)) return fail(h, m, "coassociativity", mismatch(left, right));

    const TensorElement cl = apply_slot(d, 0, SlotMap::kCounit);
    const TensorElement cr = apply_slot(d, 1, SlotMap::kCounit);
    if (!(cl == e)) return fail(h, m, "counit", "(ε⊗id)Δ gives " + format_element(cl));
    if (!(cr == e)) return fail(h, m, "counit", "(id⊗ε)Δ gives " + format_element(cr));

    for (int n = 0; n <= m; ++n) {
      const TensorElement f = TensorElement::basis(alg, {n});
      const TensorElement ef = mul(e, f);
      const TensorElement fe = mul(f, e);
      if (!(ef == fe)) return fail(h, m, "commutativity", mismatch(ef, fe));
      if (h.degree(m) + h.degree(n) > h.degree_bound()) continue;
      const TensorElement lhs = comul(ef);
      const TensorElement rhs = d * comul(f);
      if (!(lhs == rhs)) {
        return fail(h, m, "coproduct multiplicative",
                    "with " + h.monomial_name(n) + ": " + mismatch(lhs, rhs));
      }
      const Rational el = counit(ef);
      const Rational er = eps * counit(f);
      if (!(el == er)) {
        return fail(h, m, "counit multiplicative",
                    "with " + h.monomial_name(n) + ": " + el.str() + " != " + er.str());
      }
    }

    const TensorElement target = one * eps;
    const TensorElement sl = contract_mul(apply_slot(d, 0, SlotMap::kAntipode), 0);
    if (!(sl == target)) return fail(h, m, "antipode", "μ(S⊗id)Δ gives " + format_element(sl));
    const TensorElement sr = contract_mul(apply_slot(d, 1, SlotMap::kAntipode), 0);
    if (!(sr == target)) return fail(h, m, "antipode", "μ(id⊗S)Δ gives " + format_element(sr));
  }
  return {};
}

}  // namespace fglog

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

#include <gtest/gtest.h>

#include <random>

#include "build.hpp"
#include "fglog/errors.hpp"
#include "fglog/hopf_axioms.hpp"
#include "fglog/io.hpp"
#include "gen.hpp"

namespace fglog {
namespace {

using build::el;
using build::poly;

TEST(Format, Elements) {
  const AlgebraPtr h = build::qt(2, 8);
  EXPECT_EQ(format_element(el(h, "3t^2", 1)), "3t^2");
  EXPECT_EQ(format_element(el(h, "1 - 1/2 t", 1)), "1 - 1/2·t");
  EXPECT_EQ(format_element(el(h, "2 t⊗t⊗t", 3)), "2(t⊗t⊗t)");
  EXPECT_EQ(format_element(TensorElement(h, 2)), "0");
  const AlgebraPtr u = HopfAlgebra::build(*builtin::lookup("qtu", 6));
  EXPECT_EQ(format_element(el(u, "t u^2", 1)), "t·u^2");
}

TEST(Format, Series) {
  const AlgebraPtr q = build::trivial();
  EXPECT_EQ(format_series(poly(q, 1, 1, 4, {{{1}, "1"}, {{2}, "-1/2"}})), "x - 1/2·x^2");
  const AlgebraPtr h = build::qt(2, 8);
  EXPECT_EQ(format_series(poly(h, 2, 2, 3, {{{1, 1}, "2 t⊗t"}})), "2(t⊗t)·X·Y");
  EXPECT_EQ(format_series(poly(h, 2, 2, 3, {{{2, 0}, "1⊗t"}, {{0, 0}, "2 t⊗t"}})),
            "2(t⊗t) + (1⊗t)·X^2");
  EXPECT_EQ(format_series(poly(h, 1, 1, 3, {{{1}, "1 + t"}}), {"z"}), "(1 + t)·z");
  EXPECT_EQ(format_series(Series(h, 1, 1, 3)), "0");
}

TEST(Parse, Elements) {
  const AlgebraPtr h = build::qt(2, 8);
  EXPECT_EQ(parse_element(h, "t (x) t"), el(h, "t⊗t", 2));
  EXPECT_EQ(parse_element(h, "2*t^2 + t·t"), el(h, "3 t^2", 1));
  EXPECT_EQ(parse_element(h, "(1 + t)(1 - t)"), el(h, "1 - t^2", 1));
  EXPECT_EQ(parse_element(h, "3/4"), TensorElement::scalar(h, 1, Rational(3, 4)));
  EXPECT_EQ(parse_element(h, "-(t⊗1) + 1⊗t"), el(h, "1⊗t - t⊗1", 2));
  EXPECT_EQ(parse_element(h, "2", 2), TensorElement::scalar(h, 2, Rational(2)));
  EXPECT_TRUE(parse_element(h, "t^2 t^3").is_zero());  // product above the bound
  EXPECT_THROW(parse_element(h, "t^5"), DegreeOverflow);

  EXPECT_THROW(parse_element(h, "s"), ParseError);
  EXPECT_THROW(parse_element(h, "t +"), ParseError);
  EXPECT_THROW(parse_element(h, "(t"), ParseError);
  EXPECT_THROW(parse_element(h, "t⊗t + t"), ParseError);
  EXPECT_THROW(parse_element(h, "t⊗t", 1), ParseError);
  EXPECT_THROW(parse_element(h, "1/0"), ParseError);
}

TEST(Json, AlgebraSpec) {
  const std::string text = R"({"generators": [{"name": "t", "degree": 2}], "degree_bound": 6,
    "coproduct": {"t": [[["t"],["1"],"1"], [["1"],["t"],"1"]]}})";
  const AlgebraSpec spec = algebra_spec_from_json(text);
  EXPECT_EQ(spec.generators.size(), 1U);
  EXPECT_EQ(spec.degree_bound, 6);
  const AlgebraPtr a = HopfAlgebra::build(spec);
  EXPECT_EQ(a->dimension(), 4);
  const AlgebraSpec back = algebra_spec_from_json(algebra_spec_to_json(spec));
  EXPECT_EQ(HopfAlgebra::build(back)->tables().coproduct.size(), a->tables().coproduct.size());
  const AlgebraPtr b = HopfAlgebra::build(back);
  EXPECT_EQ(comul(el(b, "t^2", 1)), el(b, "t^2⊗1 + 2 t⊗t + 1⊗t^2", 2));

  const AlgebraSpec prim = algebra_spec_from_json(
      R"({"generators": [{"name": "t", "degree": 1}], "degree_bound": 4, "coproduct": {"t": "primitive"}})");
  EXPECT_TRUE(verify_hopf_axioms(HopfAlgebra::build(prim)).pass);

  EXPECT_THROW(algebra_spec_from_json("{"), ParseError);
  EXPECT_THROW(algebra_spec_from_json(R"({"generators": 3, "degree_bound": 2})"), ParseError);
  EXPECT_THROW(algebra_spec_from_json(
                   R"({"generators": [{"name": "t", "degree": 1}], "degree_bound": 4,
                       "coproduct": {"t": [[["s"],["1"],"1"]]}})"),
               ParseError);
}

TEST(Json, ElementsRoundTrip) {
  gen::Rng rng(41);
  for (const char *name : {"qt1", "qtu", "qt12"}) {
    const AlgebraPtr alg = HopfAlgebra::build(*builtin::lookup(name, 6));
    for (int trial = 0; trial < 20; ++trial) {
      const int arity = gen::uniform(rng, 1, 3);
      const TensorElement e = gen::element(rng, alg, arity, 4);
      EXPECT_EQ(element_from_json(alg, element_to_json(e), arity), e);
    }
  }
  const AlgebraPtr h = build::qt(2, 8);
  EXPECT_EQ(element_from_json(h, R"([[["t"],["t","t"],"2/3"]])"), el(h, "2/3 t⊗t^2", 2));
  EXPECT_EQ(element_from_json(h, R"([[[1],[0],"1"]])"), el(h, "t⊗1", 2));
  EXPECT_EQ(element_from_json(h, R"("t (x) t")"), el(h, "t⊗t", 2));
  EXPECT_THROW(element_from_json(h, R"([[["t"],"1"], [["t"],["t"],"1"]])"), ParseError);
  EXPECT_THROW(element_from_json(h, R"([[["t"],["t"],"x"]])"), ParseError);
}

TEST(Json, SeriesRoundTrip) {
  gen::Rng rng(42);
  const AlgebraPtr alg = HopfAlgebra::build(*builtin::lookup("qt12", 5));
  for (int trial = 0; trial < 10; ++trial) {
    const int nvars = gen::uniform(rng, 1, 3);
    const int arity = gen::uniform(rng, 1, 3);
    Series s = gen::series(rng, alg, arity, nvars, 4, 0.4);
    if (trial % 3 == 1) s.set_tail_exact(kUnknown);
    if (trial % 3 == 2) {
      s.restrict_exactness(3, 4);
      s.restrict_stability(1, 2);
    }
    const Series back = series_from_json(alg, series_to_json(s));
    EXPECT_EQ(back, s);
    EXPECT_EQ(back.exact_profile(), s.exact_profile());
    EXPECT_EQ(back.stable_profile(), s.stable_profile());
    EXPECT_EQ(back.tail_exact(), s.tail_exact());
  }
  const AlgebraPtr h = build::qt(2, 8);
  const Series f = series_from_json(
      h, R"({"variables": ["X","Y"], "order": 8, "arity": 2,
             "terms": [{"exp": [1,1], "coeff": [[["t"],["t"],"2/1"]]}]})");
  EXPECT_EQ(f, poly(h, 2, 2, 8, {{{1, 1}, "2 t⊗t"}}));
  EXPECT_FALSE(f.is_polynomial());
  EXPECT_THROW(series_from_json(h, R"({"variables": ["X"], "order": 2, "arity": 1,
                                      "terms": [{"exp": [3], "coeff": "t"}]})"),
               ParseError);
}

TEST(Json, GroupAndReport) {
  const AlgebraPtr h = build::qt(2, 8);
  const Series f = poly(h, 2, 2, 4, {{{0, 0}, "2 t⊗t"}, {{1, 0}, "1⊗1"}, {{0, 1}, "1⊗1"}});
  const std::string doc = group_to_json(R"("qt2")", f);
  const GroupDocument g = group_document_from_json(doc);
  EXPECT_EQ(g.order, 4);
  EXPECT_EQ(g.hopf, R"("qt2")");
  EXPECT_EQ(series_from_json(h, g.series), f);

  const Report r = check_axioms(additive_cocycle_group(el(h, "t⊗t^2", 2), 3));
  ASSERT_FALSE(r.pass);
  const Report back = report_from_json(h, report_to_json(r));
  EXPECT_EQ(back.pass, r.pass);
  ASSERT_EQ(back.violations.size(), r.violations.size());
  for (std::size_t i = 0; i < r.violations.size(); ++i) {
    EXPECT_EQ(back.violations[i].axiom, r.violations[i].axiom);
    EXPECT_EQ(back.violations[i].defect, r.violations[i].defect);
  }
}

}  // namespace
}  // namespace fglog
